// Command line front end for the workbench: expand products, compare the
// two sides of the integral-series identity, regularize, enumerate
// relations, run rank experiments, evaluate numerically and drive the
// verification suites.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <mzv/mzv.hpp>

namespace {

using nlohmann::json;

std::string mpf_decimal(const mpf_class& x, int digits) {
  if (sgn(x) == 0) return "0";
  mp_exp_t e = 0;
  std::string m = x.get_str(e, 10, static_cast<size_t>(digits));
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m = m.substr(1);
  }
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  long ee = static_cast<long>(e) - 1;
  if (ee != 0) out += "e" + std::to_string(ee);
  return out;
}

std::string show(const mzv::LinComb& x) { return x.in_h1() ? x.zeta_str() : x.str(); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open " + out_path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string relations_csv(int weight, bool skip_trivial) {
  mzv::WeightBasis basis(weight);
  std::ostringstream os;
  os << "family,k,l,weight";
  for (int c = 0; c < basis.size(); ++c) os << ",\"z(" << basis.word_at(c).to_index().str() << ")\"";
  os << "\n";
  mzv::enumerate_relations(weight, skip_trivial, [&](const mzv::RelationRecord& r) {
    std::vector<mzv::Rat> dense(static_cast<size_t>(basis.size()));
    for (const auto& [c, q] : r.vec) dense[static_cast<size_t>(c)] = q;
    os << r.family << ",\"" << r.k.str() << "\",\"" << r.l.str() << "\"," << r.weight;
    for (const auto& q : dense) os << "," << mzv::rat_str(q);
    os << "\n";
  });
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word algebra and numerics for multiple zeta values"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  // --- expand ---
  auto* cmd_expand = app.add_subcommand("expand", "expand a product of two words");
  std::string op = "shuffle", lhs_s, rhs_s;
  bool raw_words = false;
  cmd_expand->add_option("--op", op, "shuffle | harmonic | barstar | circled")
      ->check(CLI::IsMember({"shuffle", "harmonic", "barstar", "circled"}));
  cmd_expand->add_option("A", lhs_s, "left operand, an index like 1,2 (empty for 1)");
  cmd_expand->add_option("B", rhs_s, "right operand");
  cmd_expand->add_flag("--words", raw_words, "operands are raw words over {0,1}, e.g. 110");

  // --- mu ---
  auto* cmd_mu = app.add_subcommand("mu", "both sides of the integral-series identity");
  std::string mu_k, mu_l, mu_format = "text";
  cmd_mu->add_option("K", mu_k, "index of the first argument")->required();
  cmd_mu->add_option("L", mu_l, "index of the second argument")->required();
  cmd_mu->add_option("--format", mu_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  // --- reg ---
  auto* cmd_reg = app.add_subcommand("reg", "regularize to a polynomial in T");
  std::string reg_mode = "sh", reg_arg;
  bool reg_word = false;
  cmd_reg->add_option("--mode", reg_mode, "sh | st | star-sh | star-st")
      ->check(CLI::IsMember({"sh", "st", "star-sh", "star-st"}));
  cmd_reg->add_option("K", reg_arg, "index (or word with --word)")->required();
  cmd_reg->add_flag("--word", reg_word, "argument is a raw word over {0,1}");

  // --- relations ---
  auto* cmd_rel = app.add_subcommand("relations", "enumerate integral-series relations");
  int rel_weight = 0;
  bool rel_skip = false;
  std::string rel_format = "text", rel_out;
  cmd_rel->add_option("--weight", rel_weight, "total weight")->required()->check(CLI::Range(2, 16));
  cmd_rel->add_flag("--skip-trivial", rel_skip, "omit depth-1 second arguments");
  cmd_rel->add_option("--format", rel_format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_rel->add_option("--out", rel_out, "write to a file instead of stdout");

  // --- dims ---
  auto* cmd_dims = app.add_subcommand("dims", "rank of the relation span per weight");
  int dims_max = 8, dims_jobs = 1;
  std::string dims_format = "text";
  cmd_dims->add_option("--max-weight", dims_max, "largest weight")->check(CLI::Range(2, 16));
  cmd_dims->add_option("--jobs", dims_jobs, "worker threads")->check(CLI::Range(1, 256));
  cmd_dims->add_option("--format", dims_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  // --- eval ---
  auto* cmd_eval = app.add_subcommand("eval", "numeric value of a zeta");
  std::string eval_k;
  int eval_prec = 0, eval_digits = 0;
  bool eval_star = false;
  cmd_eval->add_option("K", eval_k, "admissible index")->required();
  cmd_eval->add_option("--prec", eval_prec, "working precision in bits");
  cmd_eval->add_option("--digits", eval_digits, "decimal digits to print");
  cmd_eval->add_flag("--star", eval_star, "evaluate the star variant");

  // --- verify ---
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int v_maxw = 0, v_prec = 0, v_jobs = 1;
  cmd_verify->add_option("--suite", suite, "suite name or 'all'");
  cmd_verify->add_option("--max-weight", v_maxw, "override the suite's weight range");
  cmd_verify->add_option("--prec", v_prec, "override the numeric precision (bits)");
  cmd_verify->add_option("--jobs", v_jobs, "worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_expand) {
      mzv::LinComb a, b;
      if (raw_words) {
        a = mzv::LinComb(mzv::Word::from_string(lhs_s));
        b = mzv::LinComb(mzv::Word::from_string(rhs_s));
      } else {
        a = mzv::LinComb(mzv::Word::of_index(mzv::Index::parse(lhs_s)));
        b = mzv::LinComb(mzv::Word::of_index(mzv::Index::parse(rhs_s)));
      }
      mzv::LinComb r;
      if (op == "shuffle") r = mzv::shuffle(a, b);
      if (op == "harmonic") r = mzv::harmonic(a, b);
      if (op == "barstar") r = mzv::bar_harmonic(a, b);
      if (op == "circled") r = mzv::circled_harmonic(a, b);
      std::cout << show(r) << "\n";
      return 0;
    }

    if (*cmd_mu) {
      mzv::Index k = mzv::Index::parse(mu_k), l = mzv::Index::parse(mu_l);
      mzv::LinComb m = mzv::mu(k, l);
      mzv::LinComb c = mzv::circled_star(k, l);
      if (mu_format == "json") {
        json j{{"k", k.str()}, {"l", l.str()}, {"mu", m.to_json()}, {"circled", c.to_json()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "zeta(mu(" << k.str() << "; " << l.str() << "))  expands to  " << show(m)
                  << "\n";
        std::cout << "(" << k.str() << ") (x) (" << l.str() << ")*  expands to  " << show(c)
                  << "\n";
        mzv::LinComb d = m - c;
        std::cout << "word-level difference: " << (d.is_zero() ? "0" : show(d)) << "\n";
      }
      return 0;
    }

    if (*cmd_reg) {
      mzv::SymTPoly p;
      if (reg_mode == "star-sh" || reg_mode == "star-st") {
        if (reg_word) throw std::invalid_argument("star modes take an index, not a raw word");
        mzv::Index k = mzv::Index::parse(reg_arg);
        p = reg_mode == "star-sh" ? mzv::reg_star_shuffle(k) : mzv::reg_star_harmonic(k);
      } else {
        mzv::Word w = reg_word ? mzv::Word::from_string(reg_arg)
                               : mzv::Word::of_index(mzv::Index::parse(reg_arg));
        p = reg_mode == "sh" ? mzv::reg_shuffle(w) : mzv::reg_harmonic(w);
      }
      std::cout << p.str() << "\n";
      return 0;
    }

    if (*cmd_rel) {
      if (rel_format == "csv") {
        emit(relations_csv(rel_weight, rel_skip), rel_out);
      } else if (rel_format == "json") {
        json arr = json::array();
        mzv::enumerate_relations(rel_weight, rel_skip,
                                 [&](const mzv::RelationRecord& r) { arr.push_back(r.to_json()); });
        emit(arr.dump(2), rel_out);
      } else {
        std::ostringstream os;
        mzv::enumerate_relations(rel_weight, rel_skip, [&](const mzv::RelationRecord& r) {
          os << r.family << " k=(" << r.k.str() << ") l=(" << r.l.str() << "): " << show(r.lhs)
             << "  =  " << show(r.rhs) << "\n";
        });
        emit(os.str(), rel_out);
      }
      return 0;
    }

    if (*cmd_dims) {
      json arr = json::array();
      std::ostringstream os;
      os << "weight  basis  rows  rank  dim  conjectured\n";
      bool all_match = true;
      for (int w = 2; w <= dims_max; ++w) {
        mzv::DimensionReport rep = mzv::dimension_report(w, dims_jobs);
        long conj = mzv::conjectured_dim(w);
        all_match = all_match && rep.dim == conj;
        os << w << "  " << rep.basis_size << "  " << rep.rows << "  " << rep.rank << "  "
           << rep.dim << "  " << conj << "\n";
        arr.push_back(json{{"weight", rep.weight},
                           {"basis", rep.basis_size},
                           {"rows", rep.rows},
                           {"rank", rep.rank},
                           {"dim", rep.dim},
                           {"conjectured", conj}});
      }
      if (dims_format == "json")
        std::cout << arr.dump(2) << "\n";
      else
        std::cout << os.str();
      return all_match ? 0 : 1;
    }

    if (*cmd_eval) {
      mzv::Index k = mzv::Index::parse(eval_k);
      if (!k.admissible()) throw std::invalid_argument("index is not admissible; use reg instead");
      mzv::EvalContext ctx(eval_prec > 0 ? eval_prec : mzv::default_precision_bits());
      mpf_class v = eval_star ? ctx.mzsv(k) : ctx.mzv(k);
      int digits = eval_digits > 0
                       ? eval_digits
                       : static_cast<int>(static_cast<double>(ctx.precision_bits()) * 0.30103) - 2;
      std::cout << "zeta" << (eval_star ? "*" : "") << "(" << k.str() << ") = "
                << mpf_decimal(v, digits) << "\n";
      return 0;
    }

    if (*cmd_verify) {
      mzv::SuiteOptions opt;
      opt.max_weight = v_maxw;
      opt.prec_bits = v_prec;
      opt.jobs = v_jobs;
      std::vector<std::string> names =
          suite == "all" ? mzv::suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      for (const auto& n : names) {
        mzv::SuiteResult r = mzv::run_suite(n, opt);
        std::cout << r.str() << "\n";
        all_ok = all_ok && r.ok();
      }
      return all_ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
