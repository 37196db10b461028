#pragma once

#include <chrono>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eval.hpp"
#include "parallel.hpp"
#include "regularize.hpp"
#include "relations.hpp"
#include "series.hpp"

namespace mzv {

// ---------------------------------------------------------------------
// Machine verification suites.  Each suite checks one theorem or one
// family of invariants over an exhaustive small-scale range and reports
// every case it ran; the first few failures are kept verbatim.
// ---------------------------------------------------------------------

struct SuiteOptions {
  int max_weight = 0;   // 0 = suite default
  int prec_bits = 0;    // 0 = suite default
  int jobs = 1;
  uint64_t seed = 0x5eedbeefcafef00dULL;
};

struct SuiteResult {
  std::string suite;
  long cases = 0;
  long failures = 0;
  double seconds = 0;  // filled in by run_suite; 0 when called directly
  std::vector<std::string> messages;

  bool ok() const { return failures == 0; }

  void pass() { ++cases; }

  void fail(const std::string& msg) {
    ++cases;
    ++failures;
    if (messages.size() < 8) messages.push_back(msg);
  }

  void check(bool good, const std::string& msg) {
    if (good)
      pass();
    else
      fail(msg);
  }

  std::string str() const {
    std::ostringstream os;
    os << (ok() ? "PASS" : "FAIL") << " " << suite << ": " << cases << " cases, " << failures
       << " failures";
    if (seconds > 0) {
      os.precision(1);
      os << " [" << std::fixed << seconds << "s]";
    }
    for (const auto& m : messages) os << "\n  " << m;
    return os.str();
  }
};

namespace detail {

inline std::string fnum(const mpf_class& x) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << mpf_get_d(x.get_mpf_t());
  return os.str();
}

// All nonempty indices of weight between 1 and max_weight, weight ascending
// then lexicographic.
inline std::vector<Index> indices_up_to(int max_weight) {
  std::vector<Index> out;
  for (int w = 1; w <= max_weight; ++w)
    for (const Index& k : compositions(w)) out.push_back(k);
  return out;
}

inline std::vector<Index> admissible_up_to(int max_weight) {
  std::vector<Index> out;
  for (const Index& k : indices_up_to(max_weight))
    if (k.admissible()) out.push_back(k);
  return out;
}

// Run f(i) -> failure message ("" = pass) over n cases, possibly in
// parallel, folding results into r in case order.
template <typename F>
inline void run_cases(SuiteResult& r, size_t n, int jobs, F&& f) {
  std::vector<std::string> msg(n);
  parallel_for(n, jobs, [&](size_t i) { msg[i] = f(i); });
  for (size_t i = 0; i < n; ++i) r.check(msg[i].empty(), msg[i]);
}

}  // namespace detail

// --- word-level identities behind the regularization theorems -----------

inline SuiteResult verify_lemma_identities(SuiteOptions opt = {}) {
  const int maxw = opt.max_weight > 0 ? opt.max_weight : 8;
  SuiteResult r;
  r.suite = "lemma52";
  auto pairs = [&] {
    std::vector<std::pair<Index, Index>> out;
    for (int w = 2; w <= maxw; ++w)
      for (const auto& pr : relation_pairs(w, false)) out.push_back(pr);
    return out;
  }();
  static const char* names[4] = {"A_sh", "A_sh*", "A_*", "A_**"};
  detail::run_cases(r, pairs.size(), opt.jobs, [&](size_t i) -> std::string {
    const auto& [k, l] = pairs[i];
    auto d = lemma_identity_defects(k, l);
    for (int j = 0; j < 4; ++j)
      if (!d[static_cast<size_t>(j)].is_zero())
        return std::string(names[j]) + " defect nonzero at k=(" + k.str() + ") l=(" + l.str() +
               "): " + d[static_cast<size_t>(j)].str();
    return {};
  });
  return r;
}

// --- generating series of e1 powers under the harmonic product ----------

inline SuiteResult verify_expstar(SuiteOptions opt = {}) {
  const int deg = opt.max_weight > 0 ? opt.max_weight : 8;
  SuiteResult r;
  r.suite = "expstar";
  auto mul = [](const LinComb& a, const LinComb& b) { return harmonic(a, b); };

  Series s_plain(deg), s_star(deg);
  for (int n = 1; n <= deg; ++n) {
    LinComb en(Word::of_index(Index{n}));
    s_plain.c[static_cast<size_t>(n)] = en * Rat((n % 2) ? 1 : -1, n);
    s_star.c[static_cast<size_t>(n)] = en * Rat(1, n);
  }
  Series e_plain = series_exp(s_plain, mul);
  Series e_star = series_exp(s_star, mul);
  for (int n = 0; n <= deg; ++n) {
    LinComb ones(ones_word(n));
    r.check(e_plain.c[static_cast<size_t>(n)] == ones,
            "exp_* of sum (-1)^(n-1) e_n u^n/n differs from e1^n at degree " + std::to_string(n) +
                ": " + e_plain.c[static_cast<size_t>(n)].str());
    LinComb star = star_word(Index(std::vector<int>(static_cast<size_t>(n), 1)));
    r.check(e_star.c[static_cast<size_t>(n)] == star,
            "exp_* of sum e_n u^n/n differs from (e1^n)* at degree " + std::to_string(n) + ": " +
                e_star.c[static_cast<size_t>(n)].str());
  }
  return r;
}

// --- the integral-series identity, numerically ---------------------------

inline SuiteResult verify_intser_numeric(SuiteOptions opt = {}) {
  const int maxw = opt.max_weight > 0 ? opt.max_weight : 7;
  const int prec = opt.prec_bits > 0 ? opt.prec_bits : 192;
  SuiteResult r;
  r.suite = "intser";
  auto pairs = [&] {
    std::vector<std::pair<Index, Index>> out;
    for (int w = 2; w <= maxw; ++w)
      for (const auto& pr : relation_pairs(w, false)) out.push_back(pr);
    return out;
  }();
  detail::run_cases(r, pairs.size(), opt.jobs, [&](size_t i) -> std::string {
    thread_local std::unique_ptr<EvalContext> ctx;
    if (!ctx || ctx->precision_bits() != prec) ctx = std::make_unique<EvalContext>(prec);
    const auto& [k, l] = pairs[i];
    mpf_class lhs = ctx->eval(mu(k, l));
    mpf_class rhs = ctx->eval(circled_star(k, l));
    mpf_class diff = abs(lhs - rhs);
    if (diff >= ctx->tolerance())
      return "zeta(mu(k,l)) != zeta(k (x) l*) at k=(" + k.str() + ") l=(" + l.str() +
             "): residual " + detail::fnum(diff);
    return {};
  });
  return r;
}

// --- regularization: symbolic round trip and the comparison theorem ------

inline SuiteResult verify_regularization(SuiteOptions opt = {}) {
  const int maxw = opt.max_weight > 0 ? opt.max_weight : 6;
  const int prec = opt.prec_bits > 0 ? opt.prec_bits : 192;
  SuiteResult r;
  r.suite = "reg";

  std::vector<Word> words;
  for (const Index& k : detail::indices_up_to(maxw)) words.push_back(Word::of_index(k));

  for (const Word& w : words) {
    SymTPoly psh = reg_shuffle(w);
    SymTPoly pst = reg_harmonic(w);
    r.check(tpoly_substitute_e1(psh, ProductKind::Shuffle) == LinComb(w),
            "shuffle regularization does not invert at " + w.letters_str());
    r.check(tpoly_substitute_e1(pst, ProductKind::Harmonic) == LinComb(w),
            "harmonic regularization does not invert at " + w.letters_str());
    for (const auto& c : psh.coeffs())
      r.check(c.in_h0(), "shuffle regularization left a non-admissible word in " + w.letters_str());
    for (const auto& c : pst.coeffs())
      r.check(c.in_h0(), "harmonic regularization left a non-admissible word in " + w.letters_str());
  }

  EvalContext ctx(prec);
  ACoeffs ac = ACoeffs::build(ctx, maxw + 1);
  for (const Word& w : words) {
    NumTPoly zsh = ctx.eval(reg_shuffle(w));
    NumTPoly zst = ctx.eval(reg_harmonic(w));
    mpf_class d = tpoly_distance(zsh, rho_apply(zst, ac, ctx), ctx);
    r.check(d < ctx.tolerance(),
            "Z_sh != rho(Z_*) at " + w.letters_str() + ": distance " + detail::fnum(d));
  }
  return r;
}

inline SuiteResult verify_star_regularization(SuiteOptions opt = {}) {
  const int maxw = opt.max_weight > 0 ? opt.max_weight : 6;
  const int prec = opt.prec_bits > 0 ? opt.prec_bits : 192;
  SuiteResult r;
  r.suite = "regstar";
  EvalContext ctx(prec);
  ACoeffs ac = ACoeffs::build(ctx, maxw + 1);
  for (const Index& k : detail::indices_up_to(maxw)) {
    NumTPoly zsh = ctx.eval(reg_star_shuffle(k));
    NumTPoly zst = ctx.eval(reg_star_harmonic(k));
    mpf_class d = tpoly_distance(zsh, rho_star_apply(zst, ac, ctx), ctx);
    r.check(d < ctx.tolerance(),
            "Z*_sh != rho*(Z*_*) at k=(" + k.str() + "): distance " + detail::fnum(d));
    if (k.admissible()) {
      SymTPoly p = reg_star_harmonic(k);
      r.check(p.degree() <= 0, "harmonic star regularization has T terms at admissible k=(" +
                                   k.str() + "): " + p.str());
      mpf_class direct = ctx.mzsv(k);
      mpf_class viareg = zst.empty() ? ctx.num(0) : zst[0];
      mpf_class d2 = abs(direct - viareg);
      r.check(d2 < ctx.tolerance(),
              "zeta*(k) mismatch at k=(" + k.str() + "): residual " + detail::fnum(d2));
    }
  }
  return r;
}

// --- Kawashima's relation: numeric cases and the word-level machinery ----

inline SuiteResult verify_kawashima(SuiteOptions opt = {}) {
  const int maxtot = opt.max_weight > 0 ? opt.max_weight : 7;
  const int prec = opt.prec_bits > 0 ? opt.prec_bits : 192;
  SuiteResult r;
  r.suite = "kawashima";

  struct Case {
    int m;
    Index k, l;
  };
  std::vector<Case> cases;
  for (int m = 1; m <= maxtot - 2; ++m)
    for (int a = 1; a + m + 1 <= maxtot; ++a)
      for (const Index& k : compositions(a))
        for (int b = 1; m + a + b <= maxtot; ++b)
          for (const Index& l : compositions(b)) cases.push_back({m, k, l});

  detail::run_cases(r, cases.size(), opt.jobs, [&](size_t i) -> std::string {
    thread_local std::unique_ptr<EvalContext> ctx;
    if (!ctx || ctx->precision_bits() != prec) ctx = std::make_unique<EvalContext>(prec);
    const auto& [m, k, l] = cases[i];
    KawashimaSides s = kawashima_sides(m, k, l);
    mpf_class acc = ctx->num(0);
    for (const auto& [a, b] : s.lhs_factors) acc += ctx->eval(a) * ctx->eval(b);
    acc += ctx->eval(s.rhs);
    mpf_class diff = abs(acc);
    if (diff >= ctx->tolerance())
      return "Kawashima relation fails at m=" + std::to_string(m) + " k=(" + k.str() + ") l=(" +
             l.str() + "): residual " + detail::fnum(diff);
    return {};
  });

  // Word-level machinery at small scale.
  const int mw = std::min(maxtot - 2, 5);
  for (int m = 0; m <= 3; ++m)
    for (int a = 1; a <= mw - 1; ++a)
      for (const Index& k : compositions(a))
        for (int b = 1; a + b <= mw; ++b)
          for (const Index& l : compositions(b)) {
            LinComb d = kawashima_b_defect(m, k, l);
            r.check(d.is_zero(), "grafted-chain harmonic identity fails at m=" + std::to_string(m) +
                                     " k=(" + k.str() + ") l=(" + l.str() + "): " + d.str());
            if (m == 0) {
              LinComb dr = kawashima_r_defect(k, l);
              r.check(dr.is_zero(), "R(k bar* l) != R(k) * R(l) at k=(" + k.str() + ") l=(" +
                                        l.str() + "): " + dr.str());
            } else {
              LinComb dp = kawashima_bprime_defect(m, k, l);
              r.check(dp.is_zero(), "primed multiplicativity fails at m=" + std::to_string(m) +
                                        " k=(" + k.str() + ") l=(" + l.str() + "): " + dp.str());
            }
          }
  for (int m = 1; m <= 3; ++m)
    for (int a = 1; a <= mw; ++a)
      for (const Index& k : compositions(a)) {
        LinComb d = kawashima_ab_defect(m, k);
        r.check(d.is_zero(), "grafted fence/chain identity fails at m=" + std::to_string(m) +
                                 " k=(" + k.str() + "): " + d.str());
      }
  return r;
}

// --- restricted sum formula ----------------------------------------------

inline SuiteResult verify_restricted_sum(SuiteOptions opt = {}) {
  const int maxk = opt.max_weight > 0 ? opt.max_weight : 8;
  const int prec = opt.prec_bits > 0 ? opt.prec_bits : 192;
  SuiteResult r;
  r.suite = "rsf";
  struct Case {
    int k, p, q;
  };
  std::vector<Case> cases;
  for (int k = 2; k <= maxk; ++k)
    for (int p = 1; p < k; ++p)
      for (int q = 1; p + q <= k; ++q) cases.push_back({k, p, q});
  detail::run_cases(r, cases.size(), opt.jobs, [&](size_t i) -> std::string {
    thread_local std::unique_ptr<EvalContext> ctx;
    if (!ctx || ctx->precision_bits() != prec) ctx = std::make_unique<EvalContext>(prec);
    const auto& [k, p, q] = cases[i];
    auto [s, t] = restricted_sum_sides(k, p, q);
    mpf_class diff = abs(ctx->eval(s) - ctx->eval(t));
    if (diff >= ctx->tolerance())
      return "restricted sum formula fails at k=" + std::to_string(k) + " p=" + std::to_string(p) +
             " q=" + std::to_string(q) + ": residual " + detail::fnum(diff);
    return {};
  });
  return r;
}

// --- Hoffman's relation ----------------------------------------------------

inline SuiteResult verify_hoffman(SuiteOptions opt = {}) {
  const int maxw = opt.max_weight > 0 ? opt.max_weight : 7;
  const int prec = opt.prec_bits > 0 ? opt.prec_bits : 192;
  SuiteResult r;
  r.suite = "hoffman";
  EvalContext ctx(prec);
  for (const Index& k : detail::admissible_up_to(maxw)) {
    if (k.empty()) continue;
    auto [lhs, rhs] = hoffman_sides(k);
    LinComb defect = (lhs - rhs) + hoffman_via_intser(k);
    r.check(defect.is_zero(),
            "Hoffman relation is not the (k',(1,1)) integral-series instance at k=(" + k.str() +
                "): " + defect.str());
    mpf_class diff = abs(ctx.eval(lhs) - ctx.eval(rhs));
    r.check(diff < ctx.tolerance(),
            "Hoffman relation fails numerically at k=(" + k.str() + "): residual " +
                detail::fnum(diff));
  }
  return r;
}

// --- duality ---------------------------------------------------------------

inline SuiteResult verify_duality(SuiteOptions opt = {}) {
  const int maxw = opt.max_weight > 0 ? opt.max_weight : 8;
  const int prec = opt.prec_bits > 0 ? opt.prec_bits : 192;
  SuiteResult r;
  r.suite = "duality";
  EvalContext ctx(prec);
  for (const Index& k : detail::admissible_up_to(maxw)) {
    Word w = Word::of_index(k);
    Word d = w.dagger();
    r.check(d.in_h0() && d.dagger() == w,
            "dual word is not admissible or not involutive at k=(" + k.str() + ")");
    mpf_class diff = abs(ctx.zeta_word(w) - ctx.zeta_word(d));
    r.check(diff < ctx.tolerance(),
            "duality fails numerically at k=(" + k.str() + "): residual " + detail::fnum(diff));
  }
  return r;
}

// --- double shuffle ---------------------------------------------------------

inline SuiteResult verify_double_shuffle(SuiteOptions opt = {}) {
  const int maxw = opt.max_weight > 0 ? opt.max_weight : 7;
  const int prec = opt.prec_bits > 0 ? opt.prec_bits : 192;
  SuiteResult r;
  r.suite = "doubleshuffle";
  EvalContext ctx(prec);
  auto adm = detail::admissible_up_to(maxw - 2);
  for (const Index& k : adm)
    for (const Index& l : adm) {
      if (k.weight() + l.weight() > maxw) continue;
      LinComb a(Word::of_index(k)), b(Word::of_index(l));
      LinComb sh = shuffle(a, b), st = harmonic(a, b);
      r.check(sh.in_h0() && st.in_h0(),
              "product of admissible words left the admissible span at k=(" + k.str() + ") l=(" +
                  l.str() + ")");
      mpf_class prod = ctx.eval(a) * ctx.eval(b);
      mpf_class d1 = abs(ctx.eval(sh) - prod);
      mpf_class d2 = abs(ctx.eval(st) - prod);
      if (d1 >= ctx.tolerance() || d2 >= ctx.tolerance())
        r.fail("product rule fails at k=(" + k.str() + ") l=(" + l.str() + "): shuffle residual " +
               detail::fnum(d1) + ", harmonic residual " + detail::fnum(d2));
      else
        r.pass();
    }
  return r;
}

// --- the homomorphism from 2-posets to words -------------------------------

namespace detail {

// Sum of label words over all linear extensions, by brute force.
inline LinComb wmap_brute(const Poset2& p) {
  const int n = p.size();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  LinComb acc;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n && ok; ++i) pos[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (i != j && p.less(i, j) && pos[static_cast<size_t>(i)] > pos[static_cast<size_t>(j)])
          ok = false;
    if (!ok) continue;
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(p.label(perm[static_cast<size_t>(i)]));
    acc.add(w, 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

inline Poset2 random_poset(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> nd(1, max_n);
  std::uniform_real_distribution<double> ed(0.0, 1.0);
  int n = nd(rng);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ed(rng) < 0.3) rel.emplace_back(i, j);
  std::vector<int> labels(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = ed(rng) < 0.5 ? 0 : 1;
  return Poset2(n, rel, labels);
}

inline PairPicker random_picker(std::mt19937_64& rng) {
  return [&rng](const Poset2& p) {
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < p.size(); ++i)
      for (int j = i + 1; j < p.size(); ++j)
        if (!p.comparable(i, j)) free.emplace_back(i, j);
    std::uniform_int_distribution<size_t> d(0, free.size() - 1);
    return free[d(rng)];
  };
}

}  // namespace detail

inline SuiteResult verify_wmap(SuiteOptions opt = {}) {
  const int maxw = opt.max_weight > 0 ? opt.max_weight : 5;
  SuiteResult r;
  r.suite = "wmap";
  std::mt19937_64 rng(opt.seed);

  // Random posets: brute-force oracle, picker independence, union rule.
  auto picker = detail::random_picker(rng);
  for (int trial = 0; trial < 200; ++trial) {
    Poset2 p = detail::random_poset(rng, 6);
    LinComb w = wmap(p);
    r.check(w == detail::wmap_brute(p),
            "W differs from the linear extension sum at " + p.debug_str());
    r.check(w == wmap(p, picker), "W depends on the pair resolution order at " + p.debug_str());
    r.check(w == wmap_fast(p), "fast W differs at " + p.debug_str());
    Poset2 q = detail::random_poset(rng, 4);
    r.check(wmap(p.disjoint_union(q)) == shuffle(w, wmap(q)),
            "W of a disjoint union is not the shuffle of the parts at " + p.debug_str() + " | " +
                q.debug_str());
    if (p.admissible())
      r.check(w.in_h0(), "admissible poset mapped outside the admissible span: " + p.debug_str());
  }

  // Exhaustive facts on integral-series posets.
  for (int w = 2; w <= maxw; ++w)
    for (const auto& [k, l] : relation_pairs(w, false)) {
      Poset2 p = mu_poset(k, l);
      r.check(p.admissible(), "mu poset is not admissible at k=(" + k.str() + ") l=(" + l.str() + ")");
      LinComb m = wmap_fast(p);
      bool ones_ok = true;
      const uint32_t expect = static_cast<uint32_t>(k.depth() + l.depth() - 1);
      for (const auto& [word, c] : m.terms())
        if (word.ones() != expect || !word.in_h0()) ones_ok = false;
      r.check(ones_ok, "mu image has a word of wrong depth or outside the admissible span at k=(" +
                           k.str() + ") l=(" + l.str() + ")");
      Word chain_word = Word::of_index(k);
      r.check(wmap_fast(chain_poset(k)) == LinComb(chain_word),
              "chain poset does not map to its own word at k=(" + k.str() + ")");
    }
  return r;
}

// --- dispatch ---------------------------------------------------------------

inline std::vector<std::string> suite_names() {
  return {"lemma52", "expstar", "intser",  "reg",     "regstar",      "kawashima",
          "rsf",     "hoffman", "duality", "doubleshuffle", "wmap"};
}

inline SuiteResult run_suite(const std::string& name, SuiteOptions opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  auto timed = [&](SuiteResult r) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
  if (name == "lemma52") return timed(verify_lemma_identities(opt));
  if (name == "expstar") return timed(verify_expstar(opt));
  if (name == "intser" || name == "intser-numeric") return timed(verify_intser_numeric(opt));
  if (name == "reg") return timed(verify_regularization(opt));
  if (name == "regstar" || name == "reg-star") return timed(verify_star_regularization(opt));
  if (name == "kawashima") return timed(verify_kawashima(opt));
  if (name == "rsf") return timed(verify_restricted_sum(opt));
  if (name == "hoffman") return timed(verify_hoffman(opt));
  if (name == "duality") return timed(verify_duality(opt));
  if (name == "doubleshuffle") return timed(verify_double_shuffle(opt));
  if (name == "wmap") return timed(verify_wmap(opt));
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace mzv
