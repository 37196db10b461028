#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lincomb.hpp"
#include "regularize.hpp"

namespace mzv {

// Polynomial in T with real coefficients, degree = size - 1.
using NumTPoly = std::vector<mpf_class>;

inline int default_precision_bits() {
  if (const char* env = std::getenv("MZV_PREC_BITS")) {
    int v = std::atoi(env);
    if (v >= 64) return v;
  }
  return 192;
}

// High-precision evaluation of admissible words and their combinations.
// All series are computed at precision_bits + guard_bits working precision
// with truncation depth N = precision_bits + guard_bits + 32, so the
// combined truncation + rounding error stays far below the advertised
// tolerance 2^-(precision_bits - 32).
//
// Contexts cache aggressively and are not thread-safe; use one per worker.
class EvalContext {
 public:
  explicit EvalContext(int precision_bits = default_precision_bits(), int guard_bits = 16)
      : prec_(precision_bits), guard_(guard_bits), trunc_n_(precision_bits + guard_bits + 32) {
    if (precision_bits < 64) throw std::invalid_argument("EvalContext: need at least 64 bits");
  }

  int precision_bits() const { return prec_; }
  long truncation_depth() const { return trunc_n_; }
  int work_bits() const { return prec_ + guard_; }

  mpf_class num(long v = 0) const { return mpf_class(v, static_cast<mp_bitcnt_t>(work_bits())); }
  mpf_class num(const Rat& q) const { return mpf_class(q, static_cast<mp_bitcnt_t>(work_bits())); }

  // 2^-(precision_bits - 32): every verified residual is measured against
  // this unless a criterion pins its own bound.
  mpf_class tolerance() const {
    mpf_class t = num(1);
    mpf_div_2exp(t.get_mpf_t(), t.get_mpf_t(), static_cast<mp_bitcnt_t>(prec_ - 32));
    return t;
  }

  // Multiple polylog of the index of u at z = 1/2: the factor of the Hoelder
  // convolution.  u must lie in e1*H (any prefix of an admissible word does,
  // once daggered when it is a suffix).
  const mpf_class& li_half(const Word& u) const {
    auto it = li_cache_.find(u);
    if (it != li_cache_.end()) return it->second;
    mpf_class value = li_half_direct(u.to_index());
    return li_cache_.emplace(u, std::move(value)).first->second;
  }

  // zeta of an admissible word by the Hoelder convolution at 1/2:
  // zeta(w) = sum over splittings w = u v of Li_{1/2}(u) Li_{1/2}(dagger v).
  const mpf_class& zeta_word(const Word& w) const {
    auto it = zeta_cache_.find(w);
    if (it != zeta_cache_.end()) return it->second;
    if (!w.in_h0()) throw std::domain_error("zeta_word: word not admissible");
    mpf_class acc = num(0);
    for (uint32_t i = 0; i <= w.size(); ++i) {
      const Word u = w.prefix(i);
      const Word v = w.drop_front(i);
      mpf_class term = num(1);
      if (!u.empty()) term *= li_half(u);
      if (!v.empty()) term *= li_half(v.dagger());
      acc += term;
    }
    return zeta_cache_.emplace(w, std::move(acc)).first->second;
  }

  mpf_class mzv(const Index& k) const {
    if (!k.admissible()) throw std::domain_error("mzv: index not admissible");
    return zeta_word(Word::of_index(k));
  }

  // Star value: expand the stars and sum.
  mpf_class mzsv(const Index& k) const {
    if (!k.admissible()) throw std::domain_error("mzsv: index not admissible");
    if (k.empty()) return num(1);
    mpf_class acc = num(0);
    for (const Index& t : star_expand(k)) acc += mzv(t);
    return acc;
  }

  mpf_class zeta_single(int n) const {
    if (n < 2) throw std::domain_error("zeta_single: need n >= 2");
    return mzv(Index{n});
  }

  mpf_class eval(const LinComb& x) const {
    mpf_class acc = num(0);
    for (const auto& [w, c] : x.terms()) acc += num(c) * zeta_word(w);
    return acc;
  }

  NumTPoly eval(const SymTPoly& p) const {
    NumTPoly out;
    for (int i = 0; i <= p.degree(); ++i) out.push_back(eval(p.coeff(i)));
    if (out.empty()) out.push_back(num(0));
    return out;
  }

 private:
  mpf_class li_half_direct(const Index& c) const {
    const long n = trunc_n_;
    const int d = c.depth();
    // layer[m], m = 1..n: nested sum with largest variable = m, current depth.
    std::vector<mpf_class> layer(static_cast<size_t>(n) + 1, num(0));
    for (int j = 0; j < d; ++j) {
      mpf_class running = num(0);  // sum of previous layer over m' < m
      for (long m = 1; m <= n; ++m) {
        mpf_class cur = (j == 0) ? num(1) : running;  // before dividing
        running += layer[static_cast<size_t>(m)];     // prev layer at m, consumed before overwrite
        Int mp;
        mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(c[j]));
        mpf_class pw = num(0);
        mpf_set_z(pw.get_mpf_t(), mp.get_mpz_t());
        layer[static_cast<size_t>(m)] = cur / pw;
      }
    }
    mpf_class acc = num(0);
    mpf_class zpow = num(1);
    for (long m = 1; m <= n; ++m) {
      mpf_div_2exp(zpow.get_mpf_t(), zpow.get_mpf_t(), 1);
      acc += layer[static_cast<size_t>(m)] * zpow;
    }
    return acc;
  }

  int prec_, guard_;
  long trunc_n_;
  mutable std::map<Word, mpf_class> li_cache_;
  mutable std::map<Word, mpf_class> zeta_cache_;
};

namespace detail {

// layer[m] = nested sum over j variables with the top one equal to m,
// strict (<) or weak (<=) according to the flag, exponents from c.
inline std::vector<mpf_class> nested_layers(const EvalContext& ctx, const std::vector<int>& c,
                                            long n, bool strict) {
  std::vector<mpf_class> layer(static_cast<size_t>(n) + 1, ctx.num(0));
  for (size_t m = 1; m <= static_cast<size_t>(n); ++m) layer[m] = ctx.num(1);
  for (size_t j = 0; j < c.size(); ++j) {
    mpf_class running = ctx.num(0);
    for (long m = 1; m <= n; ++m) {
      if (!strict) running += layer[static_cast<size_t>(m)];
      mpf_class cur = (j == 0) ? ctx.num(1) : running;
      if (strict) running += layer[static_cast<size_t>(m)];
      Int mp;
      mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m),
                    static_cast<unsigned long>(c[j]));
      mpf_class pw = ctx.num(0);
      mpf_set_z(pw.get_mpf_t(), mp.get_mpz_t());
      layer[static_cast<size_t>(m)] = cur / pw;
    }
  }
  if (c.empty())
    for (size_t m = 1; m <= static_cast<size_t>(n); ++m) layer[m] = ctx.num(1);
  return layer;
}

}  // namespace detail

// Literal truncation of the defining series of zeta(k), all variables
// capped at N.  The tail decays only polynomially, so this is a
// low-precision independent oracle, not an evaluator.
inline mpf_class mzv_series_truncated(const EvalContext& ctx, const Index& k, long n) {
  if (k.empty()) return ctx.num(1);
  std::vector<int> inner(k.parts().begin(), k.parts().end() - 1);
  auto layer = detail::nested_layers(ctx, inner, n, true);
  mpf_class acc = ctx.num(0);
  mpf_class running = ctx.num(0);
  for (long m = 1; m <= n; ++m) {
    mpf_class cur = inner.empty() ? ctx.num(1) : running;
    running += layer[static_cast<size_t>(m)];
    Int mp;
    mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(k.last()));
    mpf_class pw = ctx.num(0);
    mpf_set_z(pw.get_mpf_t(), mp.get_mpz_t());
    acc += cur / pw;
  }
  return acc;
}

// Literal truncation of the tied double series for zeta(k (x) l*): a strict
// chain for k and a weak chain for l share their largest variable.
inline mpf_class cast_series_truncated(const EvalContext& ctx, const Index& k, const Index& l,
                                       long n) {
  if (k.empty() || l.empty())
    throw std::invalid_argument("cast_series_truncated needs nonempty indices");
  std::vector<int> ik(k.parts().begin(), k.parts().end() - 1);
  std::vector<int> il(l.parts().begin(), l.parts().end() - 1);
  auto la = detail::nested_layers(ctx, ik, n, true);
  auto lb = detail::nested_layers(ctx, il, n, false);
  mpf_class acc = ctx.num(0);
  mpf_class run_a = ctx.num(0), run_b = ctx.num(0);
  for (long m = 1; m <= n; ++m) {
    mpf_class a = ik.empty() ? ctx.num(1) : run_a;  // strict: previous tops only
    run_a += la[static_cast<size_t>(m)];
    run_b += lb[static_cast<size_t>(m)];
    mpf_class b = il.empty() ? ctx.num(1) : run_b;  // weak: tops up to m
    Int mp;
    mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(k.last() + l.last()));
    mpf_class pw = ctx.num(0);
    mpf_set_z(pw.get_mpf_t(), mp.get_mpz_t());
    acc += a * b / pw;
  }
  return acc;
}

// Coefficients of the regularization comparison series and its relatives:
// A(u) = exp(sum_{n>=2} (-1)^n zeta(n) u^n / n) drives rho, the series
// inverse of A(-u) drives the star variant, and A(u)^{-1} inverts rho.
struct ACoeffs {
  std::vector<mpf_class> a;         // A(u)
  std::vector<mpf_class> a_inv;     // A(u)^-1
  std::vector<mpf_class> star_inv;  // A(-u)^-1

  static ACoeffs build(const EvalContext& ctx, int max_deg) {
    ACoeffs r;
    std::vector<mpf_class> s(static_cast<size_t>(max_deg) + 1, ctx.num(0));
    for (int n = 2; n <= max_deg; ++n) {
      s[static_cast<size_t>(n)] = ctx.zeta_single(n) / n;
      if (n % 2) s[static_cast<size_t>(n)] = -s[static_cast<size_t>(n)];
    }
    r.a.assign(static_cast<size_t>(max_deg) + 1, ctx.num(0));
    r.a[0] = ctx.num(1);
    for (int n = 1; n <= max_deg; ++n) {
      mpf_class acc = ctx.num(0);
      for (int j = 2; j <= n; ++j) acc += j * s[static_cast<size_t>(j)] * r.a[static_cast<size_t>(n - j)];
      r.a[static_cast<size_t>(n)] = acc / n;
    }
    auto invert = [&](const std::vector<mpf_class>& f) {
      std::vector<mpf_class> g(f.size(), ctx.num(0));
      g[0] = ctx.num(1);
      for (size_t n = 1; n < f.size(); ++n) {
        mpf_class acc = ctx.num(0);
        for (size_t j = 1; j <= n; ++j) acc += f[j] * g[n - j];
        g[n] = -acc;
      }
      return g;
    };
    r.a_inv = invert(r.a);
    std::vector<mpf_class> a_neg = r.a;
    for (size_t n = 1; n < a_neg.size(); n += 2) a_neg[n] = -a_neg[n];
    r.star_inv = invert(a_neg);
    return r;
  }
};

namespace detail {

// p(T) -> sum_n p_n n! sum_{j<=n} f_{n-j} T^j / j!  for a coefficient
// sequence f; with f = a this is rho.
inline NumTPoly apply_comparison(const NumTPoly& p, const std::vector<mpf_class>& f, const EvalContext& ctx) {
  if (p.empty()) return {ctx.num(0)};
  const size_t deg = p.size() - 1;
  if (f.size() <= deg) throw std::invalid_argument("comparison coefficients too short");
  NumTPoly out(p.size(), ctx.num(0));
  for (size_t n = 0; n <= deg; ++n) {
    mpf_class nfact = ctx.num(0);
    Int nf = factorial(static_cast<unsigned long>(n));
    mpf_set_z(nfact.get_mpf_t(), nf.get_mpz_t());
    for (size_t j = 0; j <= n; ++j) {
      Int jf = factorial(static_cast<unsigned long>(j));
      mpf_class jfact = ctx.num(0);
      mpf_set_z(jfact.get_mpf_t(), jf.get_mpz_t());
      out[j] += p[n] * nfact / jfact * f[n - j];
    }
  }
  return out;
}

}  // namespace detail

inline NumTPoly rho_apply(const NumTPoly& p, const ACoeffs& ac, const EvalContext& ctx) {
  return detail::apply_comparison(p, ac.a, ctx);
}
inline NumTPoly rho_inverse_apply(const NumTPoly& p, const ACoeffs& ac, const EvalContext& ctx) {
  return detail::apply_comparison(p, ac.a_inv, ctx);
}
inline NumTPoly rho_star_apply(const NumTPoly& p, const ACoeffs& ac, const EvalContext& ctx) {
  return detail::apply_comparison(p, ac.star_inv, ctx);
}

// Largest |coefficient| difference between two numeric polynomials.
inline mpf_class tpoly_distance(const NumTPoly& a, const NumTPoly& b, const EvalContext& ctx) {
  mpf_class worst = ctx.num(0);
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    mpf_class av = i < a.size() ? a[i] : ctx.num(0);
    mpf_class bv = i < b.size() ? b[i] : ctx.num(0);
    mpf_class d = abs(av - bv);
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace mzv
