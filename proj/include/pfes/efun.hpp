#pragma once

// E-polynomials of projective spaces, Grassmannians and rank strata of skew
// forms; stringy E-functions, discrepancies and local contributions of the
// Pfaffian varieties Pf(2k, n). Every polynomial is in q = uv.

#include <string>
#include <vector>

#include "pfes/errors.hpp"
#include "pfes/memo.hpp"
#include "pfes/qcore.hpp"
#include "pfes/report.hpp"

namespace pfes {

struct PfaffianParams {
  long n;
  long k;

  PfaffianParams(long n_, long k_) : n(n_), k(k_) {
    if (n < 5 || n % 2 == 0) {
      throw RangeError("PfaffianParams: n must be odd and at least 5, got " + std::to_string(n));
    }
    if (k < 1 || k > half()) {
      throw RangeError("PfaffianParams: k must lie in [1, " + std::to_string(half()) +
                       "], got " + std::to_string(k));
    }
  }

  long half() const { return (n - 1) / 2; }
};

struct StratumContribution {
  long rank_half;
  QPoly stratum_E;
  QRational weight;
  QRational product;
};

namespace detail {

inline QPoly qm1(long e) { return QPoly::q_pow_minus_one(static_cast<std::size_t>(e)); }

/// q^e - 1 for any integer e, as a rational function.
inline QRational qm1_any(long e) {
  return (QLaurent::monomial(1, e) - QLaurent::one()).to_rational();
}

/// prod_{j=lo}^{hi} (q^{2j} - 1) / (q^{2(j-c)} - 1), with every denominator
/// exponent positive. A factor j = 0 makes the product vanish.
inline QPoly even_ratio_product(long lo, long hi, long c) {
  if (hi < lo) return QPoly{1};
  if (lo <= 0 && 0 <= hi) return {};
  if (lo < 1 || lo - c < 1) {
    throw RangeError("even_ratio_product: nonpositive exponent in [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "] shift " + std::to_string(c));
  }
  QPoly num{1}, den{1};
  for (long j = lo; j <= hi; ++j) {
    num *= qm1(2 * j);
    den *= qm1(2 * (j - c));
  }
  auto out = try_exact_div(num, den);
  if (!out) throw NotPolynomial("even_ratio_product: quotient is not a polynomial");
  return *out;
}

/// The same product evaluated factor by factor in Q(q), negative j allowed.
inline QRational literal_ratio_product(long lo, long hi, long c) {
  QRational acc{QPoly{1}};
  for (long j = lo; j <= hi; ++j) {
    QRational top = qm1_any(2 * j);
    if (top.is_zero()) return QRational{};
    QRational bottom = qm1_any(2 * (j - c));
    if (bottom.is_zero()) throw ZeroDenominator("literal_ratio_product: zero factor");
    acc = acc * top / bottom;
  }
  return acc;
}

inline QPoly to_poly_or_throw(const QRational& r, const char* what) {
  if (!r.is_polynomial()) throw NotPolynomial(std::string(what) + ": not a polynomial");
  return r.to_poly();
}

}  // namespace detail

/// Gaussian binomial through the shared memo table.
inline QPoly cached_gauss_binomial(long m, long r, long base_exp) {
  return memoized(memo_tables().gauss, GaussKey{m, r, base_exp},
                  [&] { return gauss_binomial(m, r, base_exp); });
}

inline QPoly projective_E(long k) {
  if (k < 0) throw RangeError("projective_E: negative dimension");
  std::vector<QPoly::Coeff> cs(static_cast<std::size_t>(k + 1), 1);
  return QPoly(std::move(cs));
}

inline QPoly grassmannian_E(long k, long n) {
  if (k < 0 || k > n) {
    throw RangeError("grassmannian_E: need 0 <= k <= n, got k=" + std::to_string(k) +
                     " n=" + std::to_string(n));
  }
  return cached_gauss_binomial(n, k, 1);
}

/// e_{2i}: projectivized nondegenerate skew forms on a 2i-dimensional space,
/// obtained from the stratification of P(Lambda^2) of that space by rank.
inline QPoly nondeg_skew_E(long i) {
  if (i < 1) throw RangeError("nondeg_skew_E: i must be positive");
  auto compute = [i] {
    QPoly acc = projective_E(i * (2 * i - 1) - 1);
    for (long t = 1; t < i; ++t) acc -= nondeg_skew_E(t) * grassmannian_E(2 * t, 2 * i);
    return acc;
  };
  return memoized(memo_tables().nondeg_skew, i, compute);
}

/// Forms of rank exactly 2i on an n-dimensional space, up to scaling.
inline QPoly rank_stratum_E(long i, long n) {
  if (i < 1 || 2 * i > n) {
    throw RangeError("rank_stratum_E: need 1 <= i and 2i <= n, got i=" + std::to_string(i) +
                     " n=" + std::to_string(n));
  }
  return nondeg_skew_E(i) * grassmannian_E(n - 2 * i, n);
}

/// Discrepancy of the j-th exceptional divisor of the resolution of Pf(2k, n).
/// Defined only when divisors exist, i.e. k < (n-1)/2.
inline long discrepancy(long j, const PfaffianParams& p) {
  if (p.k >= p.half()) {
    throw RangeError("discrepancy: Pf(2k, n) with k = (n-1)/2 is smooth and has no divisors");
  }
  const long lo = (p.n + 3 - 2 * p.k) / 2;
  const long hi = p.half();
  if (j < lo || j > hi) {
    throw RangeError("discrepancy: j=" + std::to_string(j) + " outside [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  }
  return (2 * j + 2 * p.k - p.n - 1) * (2 * j - 1) / 2 - 1;
}

/// S(p, k, n), the per-point weight of the rank-2p stratum.
inline QPoly local_contribution(long p, long k, long n) {
  if (n < 3 || n % 2 == 0 || p < 1 || p > k || k > (n - 1) / 2) {
    throw RangeError("local_contribution: need 1 <= p <= k <= (n-1)/2, n odd; got p=" +
                     std::to_string(p) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  const long m = (n - 1) / 2;
  return detail::even_ratio_product(k + 1 - p, m - p, k - p);
}

namespace detail {

/// Closed stringy formula without the n >= 5 restriction; n = 3, k = 1 is
/// the projective plane.
inline QPoly stringy_closed_raw(long n, long k) {
  const long m = (n - 1) / 2;
  return projective_E(n * k - 1) * even_ratio_product(k + 1, m, k);
}

}  // namespace detail

inline QPoly pf_stringy_closed(const PfaffianParams& p) {
  return detail::stringy_closed_raw(p.n, p.k);
}

inline std::vector<StratumContribution> pf_stringy_strata(const PfaffianParams& p) {
  std::vector<StratumContribution> out;
  for (long i = 1; i <= p.k; ++i) {
    QPoly e = rank_stratum_E(i, p.n);
    QPoly w = local_contribution(i, p.k, p.n);
    out.push_back({i, e, QRational(w), QRational(e * w)});
  }
  return out;
}

inline QPoly pf_stringy_recursive(const PfaffianParams& p) {
  QPoly acc;
  for (const auto& s : pf_stringy_strata(p)) acc += s.product.to_poly();
  return acc;
}

inline QPoly pf_stringy_rodland(long r) {
  if (r < 2) throw RangeError("pf_stringy_rodland: r must be at least 2");
  QPoly num = detail::qm1(2 * r) * detail::qm1(2 * r * r - r - 1);
  QPoly den = detail::qm1(2) * detail::qm1(1);
  auto out = try_exact_div(num, den);
  if (!out) throw NotPolynomial("pf_stringy_rodland: not a polynomial");
  return *out;
}

/// Expected degree of the stringy E-function of Pf(2k, n).
inline long pf_stringy_degree(const PfaffianParams& p) {
  return 2 * p.k * p.n - 2 * p.k * p.k - p.k - 1;
}

// ---- identity verifiers ----

inline IdentityReport verify_relg(long i, long r) {
  if (i < 0 || i > r) throw RangeError("verify_relg: need 0 <= i <= r");
  QPoly lhs = grassmannian_E(2 * i, 2 * r) * detail::qm1(2 * r + 1);
  QPoly rhs = grassmannian_E(2 * i, 2 * r + 1) * detail::qm1(2 * r - 2 * i + 1);
  return make_report("relg", {i, r}, lhs, rhs);
}

inline IdentityReport verify_oddeven_even(long r) {
  if (r < 1) throw RangeError("verify_oddeven_even: r must be positive");
  QPoly lhs;
  for (long i = 1; i <= r; ++i) lhs += nondeg_skew_E(i) * grassmannian_E(2 * i, 2 * r);
  return make_report("oddeven.even", {r}, lhs, projective_E(r * (2 * r - 1) - 1));
}

inline IdentityReport verify_oddeven_odd(long r) {
  if (r < 1) throw RangeError("verify_oddeven_odd: r must be positive");
  QPoly lhs;
  for (long i = 1; i <= r; ++i) lhs += nondeg_skew_E(i) * grassmannian_E(2 * i, 2 * r + 1);
  return make_report("oddeven.odd", {r}, lhs, projective_E(r * (2 * r + 1) - 1));
}

inline IdentityReport verify_sum(long r) {
  if (r < 2) throw RangeError("verify_sum: r must be at least 2");
  QRational lhs;
  for (long i = 1; i <= r - 1; ++i) {
    QRational w(detail::qm1(2 * r - 2 * i), detail::qm1(2));
    lhs = lhs + w * QRational(nondeg_skew_E(i) * grassmannian_E(2 * i, 2 * r + 1));
  }
  QRational rhs(detail::qm1(2 * r) * detail::qm1(2 * r * r - r - 1),
                detail::qm1(2) * detail::qm1(1));
  return make_report("sum", {r}, lhs, rhs);
}

/// Sum over every rank 1 <= i <= (n-1)/2 with the displayed product taken
/// literally; strata above k drop out through a vanishing factor.
inline IdentityReport verify_technical(long n, long k) {
  if (n < 5 || n % 2 == 0 || k < 1 || k > (n - 3) / 2) {
    throw RangeError("verify_technical: need odd n >= 5 and 1 <= k <= (n-3)/2");
  }
  const long m = (n - 1) / 2;
  QRational lhs;
  for (long i = 1; i <= m; ++i) {
    QRational w = detail::literal_ratio_product(k - i + 1, m - i, k - i);
    if (w.is_zero()) continue;
    lhs = lhs + QRational(rank_stratum_E(i, n)) * w;
  }
  QRational rhs = QRational(detail::qm1(n * k), detail::qm1(1)) *
                  detail::literal_ratio_product(k + 1, m, k);
  return make_report("technical", {n, k}, lhs, rhs);
}

/// The stringy E-function of Pf(2r-2, 2r+1): closed form against the
/// general formula, the divisor-weighted stratification, and the per-stratum
/// induction through smaller Pfaffians.
inline std::vector<IdentityReport> verify_stpf(long r) {
  if (r < 2) throw RangeError("verify_stpf: r must be at least 2");
  std::vector<IdentityReport> out;
  const long n = 2 * r + 1;
  QPoly rod = pf_stringy_rodland(r);
  out.push_back(make_report("stpf.closed", {r}, rod, pf_stringy_closed({n, r - 1})));

  QRational strat;
  for (long i = 1; i <= r - 1; ++i) {
    QRational w(detail::qm1(2 * (r - i)), detail::qm1(2));
    strat = strat + w * QRational(rank_stratum_E(i, n));
  }
  out.push_back(make_report("stpf.strata", {r}, rod, strat));

  // The rank-2i stratum meets a divisor of discrepancy 2(r-i)^2-(r-i)-1
  // whose fiber is Pf(2(r-i)-2, 2(r-i)+1).
  for (long i = 1; i <= r - 2; ++i) {
    const long s = r - i;
    const long alpha = discrepancy(s + 1, {n, r - 1});
    QRational w = QRational(pf_stringy_rodland(s)) *
                  QRational(detail::qm1(1), detail::qm1(alpha + 1));
    QRational expect(detail::qm1(2 * s), detail::qm1(2));
    out.push_back(make_report("stpf.fiber", {r, i}, w, expect));
  }
  return out;
}

/// Closed and recursive stringy formulas agree; each lower stratum's weight
/// is the smaller Pfaffian's stringy E-function divided by its divisor term;
/// the result is palindromic of the expected degree.
inline std::vector<IdentityReport> verify_pfst2k(long n, long k) {
  PfaffianParams p(n, k);
  std::vector<IdentityReport> out;
  QPoly closed = pf_stringy_closed(p);
  out.push_back(make_report("pfst2k.recursive", {n, k}, closed, pf_stringy_recursive(p)));

  for (long i = 1; i < k; ++i) {
    // At k = (n-1)/2 there are no divisors and every lower weight is 1.
    long alpha = (k - i) * (n - 2 * i) - 1;
    if (k < p.half()) {
      const long d = discrepancy((n - 2 * i + 1) / 2, p);
      out.push_back(make_report("pfst2k.discrepancy", {n, k, i}, QPoly{d}, QPoly{alpha}));
      alpha = d;
    }
    QRational via_fiber = QRational(detail::stringy_closed_raw(n - 2 * i, k - i)) *
                          QRational(detail::qm1(1), detail::qm1(alpha + 1));
    out.push_back(make_report("pfst2k.fiber", {n, k, i}, local_contribution(i, k, n), via_fiber));
  }

  IdentityReport shape = make_report("pfst2k.palindromic", {n, k}, QPoly{closed.degree()},
                                     QPoly{pf_stringy_degree(p)});
  shape.passed = shape.passed && closed.is_palindromic();
  out.push_back(std::move(shape));
  return out;
}

/// Value at q = 1: the topological Euler characteristic.
inline mpz_class pf_stringy_euler(const PfaffianParams& p) {
  return pf_stringy_closed(p).eval(mpz_class(1));
}

}  // namespace pfes
