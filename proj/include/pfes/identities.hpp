#pragma once

// Isotropic subspaces, weighted E-functions of Pluecker hyperplane cuts of
// Pfaffian varieties, and the q-series identities relating them.
//
//   l(k,i,n)    isotropic 2k-subspaces for a rank-2i form on an n-space
//   f(k,i,n)    weighted E-function of the cut of Pf(2k) by a rank-2i form
//   f°(k,i,n)   E-function of the rank-exactly-2k part of that cut

#include <string>
#include <vector>

#include "pfes/efun.hpp"

namespace pfes {

struct CutParams {
  long n;
  long k;
  long i;

  CutParams(long n_, long k_, long i_) : n(n_), k(k_), i(i_) {
    if (n < 5 || n % 2 == 0) {
      throw RangeError("CutParams: n must be odd and at least 5, got " + std::to_string(n));
    }
    if (k < 1 || k > half() || i < 1 || i > half()) {
      throw RangeError("CutParams: need 1 <= k, i <= " + std::to_string(half()) + ", got k=" +
                       std::to_string(k) + " i=" + std::to_string(i));
    }
  }

  long half() const { return (n - 1) / 2; }
};

namespace detail {

inline QRational qpow(long e) { return QLaurent::monomial(1, e).to_rational(); }

inline QRational poch(int sign, long e, long base_exp, long len) {
  return pochhammer(PowerParam{sign, e}, base_exp, len).to_rational();
}

inline QRational one_minus_qpow(long e) { return one_minus(PowerParam::q_pow(e)).to_rational(); }

}  // namespace detail

inline QPoly isotropic_E(long k, long i, long n) {
  if (k < 1 || i < 1 || 2 * i > n) {
    throw RangeError("isotropic_E: need k, i >= 1 and 2i <= n");
  }
  const long kernel = n - 2 * i;
  QPoly acc;
  for (long r = 0; r <= 2 * k && r <= kernel; ++r) {
    const long lo = i + r + 1 - 2 * k;
    if (lo <= 0) continue;  // factor 1 - q^0
    const long free = 2 * k - r;
    QPoly num{1}, den{1};
    for (long j = lo; j <= i; ++j) num *= detail::qm1(2 * j);
    for (long j = 1; j <= free; ++j) den *= detail::qm1(j);
    auto ratio = try_exact_div(num, den);
    if (!ratio) throw NotPolynomial("isotropic_E: symplectic factor is not a polynomial");
    acc += cached_gauss_binomial(kernel, r, 1) *
           ratio->shifted(static_cast<std::size_t>(free * (kernel - r)));
  }
  return acc;
}

/// ((q^{nk-1}-1)/(q-1)) * prod_{j=k+1}^{m} (q^{2j}-1)/(q^{2j-2k}-1); k = 0 gives -1/q.
inline QRational f_first_summand(long k, long n) {
  if (k < 0) throw RangeError("f_first_summand: negative k");
  const long m = (n - 1) / 2;
  if (k == 0) return -detail::qpow(-1);
  return QRational(projective_E(n * k - 2) * detail::even_ratio_product(k + 1, m, k));
}

/// q^{nk-1} * prod_{j=m-k-i+1}^{m-i} (q^{2j}-1)/(q^{2j-n+1+2k+2i}-1); zero for
/// i > m - k, and 1/q at k = 0.
inline QRational f_second_summand(long k, long i, long n) {
  if (k < 0) throw RangeError("f_second_summand: negative k");
  const long m = (n - 1) / 2;
  QPoly prod = detail::even_ratio_product(m - k - i + 1, m - i, m - k - i);
  return detail::qpow(n * k - 1) * QRational(prod);
}

/// f with k = 0 allowed, where it vanishes.
inline QRational f_closed_ext(long k, long i, long n) {
  return f_first_summand(k, n) + f_second_summand(k, i, n);
}

inline QPoly f_closed(const CutParams& c) {
  return detail::to_poly_or_throw(f_closed_ext(c.k, c.i, c.n), "f_closed");
}

inline QPoly f_circ(const CutParams& c) {
  const long m = c.half();
  QPoly acc;
  for (long j = 1; j <= c.k; ++j) {
    const long d = c.k - j;
    QPoly t = f_closed({c.n, j, c.i}) * cached_gauss_binomial(m - j, d, 2);
    t = t.shifted(static_cast<std::size_t>(d * (d - 1)));
    if (d % 2) acc -= t; else acc += t;
  }
  return acc;
}

/// Reassembles f from the f° values through the local contributions.
inline QPoly f_from_circ(const CutParams& c) {
  const long m = c.half();
  QPoly acc;
  for (long p = 1; p <= c.k; ++p) {
    acc += f_circ({c.n, p, c.i}) * cached_gauss_binomial(m - p, c.k - p, 2);
  }
  return acc;
}

/// Right side shared by the incidence recursions:
/// ((q^{2k^2-k-1}-1)/(q-1)) gr(2k, n) + q^{2k^2-k-1} l(k, i, n).
inline QPoly incidence_rhs(long k, long i, long n) {
  const long e = 2 * k * k - k - 1;
  QPoly first = e == 0 ? QPoly{} : projective_E(e - 1) * grassmannian_E(2 * k, n);
  return first + isotropic_E(k, i, n).shifted(static_cast<std::size_t>(e));
}

inline IdentityReport verify_newrec(const CutParams& c) {
  QPoly lhs;
  for (long p = 1; p <= c.k; ++p) {
    lhs += grassmannian_E(c.n - 2 * c.k, c.n - 2 * p) * f_circ({c.n, p, c.i});
  }
  return make_report("newrec", {c.n, c.k, c.i}, lhs, incidence_rhs(c.k, c.i, c.n));
}

/// f°(1..k_max, i, n) solved from the incidence count alone. The count does
/// not use the parity of n, so this also covers even n.
inline std::vector<QPoly> f_circ_from_incidence(long k_max, long i, long n) {
  if (k_max < 1 || i < 1 || 2 * k_max > n || 2 * i > n) {
    throw RangeError("f_circ_from_incidence: need k_max, i >= 1 and 2k_max, 2i <= n");
  }
  std::vector<QPoly> out;
  for (long k = 1; k <= k_max; ++k) {
    QPoly rest = incidence_rhs(k, i, n);
    for (long p = 1; p < k; ++p) {
      rest -= grassmannian_E(n - 2 * k, n - 2 * p) * out[static_cast<std::size_t>(p - 1)];
    }
    out.push_back(std::move(rest));
  }
  return out;
}

/// Coefficient of f(j, i, n) in the equation for f(k, i, n).
inline QRational newcor_coefficient(long k, long j, long n) {
  if (j < 0 || j > k || n + 1 - 2 * j == 0) throw RangeError("newcor_coefficient: bad indices");
  const long d = k - j;
  return detail::qpow(2 * d * d - d) * detail::one_minus_qpow(n + 1 - 2 * k) /
         detail::one_minus_qpow(n + 1 - 2 * j) * detail::poch(1, n + 3 - 4 * k + 2 * j, 2, 2 * d) /
         detail::poch(1, 1, 1, 2 * d);
}

/// f(1..k_max, i, n) from the triangular incidence system alone.
inline std::vector<QPoly> solve_newcor(long k_max, long i, long n) {
  if (n < 5 || n % 2 == 0 || k_max < 1 || k_max > (n - 1) / 2 || i < 1 || i > (n - 1) / 2) {
    throw RangeError("solve_newcor: need odd n >= 5 and 1 <= k_max, i <= (n-1)/2");
  }
  std::vector<QPoly> f;
  for (long k = 1; k <= k_max; ++k) {
    QRational rest(incidence_rhs(k, i, n));
    for (long j = 1; j < k; ++j) {
      rest = rest - QRational(f[static_cast<std::size_t>(j - 1)]) * newcor_coefficient(k, j, n);
    }
    f.push_back(detail::to_poly_or_throw(rest / newcor_coefficient(k, k, n), "solve_newcor"));
  }
  return f;
}

inline IdentityReport verify_hj(long a, long b) {
  if (a < 0 || a > b) throw RangeError("verify_hj: need 0 <= a <= b");
  QPoly lhs;
  for (long s = 0; s <= a; ++s) {
    QPoly t = (cached_gauss_binomial(2 * b + 1 - 2 * s, 2 * a - 2 * s, 1) *
               cached_gauss_binomial(b, s, 2))
                  .shifted(static_cast<std::size_t>(s * s - s));
    if (s % 2) lhs -= t; else lhs += t;
  }
  QRational rhs = detail::qpow(2 * a * a - a) * detail::one_minus_qpow(2 * b - 2 * a + 2) /
                  detail::one_minus_qpow(2 * b + 2) * detail::poch(1, 2 * b - 4 * a + 4, 2, 2 * a) /
                  detail::poch(1, 1, 1, 2 * a);
  return make_report("hj", {a, b}, lhs, rhs);
}

struct CutSums {
  QRational A, B, C, D;
};

/// The four sums whose pairwise equality amounts to the closed formula for f
/// satisfying the incidence system.
inline CutSums cut_sums(const CutParams& c) {
  const long n = c.n, k = c.k, i = c.i, m = c.half();
  const long e = 2 * k * k - k - 1;
  CutSums s;
  for (long j = 0; j <= k; ++j) {
    const long d = k - j;
    QRational tail = detail::one_minus_qpow(n + 1 - 2 * k) / detail::one_minus_qpow(n + 1 - 2 * j) *
                     detail::poch(1, n + 3 - 4 * k + 2 * j, 2, 2 * d) /
                     detail::poch(1, 1, 1, 2 * d);
    s.A += detail::qm1_any(n * j - 1) / QRational(detail::qm1(1)) *
           QRational(cached_gauss_binomial(m, j, 2)) * detail::qpow(2 * d * d - d) * tail;
    s.B += QRational(cached_gauss_binomial(m - i, j, 2)) * detail::qpow(2 * d * d - d + n * j - 1) * tail;
  }
  s.C = detail::qm1_any(e) / QRational(detail::qm1(1)) * QRational(grassmannian_E(2 * k, n));
  s.D = detail::qpow(e) * QRational(isotropic_E(k, i, n));
  return s;
}

inline std::vector<IdentityReport> verify_AC_BD(const CutParams& c) {
  CutSums s = cut_sums(c);
  return {make_report("AC", {c.n, c.k, c.i}, s.A, s.C),
          make_report("BD", {c.n, c.k, c.i}, s.B, s.D)};
}

namespace detail {

template <class Fn>
IdentityReport phi_check(const std::string& name, const std::vector<long>& point,
                         const QRational& direct, Fn&& series_side) {
  try {
    return make_report(name, point, direct, series_side());
  } catch (const LowerParamPole& e) {
    return skipped_report(name, point, e.what());
  } catch (const ZeroDenominator& e) {
    return skipped_report(name, point, std::string("degenerate prefactor: ") + e.what());
  }
}

}  // namespace detail

/// The sums A, B, D rewritten as terminating basic hypergeometric series,
/// before and after the Heine, III.13 and Jain transformations. Forms whose
/// lower parameters degenerate at this point are skipped; the transformed
/// forms of B and D have no such points, so every sum is checked.
inline std::vector<IdentityReport> verify_phi_reductions(const CutParams& c) {
  using detail::poch;
  using detail::qpow;
  const long n = c.n, k = c.k, i = c.i, m = c.half();
  const long e = 2 * k * k - k - 1;
  const std::vector<long> pt{n, k, i};
  CutSums s = cut_sums(c);
  const auto P = [](long x) { return PowerParam::q_pow(x); };
  std::vector<IdentityReport> out;

  const QRational A1 = QRational(QPoly({1, -1})) * s.A;
  const QRational gm = QRational(cached_gauss_binomial(m, k, 2));
  out.push_back(detail::phi_check("phi.A.2phi1", pt, A1, [&] {
    std::vector<PowerParam> up{P(-2 * k), P(-n - 1 + 2 * k)}, lo{P(1)};
    return gm * (phi_eval(up, lo, 2, P(n + 2), k) - qpow(n * k - 1) * phi_eval(up, lo, 2, P(2), k));
  }));
  out.push_back(detail::phi_check("phi.A.heine", pt, A1, [&] {
    return detail::one_minus_qpow(e) * gm * poch(1, n + 2 - 2 * k, 2, k) / poch(1, 1, 2, k);
  }));

  const QRational b_pre = qpow(e) * detail::one_minus_qpow(n + 1 - 2 * k) /
                          (detail::one_minus_qpow(n + 1) * poch(1, 1, 1, 2 * k));
  out.push_back(detail::phi_check("phi.B.3phi2", pt, s.B, [&] {
    return b_pre * poch(1, n + 3 - 4 * k, 2, 2 * k) *
           phi_eval({P(-2 * k), P(1 - n + 2 * i), P(1 - 2 * k)}, {P(1 - n), P(n + 3 - 4 * k)}, 2,
                    P(n + 2 - 2 * i), k);
  }));
  // (q^{n+3-4k}; q^2)_{2k} / (q^{n+3-4k}; q^2)_k = (q^{n+3-2k}; q^2)_k
  out.push_back(detail::phi_check("phi.B.transformed", pt, s.B, [&] {
    return b_pre * poch(1, n + 3 - 2 * k, 2, k) * poch(1, n + 2 - 2 * k, 2, k) *
           phi_eval({P(-2 * k), P(1 - 2 * k), P(-2 * i)}, {P(1 - n), P(-n)}, 2, P(2), k);
  }));

  const QRational d_pre = qpow(e);
  out.push_back(detail::phi_check("phi.D.3phi1", pt, s.D, [&] {
    return d_pre * QRational(cached_gauss_binomial(n - 2 * i, 2 * k, 1)) *
           phi_eval({P(-2 * k), P(-i), PowerParam::neg_q_pow(-i)}, {P(n + 1 - 2 * i - 2 * k)}, 1,
                    PowerParam::neg_q_pow(n + 1), 2 * k);
  }));
  const auto jain_series = [&] {
    return phi_eval({P(-2 * k), P(1 - 2 * k), P(-2 * i)}, {P(-n), P(1 - n)}, 2, P(2), k);
  };
  out.push_back(detail::phi_check("phi.D.jain", pt, s.D, [&] {
    return d_pre * QRational(cached_gauss_binomial(n - 2 * i, 2 * k, 1)) * poch(1, -n, 1, 2 * k) /
           poch(1, -n + 2 * i, 1, 2 * k) * qpow(4 * k * i) * jain_series();
  }));
  out.push_back(detail::phi_check("phi.D.jain.simplified", pt, s.D, [&] {
    return d_pre * QRational(grassmannian_E(2 * k, n)) * jain_series();
  }));
  return out;
}

}  // namespace pfes
