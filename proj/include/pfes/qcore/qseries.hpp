#pragma once

#include <string>
#include <vector>

#include "pfes/qcore/qlaurent.hpp"

namespace pfes {

/// (a; q^b)_k = prod_{j=0}^{k-1} (1 - a q^{b j}). k == 0 gives 1.
inline QLaurent pochhammer(const PowerParam& a, long base_exp, long k) {
  if (base_exp <= 0) throw RangeError("pochhammer: base exponent must be positive");
  if (k < 0) throw RangeError("pochhammer: negative length");
  QLaurent acc = QLaurent::one();
  for (long j = 0; j < k; ++j) {
    acc = acc * one_minus(a.times_q_pow(base_exp * j));
    if (acc.is_zero()) break;
  }
  return acc;
}

/// Gaussian binomial [m choose r] in the variable q^b; zero unless
/// 0 <= r <= m.
inline QPoly gauss_binomial(long m, long r, long base_exp) {
  if (base_exp <= 0) throw RangeError("gauss_binomial: base exponent must be positive");
  if (r < 0 || m < 0 || r > m) return {};
  if (2 * r > m) r = m - r;
  // [m, t+1] (1 - q^{t+1}) = [m, t] (1 - q^{m-t}), each step exact.
  QPoly acc{1};
  for (long t = 0; t < r; ++t) {
    acc = exact_div(acc * QPoly::one_minus_q_pow(static_cast<std::size_t>(m - t)),
                    QPoly::one_minus_q_pow(static_cast<std::size_t>(t + 1)));
  }
  return acc.inflated(static_cast<std::size_t>(base_exp));
}

/// Partial sum over n = 0..max_terms of the basic hypergeometric series
///
///   r_phi_s(upper; lower; q^b, z) =
///     sum_n prod (a_i;Q)_n / ((Q;Q)_n prod (b_j;Q)_n)
///           * ((-1)^n Q^{n(n-1)/2})^{1+s-r} z^n,      Q = q^b.
///
/// Summation stops early once an upper parameter has made every further term
/// vanish. Throws LowerParamPole if a denominator factor vanishes at a term
/// that is still live.
inline QRational phi_eval(const std::vector<PowerParam>& upper,
                          const std::vector<PowerParam>& lower, long base_exp,
                          const PowerParam& z, long max_terms) {
  if (base_exp <= 0) throw RangeError("phi_eval: base exponent must be positive");
  if (max_terms < 0) throw RangeError("phi_eval: negative term bound");
  const long weight = 1 + static_cast<long>(lower.size()) - static_cast<long>(upper.size());

  // Running sum kept as P / D over the last term's denominator D.
  QLaurent num_prod = QLaurent::one();
  QLaurent den_prod = QLaurent::one();
  QLaurent sum_num = QLaurent::one();  // n = 0 term
  QLaurent sum_den = QLaurent::one();

  for (long n = 1; n <= max_terms; ++n) {
    const long step = base_exp * (n - 1);
    QLaurent new_num = QLaurent::one();
    for (const auto& a : upper) new_num = new_num * one_minus(a.times_q_pow(step));
    if (new_num.is_zero()) break;
    QLaurent new_den = one_minus(PowerParam::q_pow(base_exp * n));
    for (const auto& b : lower) new_den = new_den * one_minus(b.times_q_pow(step));
    if (new_den.is_zero()) {
      throw LowerParamPole("phi_eval: lower parameter pole at term " + std::to_string(n));
    }
    num_prod = num_prod * new_num;
    den_prod = den_prod * new_den;

    // ((-1)^n Q^{n(n-1)/2})^weight * z^n
    const long e = weight * base_exp * (n * (n - 1) / 2) + z.exponent * n;
    int sign = ((weight * n) % 2 == 0) ? 1 : -1;
    if (z.sign < 0 && n % 2 == 1) sign = -sign;
    QLaurent term_num = num_prod * QLaurent::monomial(sign, e);

    sum_num = sum_num * new_den + term_num;
    sum_den = den_prod;
  }
  return sum_num.to_rational() / sum_den.to_rational();
}

}  // namespace pfes
