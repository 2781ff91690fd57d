#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfes/errors.hpp"

namespace pfes {

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of q^i. The zero polynomial
/// has no coefficients; nonzero polynomials never carry trailing zeros.
class QPoly {
 public:
  using Coeff = mpz_class;

  QPoly() = default;

  QPoly(std::initializer_list<long> cs) {
    coeffs_.reserve(cs.size());
    for (long c : cs) coeffs_.emplace_back(c);
    trim();
  }

  explicit QPoly(std::vector<Coeff> cs) : coeffs_(std::move(cs)) { trim(); }

  static QPoly constant(const Coeff& c) { return QPoly(std::vector<Coeff>{c}); }

  static QPoly monomial(const Coeff& c, std::size_t power) {
    std::vector<Coeff> cs(power + 1);
    cs[power] = c;
    return QPoly(std::move(cs));
  }

  /// q^m - 1 for m >= 0 (zero when m == 0).
  static QPoly q_pow_minus_one(std::size_t m) {
    std::vector<Coeff> cs(m + 1);
    cs[m] += 1;
    cs[0] -= 1;
    return QPoly(std::move(cs));
  }

  /// 1 - q^m for m >= 0.
  static QPoly one_minus_q_pow(std::size_t m) { return -q_pow_minus_one(m); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  Coeff coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
  }

  const Coeff& leading() const { return coeffs_.back(); }

  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t low_order() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
    return i == coeffs_.size() ? 0 : i;
  }

  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  QPoly& operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  QPoly& operator*=(const Coeff& c) {
    if (c == 0) {
      coeffs_.clear();
    } else {
      for (auto& x : coeffs_) x *= c;
    }
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                   b.coeffs_[j].get_mpz_t());
      }
    }
    return QPoly(std::move(out));
  }

  friend QPoly operator*(QPoly a, const Coeff& c) { return a *= c; }
  friend QPoly operator*(const Coeff& c, QPoly a) { return a *= c; }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiply by q^s.
  QPoly shifted(std::size_t s) const {
    if (is_zero() || s == 0) return *this;
    std::vector<Coeff> cs(s);
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    QPoly r;
    r.coeffs_ = std::move(cs);
    return r;
  }

  /// Divide by q^s; the low s coefficients must be zero.
  QPoly unshifted(std::size_t s) const {
    if (is_zero() || s == 0) return *this;
    QPoly r;
    r.coeffs_.assign(coeffs_.begin() + static_cast<long>(s), coeffs_.end());
    return r;
  }

  /// p(q^b).
  QPoly inflated(std::size_t b) const {
    if (is_zero() || b == 1) return *this;
    std::vector<Coeff> cs(static_cast<std::size_t>(degree()) * b + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i * b] = coeffs_[i];
    return QPoly(std::move(cs));
  }

  Coeff eval(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  mpq_class eval(mpq_class x) const {
    x.canonicalize();
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  /// gcd of the coefficients; 0 for the zero polynomial.
  Coeff content() const {
    Coeff g = 0;
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Content removed and leading coefficient made positive.
  QPoly primitive_part() const {
    if (is_zero()) return {};
    Coeff g = content();
    if (leading() < 0) g = -g;
    QPoly r = *this;
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
  }

  /// q^deg * p(1/q) == p(q), with deg the degree of p.
  bool is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
  }

  bool nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Coeff& c) { return c >= 0; });
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// Raised when an exact polynomial division leaves a remainder. Carries both
/// operands so that a failed polynomiality claim can be reported in full.
struct NotDivisible : Error {
  NotDivisible(QPoly num, QPoly den)
      : Error("polynomial division leaves a remainder"),
        numerator(std::move(num)),
        denominator(std::move(den)) {}
  QPoly numerator;
  QPoly denominator;
};

namespace detail {

/// Quotient and remainder when the leading coefficient of den divides every
/// intermediate leading coefficient; std::nullopt otherwise.
inline std::optional<std::pair<QPoly, QPoly>> divmod_integral(const QPoly& num,
                                                              const QPoly& den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.degree() < den.degree()) return std::pair{QPoly{}, num};
  std::vector<mpz_class> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size();
  std::vector<mpz_class> quot(rem.size() - dn + 1);
  const mpz_class& lc = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j < dn; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
    }
    quot[k] = std::move(c);
  }
  return std::pair{QPoly(std::move(quot)), QPoly(std::move(rem))};
}

/// lc(b)^e * a mod b for the smallest e that keeps everything integral.
inline QPoly pseudo_remainder(QPoly a, const QPoly& b) {
  const long db = b.degree();
  const mpz_class& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const auto shift = static_cast<std::size_t>(a.degree() - db);
    mpz_class la = a.leading();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    mpz_class fa = lb / g;
    mpz_class fb = la / g;
    a *= fa;
    a -= (b * fb).shifted(shift);
  }
  return a;
}

}  // namespace detail

/// Exact quotient num / den; throws NotDivisible if den does not divide num.
inline QPoly exact_div(const QPoly& num, const QPoly& den) {
  auto qr = detail::divmod_integral(num, den);
  if (!qr || !qr->second.is_zero()) throw NotDivisible(num, den);
  return std::move(qr->first);
}

inline std::optional<QPoly> try_exact_div(const QPoly& num, const QPoly& den) {
  auto qr = detail::divmod_integral(num, den);
  if (!qr || !qr->second.is_zero()) return std::nullopt;
  return std::move(qr->first);
}

/// Greatest common divisor in Z[q], normalized to a positive leading
/// coefficient. gcd(0, 0) is 0.
inline QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  mpz_class c;
  {
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  QPoly x = a.primitive_part();
  QPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  // Most divisions met in practice are exact, so try the cheap route first.
  if (try_exact_div(x, y)) return y * c;
  while (!y.is_zero()) {
    if (y.degree() == 0) return QPoly::constant(c);
    QPoly r = detail::pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x * c;
}

}  // namespace pfes
