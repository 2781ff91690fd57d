#pragma once

#include <cstdlib>
#include <utility>

#include "pfes/qcore/qrational.hpp"

namespace pfes {

/// q^shift * body, with body either zero or having a nonzero constant term.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(QPoly body, long shift = 0) : body_(std::move(body)), shift_(shift) {  // NOLINT
    normalize();
  }

  static QLaurent one() { return QLaurent(QPoly{1}); }

  /// c * q^e for any integer e.
  static QLaurent monomial(const mpz_class& c, long e) {
    return QLaurent(QPoly::constant(c), e);
  }

  const QPoly& body() const { return body_; }
  long shift() const { return shift_; }
  bool is_zero() const { return body_.is_zero(); }

  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QLaurent r;
    r.body_ = a.body_ * b.body_;
    r.shift_ = a.shift_ + b.shift_;
    return r;
  }

  friend QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long lo = std::min(a.shift_, b.shift_);
    QPoly sum = a.body_.shifted(static_cast<std::size_t>(a.shift_ - lo)) +
                b.body_.shifted(static_cast<std::size_t>(b.shift_ - lo));
    return QLaurent(std::move(sum), lo);
  }

  QLaurent operator-() const {
    QLaurent r = *this;
    r.body_ = -r.body_;
    return r;
  }

  friend QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.shift_ == b.shift_ && a.body_ == b.body_;
  }

  QRational to_rational() const {
    if (shift_ >= 0) return QRational(body_.shifted(static_cast<std::size_t>(shift_)));
    return QRational(body_, QPoly::monomial(1, static_cast<std::size_t>(-shift_)));
  }

 private:
  void normalize() {
    if (body_.is_zero()) {
      shift_ = 0;
      return;
    }
    const std::size_t low = body_.low_order();
    if (low > 0) {
      body_ = body_.unshifted(low);
      shift_ += static_cast<long>(low);
    }
  }

  QPoly body_;
  long shift_ = 0;
};

/// sign * q^exponent; the parameter and argument atom of q-series.
struct PowerParam {
  int sign = 1;
  long exponent = 0;

  static PowerParam q_pow(long e) { return {1, e}; }
  static PowerParam neg_q_pow(long e) { return {-1, e}; }

  QLaurent to_laurent() const { return QLaurent::monomial(sign, exponent); }

  /// The parameter multiplied by q^e.
  PowerParam times_q_pow(long e) const { return {sign, exponent + e}; }
};

/// 1 - sign * q^m as a Laurent polynomial.
inline QLaurent one_minus(const PowerParam& a) {
  if (a.exponent >= 0) {
    QPoly p = QPoly::monomial(-a.sign, static_cast<std::size_t>(a.exponent));
    return QLaurent(QPoly{1} + p);
  }
  // 1 - s q^{-m} = q^{-m} (q^m - s)
  const auto m = static_cast<std::size_t>(-a.exponent);
  QPoly p = QPoly::monomial(1, m) - QPoly::constant(a.sign);
  return QLaurent(std::move(p), a.exponent);
}

}  // namespace pfes
