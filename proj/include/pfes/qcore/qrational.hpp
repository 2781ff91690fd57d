#pragma once

#include <utility>

#include "pfes/qcore/qpoly.hpp"

namespace pfes {

/// Reduced quotient num/den of two integer polynomials in q.
/// Invariants: den != 0, gcd(num, den) == 1 in Z[q], leading coefficient of
/// den positive, and zero is stored as 0/1. Canonical forms compare equal
/// exactly when the rational functions are equal.
class QRational {
 public:
  QRational() : den_(QPoly{1}) {}
  QRational(QPoly p) : num_(std::move(p)), den_(QPoly{1}) {}  // NOLINT implicit
  QRational(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  /// True when the denominator is a constant, i.e. the value is a polynomial
  /// over Q. Integer-coefficient polynomials additionally have den == 1.
  bool is_polynomial() const { return den_.is_constant(); }

  /// The value as an integer polynomial; throws NotPolynomial otherwise.
  QPoly to_poly() const {
    if (!den_.is_one()) throw NotPolynomial("rational function is not an integer polynomial");
    return num_;
  }

  QRational operator-() const {
    QRational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  QRational inverse() const {
    if (is_zero()) throw ZeroDenominator();
    return QRational(den_, num_);
  }

  friend QRational operator+(const QRational& a, const QRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
    if (a.den_.is_one()) return QRational::trusted(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return QRational::trusted(a.num_ + b.num_ * a.den_, a.den_);
    // Henrici: with g = gcd(b1, b2), only g can share factors with the sum.
    QPoly g = gcd(a.den_, b.den_);
    QPoly da = exact_div(a.den_, g);
    QPoly db = exact_div(b.den_, g);
    QPoly num = a.num_ * db + b.num_ * da;
    QPoly den = da * b.den_;
    QPoly h = gcd(num, g);
    if (!h.is_one()) {
      num = exact_div(num, h);
      den = exact_div(den, h);
    }
    return QRational::trusted(std::move(num), std::move(den));
  }

  friend QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

  friend QRational operator*(const QRational& a, const QRational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return QRational(a.num_ * b.num_);
    QPoly g1 = gcd(a.num_, b.den_);
    QPoly g2 = gcd(b.num_, a.den_);
    QPoly num = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    QPoly den = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    return QRational::trusted(std::move(num), std::move(den));
  }

  friend QRational operator/(const QRational& a, const QRational& b) {
    return a * b.inverse();
  }

  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  QRational& operator/=(const QRational& o) { return *this = *this / o; }

  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at an integer or rational point; throws ZeroDenominator at a pole.
  mpq_class eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) throw ZeroDenominator();
    mpq_class r = num_.eval(x) / d;
    r.canonicalize();
    return r;
  }

 private:
  struct Trusted {};
  QRational(Trusted, QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    fix_sign();
  }
  static QRational trusted(QPoly num, QPoly den) {
    return QRational(Trusted{}, std::move(num), std::move(den));
  }

  void fix_sign() {
    if (num_.is_zero()) {
      den_ = QPoly{1};
      return;
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  void reduce() {
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
      den_ = QPoly{1};
      return;
    }
    if (auto q = try_exact_div(num_, den_)) {
      num_ = std::move(*q);
      den_ = QPoly{1};
      return;
    }
    QPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    fix_sign();
  }

  QPoly num_;
  QPoly den_;
};

/// Canonical reduced fraction num/den; throws ZeroDenominator if den == 0.
inline QRational rational_reduce(const QPoly& num, const QPoly& den) {
  return QRational(num, den);
}

}  // namespace pfes
