#pragma once

// Helpers shared by the test binaries.

#include <ostream>
#include <random>

#include "pfes/qcore.hpp"

namespace pfes {

inline void PrintTo(const QPoly& p, std::ostream* os) { *os << render(p); }
inline void PrintTo(const QRational& r, std::ostream* os) { *os << render(r); }

}  // namespace pfes

namespace pfes_test {

inline mpz_class binom(long n, long r) {
  if (r < 0 || r > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

inline mpz_class ipow(long b, long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return out;
}

inline pfes::QPoly random_poly(std::mt19937& rng, int max_deg = 5, long bound = 6) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<pfes::QPoly::Coeff> cs;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) cs.emplace_back(coef(rng));
  return pfes::QPoly(std::move(cs));
}

/// q^e - 1 at an integer q.
inline mpz_class qm1_at(long q, long e) { return ipow(q, e) - 1; }

}  // namespace pfes_test
