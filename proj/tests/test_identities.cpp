#include <gtest/gtest.h>

#include "pfes/identities.hpp"
#include "support.hpp"

using namespace pfes;
using pfes_test::ipow;

namespace {

// Isotropic planes for a rank-2i form on F_q^n, from ordered bases: v1 is
// any nonzero vector, v2 lies in v1's orthogonal minus span(v1).
mpz_class isotropic_planes_count(long q, long i, long n) {
  mpz_class kernel = ipow(q, n - 2 * i);
  mpz_class all = ipow(q, n);
  mpz_class bases = (all - kernel) * (ipow(q, n - 1) - q) + (kernel - 1) * (all - q);
  mpz_class gl2 = (ipow(q, 2) - 1) * (ipow(q, 2) - q);
  return bases / gl2;
}

template <class Fn>
void for_each_cut(long max_n, Fn&& fn) {
  for (long n = 5; n <= max_n; n += 2) {
    for (long k = 1; k <= (n - 1) / 2; ++k) {
      for (long i = 1; i <= (n - 1) / 2; ++i) fn(CutParams{n, k, i});
    }
  }
}

}  // namespace

TEST(Isotropic, Examples) {
  QPoly l = isotropic_E(1, 1, 5);
  EXPECT_EQ(l, QPoly({1, 1, 2, 2, 2, 1}));
  EXPECT_EQ(l.eval(mpz_class(2)), 91);
  EXPECT_THROW(isotropic_E(1, 3, 5), RangeError);
  EXPECT_THROW(isotropic_E(0, 1, 5), RangeError);
}

TEST(Isotropic, PlanesMatchBasisCount) {
  for (long n = 2; n <= 12; ++n) {
    for (long i = 1; 2 * i <= n; ++i) {
      for (long q : {2L, 3L, 5L}) {
        EXPECT_EQ(isotropic_E(1, i, n).eval(mpz_class(q)), isotropic_planes_count(q, i, n))
            << n << " " << i << " " << q;
      }
    }
  }
}

TEST(Isotropic, DegenerateLimits) {
  // A nondegenerate form on an even space has no isotropic subspace above half its dimension.
  for (long i = 1; i <= 5; ++i) {
    for (long k = 1; k <= 5; ++k) {
      if (2 * k > i) EXPECT_TRUE(isotropic_E(k, i, 2 * i).is_zero()) << k << " " << i;
    }
  }
  // Lagrangians of a symplectic 2i-space: prod (q^j + 1).
  for (long i = 2; i <= 8; i += 2) {
    QPoly expect{1};
    for (long j = 1; j <= i; ++j) expect *= QPoly::monomial(1, static_cast<std::size_t>(j)) + QPoly{1};
    EXPECT_EQ(isotropic_E(i / 2, i, 2 * i), expect);
  }
}

TEST(CutFormula, Examples) {
  EXPECT_EQ(f_closed({5, 1, 1}), QPoly({1, 1, 2, 2, 2, 1}));
  EXPECT_EQ(f_closed({5, 1, 1}), isotropic_E(1, 1, 5));
  EXPECT_EQ(f_closed({5, 1, 2}), QPoly({1, 1, 2, 2, 1, 1}));
  EXPECT_THROW(CutParams(5, 3, 1), RangeError);
  EXPECT_THROW(CutParams(6, 1, 1), RangeError);
  EXPECT_THROW(CutParams(7, 1, 0), RangeError);
}

TEST(CutFormula, SecondSummandVanishesAboveRange) {
  for_each_cut(17, [](const CutParams& c) {
    if (c.i > c.half() - c.k) EXPECT_TRUE(f_second_summand(c.k, c.i, c.n).is_zero());
    else EXPECT_FALSE(f_second_summand(c.k, c.i, c.n).is_zero());
  });
}

TEST(CutFormula, ZeroExtension) {
  for (long n = 5; n <= 15; n += 2) {
    for (long i = 1; i <= (n - 1) / 2; ++i) EXPECT_TRUE(f_closed_ext(0, i, n).is_zero());
  }
}

TEST(CutFormula, NonnegativeCoefficients) {
  for_each_cut(17, [](const CutParams& c) {
    EXPECT_TRUE(f_closed(c).nonnegative_coefficients()) << c.n << " " << c.k << " " << c.i;
  });
}

TEST(CutFormula, OpenStrataRoundTrip) {
  for_each_cut(13, [](const CutParams& c) {
    if (c.k == 1) EXPECT_EQ(f_circ(c), f_closed(c));
    EXPECT_EQ(f_from_circ(c), f_closed(c)) << c.n << " " << c.k << " " << c.i;
  });
}

TEST(CutFormula, NewrecGrid) {
  for_each_cut(13, [](const CutParams& c) {
    EXPECT_TRUE(verify_newrec(c).passed) << c.n << " " << c.k << " " << c.i;
  });
  EXPECT_TRUE(verify_newrec({9, 3, 2}).passed);
}

TEST(CutFormula, NewrecCatchesWrongOpenStrata) {
  // Feeding f in place of f° must break the incidence count once k > 1.
  CutParams c{9, 3, 2};
  QPoly lhs;
  for (long p = 1; p <= c.k; ++p) lhs += grassmannian_E(c.n - 2 * c.k, c.n - 2 * p) * f_closed({c.n, p, c.i});
  EXPECT_NE(lhs, incidence_rhs(c.k, c.i, c.n));
}

TEST(Newcor, DiagonalCoefficientIsOne) {
  for (long n = 5; n <= 21; n += 2) {
    for (long k = 0; k <= (n - 1) / 2; ++k) EXPECT_EQ(newcor_coefficient(k, k, n), QRational(QPoly{1}));
  }
}

TEST(Newcor, SolveMatchesClosedForm) {
  for (long n = 5; n <= 13; n += 2) {
    const long m = (n - 1) / 2;
    for (long i = 1; i <= m; ++i) {
      auto f = solve_newcor(m, i, n);
      ASSERT_EQ(f.size(), static_cast<std::size_t>(m));
      EXPECT_EQ(f[0], isotropic_E(1, i, n));
      for (long k = 1; k <= m; ++k) {
        EXPECT_EQ(f[static_cast<std::size_t>(k - 1)], f_closed({n, k, i})) << n << " " << k << " " << i;
      }
    }
  }
  EXPECT_THROW(solve_newcor(4, 1, 7), RangeError);
}

TEST(Hj, Examples) {
  for (long b = 0; b <= 5; ++b) {
    auto r = verify_hj(0, b);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, QRational(QPoly{1}));
  }
  auto r = verify_hj(1, 1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.lhs, QRational(QPoly({0, 1, 1})));
  EXPECT_TRUE(verify_hj(3, 5).passed);
  EXPECT_THROW(verify_hj(2, 1), RangeError);
}

TEST(Hj, Grid) {
  int points = 0;
  for (long b = 0; b <= 8; ++b) {
    for (long a = 0; a <= b; ++a) {
      EXPECT_TRUE(verify_hj(a, b).passed) << a << " " << b;
      ++points;
    }
  }
  EXPECT_EQ(points, 45);
}

TEST(CutSums, Grid) {
  for_each_cut(11, [](const CutParams& c) {
    for (const auto& r : verify_AC_BD(c)) {
      EXPECT_TRUE(r.passed) << r.identity_name << " " << c.n << " " << c.k << " " << c.i;
    }
  });
  auto s = cut_sums({5, 1, 1});
  EXPECT_TRUE(s.C.is_zero());
  EXPECT_TRUE(s.A.is_zero());
}

TEST(CutSums, SumsReassembleIncidenceSystem) {
  // A + B = C + D is the incidence equation with f written in closed form.
  for_each_cut(11, [](const CutParams& c) {
    auto s = cut_sums(c);
    QRational lhs;
    for (long j = 1; j <= c.k; ++j) lhs += QRational(f_closed({c.n, j, c.i})) * newcor_coefficient(c.k, j, c.n);
    EXPECT_EQ(s.A + s.B, lhs);
    EXPECT_EQ(s.C + s.D, QRational(incidence_rhs(c.k, c.i, c.n)));
  });
}

TEST(PhiReductions, Grid) {
  for_each_cut(11, [](const CutParams& c) {
    auto rs = verify_phi_reductions(c);
    ASSERT_EQ(rs.size(), 7u);
    bool a_checked = false, b_checked = false, d_checked = false;
    for (const auto& r : rs) {
      if (r.skipped) {
        EXPECT_FALSE(r.note.empty());
        continue;
      }
      EXPECT_TRUE(r.passed) << r.identity_name << " " << c.n << " " << c.k << " " << c.i;
      const char sum = r.identity_name[4];
      a_checked |= sum == 'A';
      b_checked |= sum == 'B';
      d_checked |= sum == 'D';
    }
    EXPECT_TRUE(a_checked && b_checked && d_checked);
    // forms that never degenerate
    for (const auto& r : rs) {
      if (r.identity_name == "phi.A.2phi1" || r.identity_name == "phi.B.transformed" ||
          r.identity_name == "phi.D.jain.simplified") {
        EXPECT_FALSE(r.skipped) << r.identity_name;
      }
    }
  });
}

TEST(PhiReductions, PolesOnlyInDegenerateRange) {
  for_each_cut(11, [](const CutParams& c) {
    for (const auto& r : verify_phi_reductions(c)) {
      if (r.identity_name == "phi.D.3phi1" && r.skipped) EXPECT_LT(c.n - 2 * c.i, 2 * c.k);
    }
  });
}

TEST(PhiReductions, NamedPoints) {
  for (CutParams c : {CutParams{5, 1, 1}, CutParams{7, 2, 1}, CutParams{9, 2, 2}}) {
    for (const auto& r : verify_phi_reductions(c)) {
      EXPECT_FALSE(r.skipped) << r.identity_name;
      EXPECT_TRUE(r.passed) << r.identity_name;
    }
  }
}
