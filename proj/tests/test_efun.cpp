#include <gtest/gtest.h>

#include <thread>

#include "pfes/efun.hpp"
#include "support.hpp"

using namespace pfes;
using pfes_test::binom;
using pfes_test::ipow;
using pfes_test::qm1_at;

namespace {

// Count of invertible alternating 2r x 2r matrices over F_q, divided by q - 1.
QPoly nondeg_closed_oracle(long r) {
  QPoly num = QPoly::monomial(1, static_cast<std::size_t>(r * (r - 1)));
  for (long j = 1; j <= r; ++j) num *= QPoly::q_pow_minus_one(static_cast<std::size_t>(2 * j - 1));
  return exact_div(num, QPoly({-1, 1}));
}

// Closed stringy formula evaluated in integers at q = x.
mpz_class stringy_at(long n, long k, long x) {
  const long m = (n - 1) / 2;
  mpz_class num = qm1_at(x, n * k), den = x - 1;
  for (long j = k + 1; j <= m; ++j) {
    num *= qm1_at(x, 2 * j);
    den *= qm1_at(x, 2 * j - 2 * k);
  }
  return num / den;
}

}  // namespace

TEST(Efun, ProjectiveSpace) {
  EXPECT_EQ(projective_E(0), QPoly{1});
  EXPECT_EQ(projective_E(2), QPoly({1, 1, 1}));
  EXPECT_EQ(projective_E(5), QPoly({1, 1, 1, 1, 1, 1}));
  for (long k = 0; k <= 20; ++k) {
    EXPECT_EQ(projective_E(k) * QPoly({-1, 1}), QPoly::q_pow_minus_one(static_cast<std::size_t>(k + 1)));
  }
}

TEST(Efun, Grassmannian) {
  EXPECT_EQ(grassmannian_E(2, 4), QPoly({1, 1, 2, 1, 1}));
  EXPECT_EQ(grassmannian_E(2, 5), QPoly({1, 1, 2, 2, 2, 1, 1}));
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(grassmannian_E(0, n), QPoly{1});
  EXPECT_THROW(grassmannian_E(5, 4), RangeError);
  EXPECT_THROW(grassmannian_E(-1, 4), RangeError);
  // Pairs of independent vectors modulo GL_2.
  for (long n = 2; n <= 12; ++n) {
    QPoly qn = QPoly::q_pow_minus_one(static_cast<std::size_t>(n));
    QPoly frames = qn * (QPoly::monomial(1, static_cast<std::size_t>(n)) - QPoly({0, 1}));
    QPoly gl2 = QPoly::q_pow_minus_one(2) * QPoly({0, -1, 1});
    EXPECT_EQ(grassmannian_E(2, n), exact_div(frames, gl2)) << n;
  }
}

TEST(Efun, NondegenerateSkew) {
  EXPECT_EQ(nondeg_skew_E(1), QPoly{1});
  EXPECT_EQ(nondeg_skew_E(2), QPoly({0, 0, -1, 0, 0, 1}));
  EXPECT_EQ(nondeg_skew_E(2).eval(mpz_class(2)), 28);
  QPoly e6 = nondeg_skew_E(3);
  EXPECT_EQ(nondeg_skew_E(1) * grassmannian_E(2, 6) + nondeg_skew_E(2) * grassmannian_E(4, 6) + e6,
            projective_E(14));
  for (long r = 1; r <= 9; ++r) EXPECT_EQ(nondeg_skew_E(r), nondeg_closed_oracle(r)) << r;
  EXPECT_THROW(nondeg_skew_E(0), RangeError);
}

TEST(Efun, RankStratum) {
  EXPECT_EQ(rank_stratum_E(1, 5), grassmannian_E(2, 5));
  EXPECT_EQ(rank_stratum_E(1, 5).eval(mpz_class(2)), 155);
  EXPECT_EQ(rank_stratum_E(2, 4), QPoly({0, 0, -1, 0, 0, 1}));
  EXPECT_THROW(rank_stratum_E(3, 5), RangeError);
  EXPECT_THROW(rank_stratum_E(0, 5), RangeError);
  for (long n = 2; n <= 14; ++n) {
    QPoly acc;
    for (long i = 1; 2 * i <= n; ++i) acc += rank_stratum_E(i, n);
    EXPECT_EQ(acc, projective_E(n * (n - 1) / 2 - 1)) << n;
  }
}

TEST(Efun, Discrepancy) {
  EXPECT_EQ(discrepancy(3, {7, 2}), 4);
  EXPECT_EQ(discrepancy(4, {11, 3}), 6);
  EXPECT_THROW(discrepancy(2, {7, 2}), RangeError);
  EXPECT_THROW(discrepancy(4, {7, 2}), RangeError);
  EXPECT_THROW(discrepancy(3, {7, 3}), RangeError);
  for (long n = 5; n <= 25; n += 2) {
    for (long k = 1; k < (n - 1) / 2; ++k) {
      PfaffianParams p(n, k);
      for (long j = (n + 3 - 2 * k) / 2; j <= p.half(); ++j) {
        const long a = discrepancy(j, p);
        EXPECT_GT(a, -1);
        EXPECT_EQ(2 * (a + 1), (2 * j + 2 * k - n - 1) * (2 * j - 1));
        if (2 * k == n - 3) EXPECT_EQ(a, 2 * j * j - 5 * j + 1);
      }
    }
  }
}

TEST(Efun, LocalContribution) {
  EXPECT_EQ(local_contribution(1, 2, 7), QPoly({1, 0, 1}));
  for (long n = 3; n <= 21; n += 2) {
    const long m = (n - 1) / 2;
    for (long k = 1; k <= m; ++k) {
      EXPECT_EQ(local_contribution(k, k, n), QPoly{1});
      for (long p = 1; p <= k; ++p) {
        QPoly s = local_contribution(p, k, n);
        EXPECT_FALSE(s.is_zero());
        EXPECT_EQ(s, gauss_binomial(m - p, k - p, 2));
      }
    }
  }
  // corank 2k+1 stratum of Pf(2r-2, 2r+1)
  for (long k = 1; k <= 8; ++k) {
    const long n = 2 * k + 3;
    EXPECT_EQ(local_contribution(1, (n - 3) / 2, n) * QPoly::q_pow_minus_one(2),
              QPoly::q_pow_minus_one(static_cast<std::size_t>(2 * k)));
  }
  EXPECT_THROW(local_contribution(3, 2, 7), RangeError);
  EXPECT_THROW(local_contribution(1, 4, 7), RangeError);
  EXPECT_THROW(local_contribution(1, 1, 6), RangeError);
}

TEST(Efun, StringyExamples) {
  EXPECT_EQ(pf_stringy_closed({5, 1}), QPoly({1, 1, 2, 2, 2, 1, 1}));
  EXPECT_EQ(pf_stringy_closed({5, 1}), grassmannian_E(2, 5));
  for (long n = 5; n <= 17; n += 2) {
    const long m = (n - 1) / 2;
    EXPECT_EQ(pf_stringy_closed({n, m}), projective_E(n * m - 1));
  }
  QPoly r3 = exact_div(QPoly::q_pow_minus_one(6) * QPoly::q_pow_minus_one(14),
                       QPoly::q_pow_minus_one(2) * QPoly({-1, 1}));
  EXPECT_EQ(pf_stringy_closed({7, 2}), r3);
  EXPECT_EQ(pf_stringy_rodland(3), r3);
  EXPECT_EQ(pf_stringy_rodland(2), exact_div(QPoly::q_pow_minus_one(4) * QPoly::q_pow_minus_one(5),
                                             QPoly::q_pow_minus_one(2) * QPoly({-1, 1})));
  EXPECT_EQ(pf_stringy_rodland(4), pf_stringy_closed({9, 3}));
  EXPECT_EQ(pf_stringy_recursive({5, 1}), rank_stratum_E(1, 5));
  EXPECT_EQ(pf_stringy_recursive({7, 2}),
            rank_stratum_E(1, 7) * QPoly({1, 0, 1}) + rank_stratum_E(2, 7));
  EXPECT_THROW(pf_stringy_rodland(1), RangeError);
}

TEST(Efun, StringyInvariants) {
  for (long n = 5; n <= 17; n += 2) {
    const long m = (n - 1) / 2;
    for (long k = 1; k <= m; ++k) {
      PfaffianParams p(n, k);
      QPoly c = pf_stringy_closed(p);
      EXPECT_EQ(c, pf_stringy_recursive(p)) << n << " " << k;
      if (2 * k == n - 3) EXPECT_EQ(c, pf_stringy_rodland(m));
      EXPECT_TRUE(c.is_palindromic());
      EXPECT_EQ(c.degree(), 2 * k * n - 2 * k * k - k - 1);
      EXPECT_TRUE(c.nonnegative_coefficients());
      EXPECT_EQ(c.eval(mpz_class(1)), n * k * binom(m, k));
      EXPECT_EQ(pf_stringy_euler(p), n * k * binom(m, k));
      for (long x : {2L, 3L}) EXPECT_EQ(c.eval(mpz_class(x)), stringy_at(n, k, x));
    }
  }
  for (long r = 2; r <= 12; ++r) {
    EXPECT_EQ(pf_stringy_rodland(r).degree(), 2 * r * r + r - 4);
  }
}

TEST(Efun, StrataProducts) {
  for (const auto& s : pf_stringy_strata({11, 3})) {
    EXPECT_EQ(s.product, QRational(s.stratum_E) * s.weight);
  }
}

TEST(Efun, ParamsValidation) {
  EXPECT_THROW(PfaffianParams(4, 1), RangeError);
  EXPECT_THROW(PfaffianParams(3, 1), RangeError);
  EXPECT_THROW(PfaffianParams(7, 0), RangeError);
  EXPECT_THROW(PfaffianParams(7, 4), RangeError);
  EXPECT_NO_THROW(PfaffianParams(7, 3));
}

TEST(EfunIdentities, Relg) {
  for (long r = 0; r <= 8; ++r) {
    for (long i = 0; i <= r; ++i) EXPECT_TRUE(verify_relg(i, r).passed) << i << " " << r;
  }
}

TEST(EfunIdentities, OddEven) {
  for (long r = 1; r <= 8; ++r) {
    EXPECT_TRUE(verify_oddeven_even(r).passed);
    EXPECT_TRUE(verify_oddeven_odd(r).passed);
  }
}

TEST(EfunIdentities, Sum) {
  for (long r = 2; r <= 8; ++r) EXPECT_TRUE(verify_sum(r).passed) << r;
}

TEST(EfunIdentities, Technical) {
  for (long n = 5; n <= 17; n += 2) {
    for (long k = 1; k <= (n - 3) / 2; ++k) EXPECT_TRUE(verify_technical(n, k).passed) << n << " " << k;
  }
  EXPECT_THROW(verify_technical(7, 3), RangeError);
}

TEST(EfunIdentities, Stpf) {
  for (long r = 2; r <= 8; ++r) EXPECT_TRUE(all_passed(verify_stpf(r))) << r;
  EXPECT_EQ(verify_stpf(4).size(), 4u);
}

TEST(EfunIdentities, Pfst2k) {
  for (long n = 5; n <= 17; n += 2) {
    for (long k = 1; k <= (n - 1) / 2; ++k) {
      auto rs = verify_pfst2k(n, k);
      EXPECT_TRUE(all_passed(rs)) << n << " " << k;
    }
  }
}

TEST(EfunIdentities, DetectsCorruptedRightSide) {
  auto r = make_report("probe", {1}, QPoly({1, 1}), QPoly({1, 2}));
  EXPECT_FALSE(r.passed);
}

TEST(EfunMemo, CacheIsInvisible) {
  std::vector<QPoly> with, without;
  clear_memo();
  for (long r = 1; r <= 7; ++r) with.push_back(nondeg_skew_E(r) * grassmannian_E(r, 2 * r + 1));
  set_memoization(false);
  clear_memo();
  for (long r = 1; r <= 7; ++r) without.push_back(nondeg_skew_E(r) * grassmannian_E(r, 2 * r + 1));
  EXPECT_EQ(memo_tables().gauss.size(), 0u);
  set_memoization(true);
  EXPECT_EQ(with, without);
}

TEST(EfunMemo, ConcurrentReaders) {
  clear_memo();
  std::vector<QPoly> out(8);
  std::vector<std::thread> ts;
  for (int t = 0; t < 8; ++t) {
    ts.emplace_back([&out, t] { out[static_cast<std::size_t>(t)] = pf_stringy_recursive({15, 1 + t % 7}); });
  }
  for (auto& t : ts) t.join();
  for (int t = 0; t < 8; ++t) {
    EXPECT_EQ(out[static_cast<std::size_t>(t)], pf_stringy_closed({15, 1 + t % 7}));
  }
}
