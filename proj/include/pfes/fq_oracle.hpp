#pragma once

// Brute-force point counts over F_p for skew forms and subspaces, used to
// check E-polynomials at q = p.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "pfes/errors.hpp"

namespace pfes {

namespace fq {

constexpr std::uint64_t kDefaultEnumLimit = std::uint64_t{1} << 24;
constexpr int kMaxDim = 16;

inline bool is_small_prime(long p) {
  if (p < 2 || p > 251) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline void check_field(long p, long n, const char* who) {
  if (!is_small_prime(p)) throw RangeError(std::string(who) + ": p must be a prime below 256");
  if (n < 0 || n > kMaxDim) throw RangeError(std::string(who) + ": n must lie in [0, 16]");
}

/// Guard on brute-force sweeps; PFES_MAX_ENUM overrides the default 2^24.
inline std::uint64_t enumeration_limit() {
  if (const char* env = std::getenv("PFES_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumLimit;
}

/// p^e, or 0 once it passes `cap`.
inline std::uint64_t bounded_pow(std::uint64_t p, long e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > cap / p) return 0;
    r *= p;
  }
  return r;
}

inline std::uint64_t guarded_count(long p, long e, const std::string& what) {
  const std::uint64_t limit = enumeration_limit();
  const std::uint64_t c = bounded_pow(static_cast<std::uint64_t>(p), e, limit);
  if (c == 0) {
    throw TooLarge(what + ": " + std::to_string(p) + "^" + std::to_string(e) +
                   " exceeds the enumeration limit " + std::to_string(limit));
  }
  return c;
}

inline int inv_mod(int a, int p) {
  int r = 1;
  for (int e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

using Matrix = std::vector<std::vector<int>>;

/// Rank of a square or rectangular matrix over F_p; destroys `m`.
inline int rank_in_place(Matrix& m, int p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const int inv = inv_mod(m[r][c], p);
    for (int x = c; x < cols; ++x) m[r][x] = m[r][x] * inv % p;
    for (int y = r + 1; y < rows; ++y) {
      const int f = m[y][c];
      if (!f) continue;
      for (int x = c; x < cols; ++x) m[y][x] = ((m[y][x] - f * m[r][x]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Fixed-size scratch elimination for the form sweeps.
struct SweepRank {
  int n;
  int p;
  std::array<int, 256> inv{};

  SweepRank(int n_, int p_) : n(n_), p(p_) {
    for (int a = 1; a < p; ++a) inv[static_cast<std::size_t>(a)] = inv_mod(a, p);
  }

  int operator()(const std::uint8_t (&src)[kMaxDim][kMaxDim]) const {
    int m[kMaxDim][kMaxDim];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = src[i][j];
    }
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
      int piv = r;
      while (piv < n && m[piv][c] == 0) ++piv;
      if (piv == n) continue;
      if (piv != r) {
        for (int x = c; x < n; ++x) std::swap(m[piv][x], m[r][x]);
      }
      const int iv = inv[static_cast<std::size_t>(m[r][c])];
      for (int y = r + 1; y < n; ++y) {
        if (!m[y][c]) continue;
        const int f = m[y][c] * iv % p;
        for (int x = c; x < n; ++x) m[y][x] = (m[y][x] + (p - f) * m[r][x]) % p;
      }
      ++r;
    }
    return r;
  }
};

}  // namespace fq

/// Skew form on F_p^n stored by its strictly upper-triangular entries,
/// row by row: (0,1), (0,2), ..., (0,n-1), (1,2), ...
struct SkewFormFp {
  long p = 2;
  long n = 0;
  std::vector<int> entries;

  SkewFormFp() = default;
  SkewFormFp(long p_, long n_) : p(p_), n(n_) {
    fq::check_field(p, n, "SkewFormFp");
    entries.assign(static_cast<std::size_t>(n * (n - 1) / 2), 0);
  }
  SkewFormFp(long p_, long n_, std::vector<int> e) : SkewFormFp(p_, n_) {
    if (e.size() != entries.size()) throw RangeError("SkewFormFp: wrong number of entries");
    for (int& x : e) x = static_cast<int>(((x % p) + p) % p);
    entries = std::move(e);
  }

  /// Sum of e_{2t} ^ e_{2t+1} for t < rank_half.
  static SkewFormFp standard(long p, long n, long rank_half) {
    SkewFormFp f(p, n);
    if (rank_half < 0 || 2 * rank_half > n) throw RangeError("SkewFormFp::standard: need 0 <= 2r <= n");
    for (long t = 0; t < rank_half; ++t) f.set(2 * t, 2 * t + 1, 1);
    return f;
  }

  std::size_t index(long i, long j) const {
    return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
  }

  int at(long i, long j) const {
    if (i == j) return 0;
    if (i < j) return entries[index(i, j)];
    const int v = entries[index(j, i)];
    return v ? static_cast<int>(p - v) : 0;
  }

  void set(long i, long j, long v) {
    if (i == j) throw RangeError("SkewFormFp::set: diagonal is zero");
    v = ((v % p) + p) % p;
    if (i < j) entries[index(i, j)] = static_cast<int>(v);
    else entries[index(j, i)] = v ? static_cast<int>(p - v) : 0;
  }

  fq::Matrix matrix() const {
    fq::Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) m[i][j] = at(i, j);
    }
    return m;
  }

  /// Value on a pair of vectors.
  int eval(const std::vector<int>& x, const std::vector<int>& y) const {
    long s = 0;
    for (long i = 0; i < n; ++i) {
      for (long j = i + 1; j < n; ++j) {
        const long e = entries[index(i, j)];
        if (e) s += e * (static_cast<long>(x[i]) * y[j] - static_cast<long>(x[j]) * y[i]);
      }
    }
    return static_cast<int>(((s % p) + p) % p);
  }

  bool operator==(const SkewFormFp&) const = default;
};

inline int skew_rank(const SkewFormFp& form) {
  fq::Matrix m = form.matrix();
  const int r = fq::rank_in_place(m, static_cast<int>(form.p));
  if (r % 2 != 0) throw std::logic_error("skew_rank: odd rank " + std::to_string(r));
  return r;
}

/// g^T A g for the matrix A of `alpha`.
inline SkewFormFp conjugate(const SkewFormFp& alpha, const fq::Matrix& g) {
  const long n = alpha.n, p = alpha.p;
  if (static_cast<long>(g.size()) != n) throw RangeError("conjugate: size mismatch");
  fq::Matrix a = alpha.matrix();
  SkewFormFp out(p, n);
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      long s = 0;
      for (long x = 0; x < n; ++x) {
        for (long y = 0; y < n; ++y) s += static_cast<long>(g[x][i]) * a[x][y] * g[y][j];
      }
      out.set(i, j, s);
    }
  }
  return out;
}

template <class Rng>
fq::Matrix random_invertible(long p, long n, Rng& rng) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(p - 1));
  for (;;) {
    fq::Matrix g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : g) {
      for (int& x : row) x = d(rng);
    }
    fq::Matrix t = g;
    if (fq::rank_in_place(t, static_cast<int>(p)) == n) return g;
  }
}

template <class Rng>
SkewFormFp random_form(long p, long n, Rng& rng) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(p - 1));
  SkewFormFp f(p, n);
  for (int& x : f.entries) x = d(rng);
  return f;
}

/// Subspace of F_p^n held by its reduced row echelon basis.
struct SubspaceFp {
  long p = 2;
  long n = 0;
  fq::Matrix basis;

  /// Row space of arbitrary vectors.
  static SubspaceFp span(long p, long n, fq::Matrix rows) {
    fq::check_field(p, n, "SubspaceFp");
    for (auto& r : rows) {
      if (static_cast<long>(r.size()) != n) throw RangeError("SubspaceFp: row length mismatch");
      for (int& x : r) x = static_cast<int>(((x % p) + p) % p);
    }
    const int ip = static_cast<int>(p);
    const int R = static_cast<int>(rows.size());
    int r = 0;
    for (int c = 0; c < n && r < R; ++c) {
      int piv = r;
      while (piv < R && rows[piv][c] == 0) ++piv;
      if (piv == R) continue;
      std::swap(rows[piv], rows[r]);
      const int inv = fq::inv_mod(rows[r][c], ip);
      for (int x = 0; x < n; ++x) rows[r][x] = rows[r][x] * inv % ip;
      for (int y = 0; y < R; ++y) {
        const int f = rows[y][c];
        if (y == r || !f) continue;
        for (int x = 0; x < n; ++x) rows[y][x] = ((rows[y][x] - f * rows[r][x]) % ip + ip) % ip;
      }
      ++r;
    }
    rows.resize(static_cast<std::size_t>(r));
    return SubspaceFp{p, n, std::move(rows)};
  }

  long dim() const { return static_cast<long>(basis.size()); }

  bool operator==(const SubspaceFp&) const = default;
};

/// Visits every d-dimensional subspace of F_p^n once, as an RREF matrix:
/// pivot columns first, then the free entries right of each pivot.
template <class Fn>
void for_each_subspace(long p, long n, long d, Fn&& fn) {
  fq::check_field(p, n, "for_each_subspace");
  if (d < 0 || d > n) return;
  std::vector<int> piv(static_cast<std::size_t>(d));
  for (long t = 0; t < d; ++t) piv[t] = static_cast<int>(t);
  SubspaceFp s{p, n, fq::Matrix(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(n), 0))};
  for (;;) {
    std::vector<std::pair<int, int>> free;
    for (long t = 0; t < d; ++t) {
      std::fill(s.basis[t].begin(), s.basis[t].end(), 0);
      s.basis[t][piv[t]] = 1;
      for (int c = piv[t] + 1; c < n; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(static_cast<int>(t), c);
      }
    }
    for (;;) {
      fn(static_cast<const SubspaceFp&>(s));
      std::size_t pos = 0;
      while (pos < free.size()) {
        int& x = s.basis[free[pos].first][free[pos].second];
        if (++x < p) break;
        x = 0;
        ++pos;
      }
      if (pos == free.size()) break;
    }
    long t = d - 1;
    while (t >= 0 && piv[t] == n - d + t) --t;
    if (t < 0) return;
    ++piv[t];
    for (long u = t + 1; u < d; ++u) piv[u] = piv[u - 1] + 1;
  }
}

/// Number of d-dimensional subspaces of F_p^n, checked against the guard.
inline std::uint64_t guarded_subspace_count(long p, long n, long d) {
  const std::uint64_t limit = fq::enumeration_limit();
  if (d < 0 || d > n) return 0;
  // Gaussian binomial by the Pascal rule, saturating past the limit.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(d + 1), 0);
  row[0] = 1;
  for (long m = 1; m <= n; ++m) {
    for (long j = std::min(d, m); j >= 1; --j) {
      const std::uint64_t pj = fq::bounded_pow(static_cast<std::uint64_t>(p), j, limit);
      const std::uint64_t scaled = (pj == 0 || (row[j] && row[j] > limit / pj)) ? limit + 1 : row[j] * pj;
      row[j] = std::min<std::uint64_t>(row[j - 1] + scaled, limit + 1);
    }
  }
  if (row[d] > limit) {
    throw TooLarge("subspace enumeration: G(" + std::to_string(d) + "," + std::to_string(n) +
                   ")(F_" + std::to_string(p) + ") exceeds the enumeration limit " + std::to_string(limit));
  }
  return row[d];
}

inline bool is_isotropic(const SkewFormFp& alpha, const SubspaceFp& s) {
  for (long a = 0; a < s.dim(); ++a) {
    for (long b = a + 1; b < s.dim(); ++b) {
      if (alpha.eval(s.basis[a], s.basis[b]) != 0) return false;
    }
  }
  return true;
}

inline std::uint64_t count_isotropic(long p, long n, long dim_sub, const SkewFormFp& alpha) {
  fq::check_field(p, n, "count_isotropic");
  if (alpha.p != p || alpha.n != n) throw RangeError("count_isotropic: alpha lives on another space");
  if (dim_sub < 0 || dim_sub > n) throw RangeError("count_isotropic: need 0 <= dim_sub <= n");
  guarded_subspace_count(p, n, dim_sub);
  std::uint64_t c = 0;
  for_each_subspace(p, n, dim_sub, [&](const SubspaceFp& s) { c += is_isotropic(alpha, s); });
  return c;
}

/// Projectivized counts from one sweep over all skew forms w on F_p^n.
struct FormCensus {
  long p = 0;
  long n = 0;
  std::vector<std::uint64_t> by_rank_half;               // forms of rank 2r
  std::vector<std::vector<std::uint64_t>> cut_by_rank_half;  // per alpha: rank 2r and <w, alpha> = 0
};

/// Sweeps all p^{n(n-1)/2} forms, split across `threads` workers by the
/// values of the leading entries. Partial counts are summed in a fixed order.
inline FormCensus form_census(long p, long n, const std::vector<SkewFormFp>& alphas = {},
                              unsigned threads = 1) {
  fq::check_field(p, n, "form_census");
  for (const auto& a : alphas) {
    if (a.p != p || a.n != n) throw RangeError("form_census: alpha lives on another space");
  }
  const long E = n * (n - 1) / 2;
  fq::guarded_count(p, E, "form enumeration");
  const std::size_t ranks = static_cast<std::size_t>(n / 2 + 1);
  const std::size_t na = alphas.size();

  // Split on the first h entries.
  long h = 0;
  std::uint64_t chunks = 1;
  if (threads > 1) {
    while (h < E && chunks < 4ULL * threads) {
      chunks *= static_cast<std::uint64_t>(p);
      ++h;
    }
  }
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, chunks)));

  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);
  }

  struct Partial {
    std::vector<std::uint64_t> rank;
    std::vector<std::uint64_t> cut;  // na x ranks
  };
  std::vector<Partial> partial(threads);

  auto worker = [&](unsigned tid) {
    Partial& out = partial[tid];
    out.rank.assign(ranks, 0);
    out.cut.assign(na * ranks, 0);
    const int ip = static_cast<int>(p);
    fq::SweepRank rank_of(static_cast<int>(n), ip);
    std::vector<std::vector<int>> av(na);
    for (std::size_t a = 0; a < na; ++a) av[a] = alphas[a].entries;

    for (std::uint64_t chunk = tid; chunk < chunks; chunk += threads) {
      std::vector<int> e(static_cast<std::size_t>(E), 0);
      std::uint8_t m[fq::kMaxDim][fq::kMaxDim] = {};
      std::uint64_t c = chunk;
      for (long t = 0; t < h; ++t) {
        e[t] = static_cast<int>(c % p);
        c /= p;
      }
      auto put = [&](long t) {
        const auto [i, j] = pos[t];
        m[i][j] = static_cast<std::uint8_t>(e[t]);
        m[j][i] = static_cast<std::uint8_t>(e[t] ? ip - e[t] : 0);
      };
      for (long t = 0; t < E; ++t) put(t);
      for (;;) {
        const int r = rank_of(m);
        if (r % 2 != 0) throw std::logic_error("form_census: odd rank");
        const std::size_t rh = static_cast<std::size_t>(r / 2);
        ++out.rank[rh];
        for (std::size_t a = 0; a < na; ++a) {
          int s = 0;
          const auto& v = av[a];
          for (long t = 0; t < E; ++t) s += e[t] * v[t];
          if (s % ip == 0) ++out.cut[a * ranks + rh];
        }
        long t = h;
        while (t < E) {
          if (++e[t] < ip) {
            put(t);
            break;
          }
          e[t] = 0;
          put(t);
          ++t;
        }
        if (t == E) break;
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  FormCensus res;
  res.p = p;
  res.n = n;
  res.by_rank_half.assign(ranks, 0);
  res.cut_by_rank_half.assign(na, std::vector<std::uint64_t>(ranks, 0));
  for (const auto& part : partial) {
    for (std::size_t r = 0; r < ranks; ++r) {
      res.by_rank_half[r] += part.rank[r];
      for (std::size_t a = 0; a < na; ++a) res.cut_by_rank_half[a][r] += part.cut[a * ranks + r];
    }
  }
  // Drop the zero form, then divide out scalars.
  const std::uint64_t units = static_cast<std::uint64_t>(p - 1);
  res.by_rank_half[0] -= 1;
  for (auto& v : res.cut_by_rank_half) v[0] -= 1;
  auto projectivize = [&](std::uint64_t& x) {
    if (x % units != 0) throw std::logic_error("form_census: count not divisible by p-1");
    x /= units;
  };
  for (auto& x : res.by_rank_half) projectivize(x);
  for (auto& v : res.cut_by_rank_half) {
    for (auto& x : v) projectivize(x);
  }
  return res;
}

inline void check_even_rank(long rank, long n, const char* who) {
  if (rank < 0 || rank % 2 != 0 || rank > n) {
    throw RangeError(std::string(who) + ": rank must be even and in [0, n]");
  }
}

inline std::uint64_t count_rank_stratum(long p, long n, long rank) {
  fq::check_field(p, n, "count_rank_stratum");
  check_even_rank(rank, n, "count_rank_stratum");
  return form_census(p, n).by_rank_half[static_cast<std::size_t>(rank / 2)];
}

/// Forms w of rank rank_w with sum_{i<j} w_ij alpha_ij = 0, up to scalars.
inline std::uint64_t count_cut_stratum(long p, long n, long rank_w, const SkewFormFp& alpha) {
  fq::check_field(p, n, "count_cut_stratum");
  check_even_rank(rank_w, n, "count_cut_stratum");
  return form_census(p, n, {alpha}).cut_by_rank_half[0][static_cast<std::size_t>(rank_w / 2)];
}

}  // namespace pfes
