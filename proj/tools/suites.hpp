#pragma once

// Parameter grids for `pfes verify`. A suite is a list of tasks, one per grid
// point; results are always emitted in task order.

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pfes/mirror.hpp"

namespace pfes::cli {

using Task = std::function<std::vector<IdentityReport>()>;

struct Bounds {
  std::optional<long> max_r, max_n, max_b, max_k;
};

struct Suite {
  std::string name;
  std::map<std::string, long> bounds;  // resolved
  std::vector<Task> tasks;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "relg", "oddeven", "sum",  "technical",  "stpf",      "pfst2k",       "newrec",
      "newcor", "hj",    "ac-bd", "phi",      "main-coeff", "main-main", "even-anomaly"};
  return names;
}

inline Task one(std::function<IdentityReport()> f) {
  return [f = std::move(f)] { return std::vector<IdentityReport>{f()}; };
}

// (n, k, i) with odd 5 <= n <= max_n and 1 <= k, i <= (n-1)/2
template <class Fn>
void cut_grid(long max_n, std::vector<Task>& tasks, Fn fn) {
  for (long n = 5; n <= max_n; n += 2) {
    for (long k = 1; k <= (n - 1) / 2; ++k) {
      for (long i = 1; i <= (n - 1) / 2; ++i) tasks.push_back([=] { return fn(CutParams{n, k, i}); });
    }
  }
}

inline long require_at_least(const char* flag, long v, long lo) {
  if (v < lo) throw RangeError(std::string(flag) + " must be at least " + std::to_string(lo));
  return v;
}

inline Suite build_suite(const std::string& name, const Bounds& b) {
  Suite s;
  s.name = name;
  auto r_bound = [&](long dflt, long lo) {
    return s.bounds["max_r"] = require_at_least("--max-r", b.max_r.value_or(dflt), lo);
  };
  auto n_bound = [&](long dflt) {
    return s.bounds["max_n"] = require_at_least("--max-n", b.max_n.value_or(dflt), 5);
  };
  auto& t = s.tasks;

  if (name == "relg") {
    const long R = r_bound(8, 0);
    for (long r = 0; r <= R; ++r) {
      for (long i = 0; i <= r; ++i) t.push_back(one([=] { return verify_relg(i, r); }));
    }
  } else if (name == "oddeven") {
    const long R = r_bound(8, 1);
    for (long r = 1; r <= R; ++r) {
      t.push_back([=] { return std::vector<IdentityReport>{verify_oddeven_even(r), verify_oddeven_odd(r)}; });
    }
  } else if (name == "sum") {
    const long R = r_bound(8, 2);
    for (long r = 2; r <= R; ++r) t.push_back(one([=] { return verify_sum(r); }));
  } else if (name == "technical") {
    const long N = n_bound(17);
    for (long n = 5; n <= N; n += 2) {
      for (long k = 1; k <= (n - 3) / 2; ++k) t.push_back(one([=] { return verify_technical(n, k); }));
    }
  } else if (name == "stpf") {
    const long R = r_bound(8, 2);
    for (long r = 2; r <= R; ++r) t.push_back([=] { return verify_stpf(r); });
  } else if (name == "pfst2k") {
    const long N = n_bound(17);
    for (long n = 5; n <= N; n += 2) {
      for (long k = 1; k <= (n - 1) / 2; ++k) t.push_back([=] { return verify_pfst2k(n, k); });
    }
  } else if (name == "newrec") {
    cut_grid(n_bound(13), t, [](const CutParams& c) { return std::vector<IdentityReport>{verify_newrec(c)}; });
  } else if (name == "newcor") {
    const long N = n_bound(13);
    for (long n = 5; n <= N; n += 2) {
      const long m = (n - 1) / 2;
      for (long i = 1; i <= m; ++i) {
        t.push_back([=] {
          std::vector<IdentityReport> out;
          auto f = solve_newcor(m, i, n);
          for (long k = 1; k <= m; ++k) {
            out.push_back(make_report("newcor", {n, k, i}, f[static_cast<std::size_t>(k - 1)],
                                      f_closed({n, k, i})));
          }
          return out;
        });
      }
    }
  } else if (name == "hj") {
    const long B = s.bounds["max_b"] = require_at_least("--max-b", b.max_b.value_or(8), 0);
    for (long bb = 0; bb <= B; ++bb) {
      for (long a = 0; a <= bb; ++a) t.push_back(one([=] { return verify_hj(a, bb); }));
    }
  } else if (name == "ac-bd") {
    cut_grid(n_bound(11), t, [](const CutParams& c) { return verify_AC_BD(c); });
  } else if (name == "phi") {
    cut_grid(n_bound(11), t, [](const CutParams& c) { return verify_phi_reductions(c); });
  } else if (name == "main-coeff") {
    const long K = s.bounds["max_k"] = require_at_least("--max-k", b.max_k.value_or(10), 2);
    for (long k = 2; k <= K; ++k) t.push_back(one([=] { return main_coefficient_check(k); }));
  } else if (name == "main-main") {
    const long N = n_bound(13);
    for (long n = 5; n <= N; n += 2) {
      for (long k = 1; k <= (n - 3) / 2; ++k) {
        t.push_back([=] {
          std::vector<IdentityReport> out;
          MirrorCheckReport rep = main_main_check(n, k);
          for (const auto& sw : rep.per_stratum) {
            out.push_back(make_report("main-main.stratum", {n, k, sw.i}, sw.x_weight, sw.y_weight));
          }
          for (std::size_t p = 0; p < rep.dual_local_contributions.size(); ++p) {
            out.push_back(make_report("main-main.duality", {n, k, static_cast<long>(p + 1)},
                                      rep.dual_local_contributions[p], rep.per_stratum[p].y_weight));
          }
          return out;
        });
      }
    }
  } else if (name == "even-anomaly") {
    t.push_back([] { return even_anomaly_check(); });
  } else {
    throw RangeError("unknown suite " + name);
  }
  return s;
}

/// Runs tasks on `threads` workers; the output order is the task order.
inline std::vector<IdentityReport> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<std::vector<IdentityReport>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  if (threads <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
        try {
          slots[i] = tasks[i]();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned w = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
    for (unsigned i = 0; i < w; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<IdentityReport> out;
  for (auto& s : slots) {
    for (auto& r : s) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pfes::cli
