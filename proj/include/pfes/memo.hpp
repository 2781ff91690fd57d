#pragma once

#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "pfes/qcore/qpoly.hpp"

namespace pfes {

/// Thread-safe memo table. Concurrent writers of the same key store the same
/// value, so a lost insertion race is harmless.
template <class Key, class Value>
class Memo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(key, std::move(value));
  }

  std::map<Key, Value> snapshot() const {
    std::shared_lock lock(mutex_);
    return table_;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

/// (m, r, base exponent)
using GaussKey = std::array<long, 3>;

struct MemoTables {
  Memo<GaussKey, QPoly> gauss;
  Memo<long, QPoly> nondeg_skew;
  std::atomic<bool> enabled{true};
};

inline MemoTables& memo_tables() {
  static MemoTables tables;
  return tables;
}

/// Memoization never changes results; disabling it only costs time.
inline void set_memoization(bool on) { memo_tables().enabled = on; }
inline bool memoization_enabled() { return memo_tables().enabled; }

inline void clear_memo() {
  memo_tables().gauss.clear();
  memo_tables().nondeg_skew.clear();
}

template <class Key, class Fn>
QPoly memoized(Memo<Key, QPoly>& table, const Key& key, Fn&& compute) {
  if (!memoization_enabled()) return compute();
  if (auto hit = table.find(key)) return *hit;
  QPoly value = compute();
  table.insert(key, value);
  return value;
}

}  // namespace pfes
