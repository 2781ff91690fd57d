#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfes/qcore/qrational.hpp"

namespace pfes {

/// Outcome of checking one identity at one parameter point.
///
/// Normally the identity asserts lhs == rhs and `passed` records whether the
/// canonical forms agree. A few checks assert an inequality (a documented
/// anomaly); those set expect_equal = false. A point whose evaluation hits a
/// degenerate parameter (a series pole outside the identity's domain) is
/// `skipped`, with the reason in `note`, and counts as neither pass nor fail.
struct IdentityReport {
  std::string identity_name;
  std::vector<long> parameter_point;
  QRational lhs;
  QRational rhs;
  bool passed = false;
  bool skipped = false;
  bool expect_equal = true;
  std::string note;
};

inline IdentityReport make_report(std::string name, std::vector<long> point,
                                  QRational lhs, QRational rhs, bool expect_equal = true) {
  IdentityReport r;
  r.identity_name = std::move(name);
  r.parameter_point = std::move(point);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.expect_equal = expect_equal;
  r.passed = (r.lhs == r.rhs) == expect_equal;
  return r;
}

inline IdentityReport skipped_report(std::string name, std::vector<long> point,
                                     std::string why) {
  IdentityReport r;
  r.identity_name = std::move(name);
  r.parameter_point = std::move(point);
  r.skipped = true;
  r.note = std::move(why);
  return r;
}

inline bool all_passed(const std::vector<IdentityReport>& rs) {
  for (const auto& r : rs) {
    if (!r.skipped && !r.passed) return false;
  }
  return true;
}

}  // namespace pfes
