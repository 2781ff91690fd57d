#pragma once

#include <string>

#include "pfes/qcore/qrational.hpp"

namespace pfes {

enum class Notation { plain, latex };

namespace detail {

inline std::string power_atom(std::size_t e, Notation style) {
  const bool latex = style == Notation::latex;
  const std::string var = latex ? "uv" : "q";
  if (e == 1) return var;
  if (latex) return "(uv)^" + std::to_string(e);
  return "q^" + std::to_string(e);
}

}  // namespace detail

/// Highest power first, e.g. "q^4+q^3+2q^2+q+1". The latex notation writes
/// uv for q, matching E-polynomials written in u and v.
inline std::string render(const QPoly& p, Notation style = Notation::plain) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coeffs();
  for (std::size_t e = cs.size(); e-- > 0;) {
    const mpz_class& c = cs[e];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += detail::power_atom(e, style);
  }
  return out;
}

inline std::string render(const QRational& r, Notation style = Notation::plain) {
  if (r.den().is_one()) return render(r.num(), style);
  if (style == Notation::latex) {
    return "\\frac{" + render(r.num(), style) + "}{" + render(r.den(), style) + "}";
  }
  return "(" + render(r.num(), style) + ")/(" + render(r.den(), style) + ")";
}

}  // namespace pfes
