#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qset {

/// Element r^shift s^flip of the infinite dihedral group <r, s | s^2 = e, srs = r^-1>.
struct DihedralElement {
  std::int64_t shift = 0;
  bool flip = false;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

/// (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b xor d). Throws ArithmeticOverflow.
DihedralElement operator*(const DihedralElement& lhs, const DihedralElement& rhs);
DihedralElement inverse(const DihedralElement& a);

/// Product of tokens over {r, s} (with optional ^k exponents), or `e`.
DihedralElement parse_dihedral(std::string_view text);
/// Normal form text: `e`, `r^a`, `s`, `r^a s`.
std::string format_dihedral(const DihedralElement& a);

} // namespace qset
