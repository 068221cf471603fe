#include "qset/dihedral.hpp"

#include <cstdint>
#include <string>

#include "qset/errors.hpp"
#include "text_util.hpp"

namespace qset {

DihedralElement operator*(const DihedralElement& lhs, const DihedralElement& rhs) {
  std::int64_t moved = rhs.shift;
  if (lhs.flip) {
    if (moved == INT64_MIN) throw ArithmeticOverflow("D_inf shift overflow");
    moved = -moved;
  }
  DihedralElement out;
  if (__builtin_add_overflow(lhs.shift, moved, &out.shift))
    throw ArithmeticOverflow("D_inf shift overflow");
  out.flip = lhs.flip != rhs.flip;
  return out;
}

DihedralElement inverse(const DihedralElement& a) {
  if (a.flip) return a; // reflections are involutions
  if (a.shift == INT64_MIN) throw ArithmeticOverflow("D_inf shift overflow");
  return DihedralElement{-a.shift, false};
}

DihedralElement parse_dihedral(std::string_view text) {
  const auto tokens = detail::split_whitespace(text);
  if (tokens.empty()) throw ParseError("empty D_inf element (write `e` for the identity)");
  DihedralElement acc;
  for (std::string_view tok : tokens) {
    if (tok == "e") continue;
    auto power = detail::split_power(tok);
    if (!power) throw ParseError("bad exponent in token `" + std::string(tok) + "`");
    if (power->base == "r") {
      acc = acc * DihedralElement{power->exponent, false};
    } else if (power->base == "s") {
      // s^k = s for odd k, e for even k
      const bool odd = (power->exponent % 2) != 0;
      acc = acc * DihedralElement{0, odd};
    } else {
      throw ParseError("unknown D_inf generator in token `" + std::string(tok) + "`");
    }
  }
  return acc;
}

std::string format_dihedral(const DihedralElement& a) {
  std::string out;
  if (a.shift != 0) {
    out = "r";
    if (a.shift != 1) out += '^' + std::to_string(a.shift);
  }
  if (a.flip) out += out.empty() ? "s" : " s";
  return out.empty() ? "e" : out;
}

} // namespace qset
