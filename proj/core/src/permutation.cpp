#include "qset/permutation.hpp"

#include <algorithm>
#include <string>

#include "qset/errors.hpp"
#include "text_util.hpp"

namespace qset {

Permutation::Permutation(std::uint32_t degree) : images_(degree) {
  for (std::uint32_t i = 0; i < degree; ++i) images_[i] = i;
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidArgument("image array is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw ContextMismatch("cannot multiply permutations of degree " +
                          std::to_string(degree()) + " and " +
                          std::to_string(rhs.degree()));
  Permutation out(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
  return out;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation parse_permutation(std::string_view text, std::uint32_t degree) {
  std::string_view rest = detail::trim(text);
  if (rest == "e") return Permutation(degree);
  Permutation acc(degree);
  if (rest.empty()) throw ParseError("empty permutation (write `()` for the identity)");

  while (!rest.empty()) {
    if (rest.front() != '(')
      throw ParseError("expected `(` in permutation `" + std::string(text) + "`");
    auto close = rest.find(')');
    if (close == std::string_view::npos)
      throw ParseError("unclosed cycle in permutation `" + std::string(text) + "`");
    std::string_view body = rest.substr(1, close - 1);
    rest = detail::trim(rest.substr(close + 1));

    std::string spaced(body);
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    auto parts = detail::split_whitespace(spaced);
    std::vector<std::uint32_t> points;
    if (parts.size() == 1 && parts[0].size() > 1) {
      // `(15)`: one digit per point
      for (char c : parts[0]) {
        if (c < '1' || c > '9')
          throw ParseError("bad point `" + std::string(1, c) + "` in cycle `(" +
                           std::string(body) + ")`");
        points.push_back(static_cast<std::uint32_t>(c - '0'));
      }
    } else {
      for (std::string_view p : parts) {
        auto v = detail::parse_int<std::uint32_t>(p);
        if (!v) throw ParseError("bad point `" + std::string(p) + "` in cycle `(" +
                                 std::string(body) + ")`");
        points.push_back(*v);
      }
    }
    std::vector<bool> used(degree + 1, false);
    for (std::uint32_t p : points) {
      if (p == 0 || p > degree)
        throw ParseError("point " + std::to_string(p) + " outside 1.." +
                         std::to_string(degree) + " in `" + std::string(text) + "`");
      if (used[p])
        throw ParseError("repeated point " + std::to_string(p) + " in cycle `(" +
                         std::string(body) + ")`");
      used[p] = true;
    }
    std::vector<std::uint32_t> cyc(degree);
    for (std::uint32_t i = 0; i < degree; ++i) cyc[i] = i;
    for (std::size_t k = 0; k < points.size(); ++k)
      cyc[points[k] - 1] = points[(k + 1) % points.size()] - 1;
    // Cycles in a product are applied left to right.
    acc = acc * Permutation(std::move(cyc));
  }
  return acc;
}

std::string format_permutation(const Permutation& p) {
  const auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out;
}

} // namespace qset
