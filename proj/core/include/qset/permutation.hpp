#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qset {

/// Bijection of {0, ..., degree-1}.
///
/// Products compose left to right: (a * b)(i) = b(a(i)), i.e. apply a first.
/// This matches the GAP/Sage convention for permutation groups.
class Permutation {
public:
  /// Identity of the given degree.
  explicit Permutation(std::uint32_t degree = 0);
  /// Throws InvalidArgument unless images is a bijection on [0, size).
  explicit Permutation(std::vector<std::uint32_t> images);

  std::uint32_t degree() const noexcept {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::uint32_t operator[](std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  /// Throws ContextMismatch on degree mismatch.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint32_t> images_;
};

/// Parses 1-based cycle notation such as `(1 5)(2 6)` or `(1,5)(2,6)`; cycles
/// written without separators, like `(15)(26)`, are read digit by digit and
/// therefore need degree <= 9. `()` and `e` denote the identity.
Permutation parse_permutation(std::string_view text, std::uint32_t degree);

/// 1-based cycle notation with space-separated points; identity prints as `()`.
std::string format_permutation(const Permutation& p);

} // namespace qset
