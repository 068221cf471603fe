#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qset {

/// Finite set of integers, kept sorted ascending without duplicates.
class IntSet {
public:
  IntSet() = default;
  IntSet(std::initializer_list<std::int64_t> values);
  explicit IntSet(std::vector<std::int64_t> values);

  std::span<const std::int64_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  std::int64_t min() const { return elements_.front(); }
  std::int64_t max() const { return elements_.back(); }
  /// max - min; 0 for singletons.
  std::int64_t span() const { return max() - min(); }
  bool contains(std::int64_t v) const;

  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend auto operator<=>(const IntSet&, const IntSet&) = default;

private:
  std::vector<std::int64_t> elements_;
};

/// `{0,2,3}` (whitespace tolerated). Throws ParseError.
IntSet parse_intset(std::string_view text);
std::string format_intset(const IntSet& s);

IntSet sumset(const IntSet& b);
IntSet difference_set(const IntSet& b);

/// |B - B| - |B + B|.
std::int64_t difference_excess(const IntSet& b);

struct GapSetOptions {
  /// Largest subset size tried; 0 means no cap.
  std::uint32_t size_cap = 0;
  /// Worker threads over subset-size strata; 0 picks hardware concurrency.
  std::uint32_t threads = 1;
};

/// Largest window find_gap_set accepts.
inline constexpr int kMaxGapWindow = 24;

/// First B in [0, window], ordered by size then lexicographically, with
/// |B - B| - |B + B| = target. nullopt when the window is exhausted.
/// Throws InvalidArgument for window outside [0, kMaxGapWindow].
std::optional<IntSet> find_gap_set(std::int64_t target, int window,
                                   const GapSetOptions& options = {});

/// B1 + b * B2 with b = 2 * span(B1) + 1. Sum and difference counts multiply;
/// this is checked and InvariantViolation thrown otherwise.
IntSet compose_base(const IntSet& b1, const IntSet& b2);

} // namespace qset
