#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qset {

/// One run g^k of a single generator; k is never zero.
struct Syllable {
  std::uint32_t generator = 0;
  std::int64_t exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Reduced word in the free group F_m, stored as maximal syllable runs.
///
/// Invariants: adjacent syllables have distinct generators, every exponent is
/// nonzero, every generator index is below rank(). The empty word is e.
class Word {
public:
  /// Identity of F_rank.
  explicit Word(std::uint32_t rank = 1);

  /// Reduces an arbitrary syllable sequence (merging runs and cancelling
  /// inverse pairs). Throws MalformedWord on an out-of-range generator or a
  /// zero exponent, ArithmeticOverflow if a merged exponent overflows.
  static Word reduce(std::span<const Syllable> raw, std::uint32_t rank);

  static Word generator(std::uint32_t rank, std::uint32_t index,
                        std::int64_t exponent = 1);

  std::uint32_t rank() const noexcept { return rank_; }
  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }

  /// Word length: sum of |exponent|.
  std::uint64_t length() const noexcept;

  /// Concatenation followed by reduction; cancellation only happens at the seam.
  /// Throws ContextMismatch when ranks differ.
  Word operator*(const Word& rhs) const;
  Word inverse() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex-free total order (syllable-wise); used for deterministic output only.
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  void push(Syllable s);

  std::uint32_t rank_;
  std::vector<Syllable> syllables_;
};

/// Reduced form of `raw` in F_rank. Same as Word::reduce.
Word reduce_word(std::span<const Syllable> raw, std::uint32_t rank);

/// Generator display name: x, y, z for rank <= 3; x1, y1, z1, x2, ... otherwise.
std::string generator_name(std::uint32_t index, std::uint32_t rank);

/// Inverse of generator_name. Accepts both bare (x, y, z) and numbered (x1, y1,
/// z1, x2, ...) spellings regardless of rank; returns nullopt for anything else.
std::optional<std::uint32_t> parse_generator_name(std::string_view name);

/// Parses whitespace-separated tokens `g`, `g^k`, `g^-k` and `e`.
Word parse_word(std::string_view text, std::uint32_t rank);

/// Renders a word in the same grammar parse_word accepts; identity prints as `e`.
std::string format_word(const Word& w);

} // namespace qset
