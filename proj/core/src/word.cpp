#include "qset/word.hpp"

#include <cstdlib>

#include "qset/errors.hpp"
#include "text_util.hpp"

namespace qset {

Word::Word(std::uint32_t rank) : rank_(rank) {
  if (rank == 0) throw MalformedWord("free group rank must be at least 1");
}

void Word::push(Syllable s) {
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    std::int64_t merged = 0;
    if (__builtin_add_overflow(syllables_.back().exponent, s.exponent, &merged))
      throw ArithmeticOverflow("word exponent overflow");
    if (merged == 0)
      syllables_.pop_back();
    else
      syllables_.back().exponent = merged;
    return;
  }
  syllables_.push_back(s);
}

Word Word::reduce(std::span<const Syllable> raw, std::uint32_t rank) {
  Word w(rank);
  w.syllables_.reserve(raw.size());
  for (const Syllable& s : raw) {
    if (s.generator >= rank)
      throw MalformedWord("generator index " + std::to_string(s.generator) +
                          " out of range for rank " + std::to_string(rank));
    if (s.exponent == 0) throw MalformedWord("syllable with zero exponent");
    w.push(s);
  }
  return w;
}

Word Word::generator(std::uint32_t rank, std::uint32_t index, std::int64_t exponent) {
  const Syllable s{index, exponent};
  return reduce(std::span<const Syllable>(&s, 1), rank);
}

std::uint64_t Word::length() const noexcept {
  std::uint64_t n = 0;
  for (const Syllable& s : syllables_)
    n += static_cast<std::uint64_t>(s.exponent < 0 ? -s.exponent : s.exponent);
  return n;
}

Word Word::operator*(const Word& rhs) const {
  if (rank_ != rhs.rank_)
    throw ContextMismatch("cannot multiply words of F_" + std::to_string(rank_) +
                          " and F_" + std::to_string(rhs.rank_));
  Word out = *this;
  out.syllables_.reserve(syllables_.size() + rhs.syllables_.size());
  std::size_t k = 0;
  // Cancellation can only cascade while the seam keeps collapsing.
  while (k < rhs.syllables_.size()) {
    const std::size_t before = out.syllables_.size();
    const bool touches = before > 0 && out.syllables_.back().generator ==
                                           rhs.syllables_[k].generator;
    out.push(rhs.syllables_[k++]);
    if (!touches || out.syllables_.size() == before) break;
  }
  out.syllables_.insert(out.syllables_.end(), rhs.syllables_.begin() + k,
                        rhs.syllables_.end());
  return out;
}

Word Word::inverse() const {
  Word out(rank_);
  out.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    if (it->exponent == INT64_MIN) throw ArithmeticOverflow("word exponent overflow");
    out.syllables_.push_back(Syllable{it->generator, -it->exponent});
  }
  return out;
}

Word reduce_word(std::span<const Syllable> raw, std::uint32_t rank) {
  return Word::reduce(raw, rank);
}

std::string generator_name(std::uint32_t index, std::uint32_t rank) {
  static constexpr char letters[] = {'x', 'y', 'z'};
  std::string name(1, letters[index % 3]);
  if (rank > 3) name += std::to_string(index / 3 + 1);
  return name;
}

std::optional<std::uint32_t> parse_generator_name(std::string_view name) {
  if (name.empty()) return std::nullopt;
  std::uint32_t letter = 0;
  switch (name.front()) {
  case 'x': letter = 0; break;
  case 'y': letter = 1; break;
  case 'z': letter = 2; break;
  default: return std::nullopt;
  }
  if (name.size() == 1) return letter;
  auto block = detail::parse_int<std::uint32_t>(name.substr(1));
  if (!block || *block == 0 || name[1] == '+' || name[1] == '0') return std::nullopt;
  return (*block - 1) * 3 + letter;
}

Word parse_word(std::string_view text, std::uint32_t rank) {
  std::vector<Syllable> raw;
  const auto tokens = detail::split_whitespace(text);
  if (tokens.empty()) throw ParseError("empty word (write `e` for the identity)");
  for (std::string_view tok : tokens) {
    if (tok == "e") continue;
    auto power = detail::split_power(tok);
    if (!power) throw ParseError("bad exponent in token `" + std::string(tok) + "`");
    auto gen = parse_generator_name(power->base);
    if (!gen) throw ParseError("unknown generator in token `" + std::string(tok) + "`");
    if (*gen >= rank)
      throw MalformedWord("generator `" + std::string(power->base) +
                          "` out of range for F_" + std::to_string(rank));
    if (power->exponent == 0)
      throw ParseError("zero exponent in token `" + std::string(tok) + "`");
    raw.push_back(Syllable{*gen, power->exponent});
  }
  return Word::reduce(raw, rank);
}

std::string format_word(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += generator_name(s.generator, w.rank());
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

} // namespace qset
