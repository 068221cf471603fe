#include "qset/cayley.hpp"

#include <algorithm>
#include <unordered_set>

#include "qset/errors.hpp"
#include "text_util.hpp"

namespace qset {

CayleyTable::CayleyTable(std::uint32_t order, std::vector<std::uint32_t> table,
                         std::vector<std::string> names,
                         std::vector<Generator> generators)
    : order_(order),
      table_(std::move(table)),
      names_(std::move(names)),
      generators_(std::move(generators)) {
  validate();
}

void CayleyTable::validate() {
  const std::size_t n = order_;
  if (n == 0) throw InvalidArgument("Cayley table of order 0");
  if (table_.size() != n * n)
    throw InvalidArgument("Cayley table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(n * n));
  if (names_.size() != n) throw InvalidArgument("Cayley table needs one name per element");
  if (std::unordered_set<std::string>(names_.begin(), names_.end()).size() != n)
    throw InvalidArgument("Cayley element names must be distinct");
  for (const auto& g : generators_)
    if (g.index >= n) throw InvalidArgument("generator `" + g.name + "` out of range");

  // Latin square
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = table_[i * n + j];
      if (v >= n || seen[v]) throw InvalidArgument("Cayley table rows are not permutations");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = table_[j * n + i];
      if (seen[v]) throw InvalidArgument("Cayley table columns are not permutations");
      seen[v] = 1;
    }
  }

  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool neutral = true;
    for (std::uint32_t j = 0; j < n && neutral; ++j)
      neutral = multiply(e, j) == j && multiply(j, e) == j;
    if (neutral) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidArgument("Cayley table has no identity");

  inverse_.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t j = 0;
    while (multiply(i, j) != identity_) ++j; // Latin square: exactly one hit
    if (multiply(j, i) != identity_)
      throw InvalidArgument("element " + names_[i] + " has no two-sided inverse");
    inverse_[i] = j;
  }

  auto check = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
      throw InvalidArgument("Cayley table is not associative at (" + names_[a] + ", " +
                            names_[b] + ", " + names_[c] + ")");
  };
  if (n <= 64) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::uint64_t state = 0x2545F4914F6CDD1DULL;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return static_cast<std::uint32_t>(state % n);
    };
    for (int t = 0; t < 1 << 16; ++t) check(next(), next(), next());
  }
}

bool CayleyTable::is_abelian() const {
  for (std::uint32_t i = 0; i < order_; ++i)
    for (std::uint32_t j = i + 1; j < order_; ++j)
      if (multiply(i, j) != multiply(j, i)) return false;
  return true;
}

bool CayleyTable::has_order_two() const {
  for (std::uint32_t i = 0; i < order_; ++i)
    if (i != identity_ && inverse_[i] == i) return true;
  return false;
}

std::uint32_t CayleyTable::element_order(std::uint32_t a) const {
  std::uint32_t k = 1;
  for (std::uint32_t p = a; p != identity_; p = multiply(p, a)) ++k;
  return k;
}

std::uint32_t CayleyTable::parse_element(std::string_view text) const {
  const std::string_view trimmed = detail::trim(text);
  for (std::uint32_t i = 0; i < order_; ++i)
    if (names_[i] == trimmed) return i;

  const auto tokens = detail::split_whitespace(trimmed);
  if (tokens.empty()) throw ParseError("empty group element (write `e` for the identity)");
  std::uint32_t acc = identity_;
  for (std::string_view tok : tokens) {
    if (tok == "e") continue;
    auto power = detail::split_power(tok);
    if (!power) throw ParseError("bad exponent in token `" + std::string(tok) + "`");
    auto gen = std::find_if(generators_.begin(), generators_.end(),
                            [&](const Generator& g) { return g.name == power->base; });
    if (gen == generators_.end())
      throw ParseError("unknown generator in token `" + std::string(tok) + "`");
    const auto ord = static_cast<std::int64_t>(element_order(gen->index));
    std::int64_t k = power->exponent % ord;
    if (k < 0) k += ord;
    for (std::int64_t t = 0; t < k; ++t) acc = multiply(acc, gen->index);
  }
  return acc;
}

CayleyTable CayleyTable::relabeled(const std::vector<std::uint32_t>& relabel) const {
  if (relabel.size() != order_) throw InvalidArgument("relabeling has the wrong size");
  std::vector<std::uint32_t> table(table_.size());
  std::vector<std::string> names(order_);
  for (std::uint32_t i = 0; i < order_; ++i) {
    names[relabel[i]] = names_[i];
    for (std::uint32_t j = 0; j < order_; ++j)
      table[static_cast<std::size_t>(relabel[i]) * order_ + relabel[j]] =
          relabel[multiply(i, j)];
  }
  std::vector<Generator> gens = generators_;
  for (auto& g : gens) g.index = relabel[g.index];
  return CayleyTable(order_, std::move(table), std::move(names), std::move(gens));
}

} // namespace qset
