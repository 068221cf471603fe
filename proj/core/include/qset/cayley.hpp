#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qset {

/// A finite group given by its multiplication table.
///
/// Elements are indices 0..order-1. Construction validates the group axioms:
/// exhaustively (Latin square, identity, inverses, every associativity
/// triple) when order <= 64, and by a fixed pseudo-random sample of triples
/// above that.
class CayleyTable {
public:
  struct Generator {
    std::string name;
    std::uint32_t index;
  };

  /// `table` is row-major, table[i * order + j] = i * j. `names` gives each
  /// element's display text (it must re-parse through parse_element).
  /// Throws InvalidArgument when the table is not a group.
  CayleyTable(std::uint32_t order, std::vector<std::uint32_t> table,
              std::vector<std::string> names, std::vector<Generator> generators);

  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  const std::vector<std::uint32_t>& inverses() const noexcept { return inverse_; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }
  const std::string& name(std::uint32_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }

  bool is_abelian() const;
  /// True iff some non-identity i has inverse(i) == i.
  bool has_order_two() const;
  std::uint32_t element_order(std::uint32_t a) const;

  /// Reads a product of generator tokens (`a`, `a^3`, `b^-1`), `e`, or an
  /// exact element name. Throws ParseError.
  std::uint32_t parse_element(std::string_view text) const;

  /// The same group with element i renamed to relabel[i].
  CayleyTable relabeled(const std::vector<std::uint32_t>& relabel) const;

private:
  void validate();

  std::uint32_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::string> names_;
  std::vector<Generator> generators_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
};

} // namespace qset
