#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qset/group.hpp"

namespace qset {

/// A nonempty finite subset a_1..a_n of one group, in caller-given order.
///
/// The order is significant: it fixes vertex indices of difference graphs.
class Subset {
public:
  /// Throws ContextMismatch for foreign elements, InvalidArgument for
  /// duplicates or an empty list.
  Subset(Group group, std::vector<Element> elements);

  const Group& group() const noexcept { return group_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }

  /// A^-1 = {a_1^-1, ..., a_n^-1}, same index order.
  Subset inverse() const;
  /// True iff A = A^-1 as sets.
  bool is_symmetric() const;

private:
  Group group_;
  std::vector<Element> elements_;
};

/// Parses a comma-separated list of elements in the group's grammar. Commas
/// inside parentheses (permutation cycles) do not split.
Subset parse_subset(const Group& group, std::string_view text);

/// Comma-separated element list that parse_subset reads back to the same subset.
std::string format_subset(const Subset& subset);

} // namespace qset
