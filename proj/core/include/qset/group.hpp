#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qset/cayley.hpp"
#include "qset/dihedral.hpp"
#include "qset/permutation.hpp"
#include "qset/word.hpp"

namespace qset {

/// Element of a CayleyTable group, by index.
struct CayleyElement {
  std::uint32_t index = 0;

  friend bool operator==(const CayleyElement&, const CayleyElement&) = default;
  friend auto operator<=>(const CayleyElement&, const CayleyElement&) = default;
};

/// A group element of any supported carrier. Values are always in canonical
/// form, so structural equality is group equality within one context.
using Element = std::variant<Word, DihedralElement, Permutation, CayleyElement>;

enum class GroupKind { free, infinite_dihedral, permutation, cayley };

/// Opaque, hashable identity of an element: two elements of the same group
/// have equal keys iff they are equal in the group.
class ElementKey {
public:
  ElementKey() = default;
  explicit ElementKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  friend bool operator==(const ElementKey&, const ElementKey&) = default;
  friend auto operator<=>(const ElementKey&, const ElementKey&) = default;

private:
  std::string bytes_;
};

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes());
  }
};

namespace detail {
struct GroupData;
}

/// A group implementation: free group F_m, D_inf, the symmetric group S_n on
/// permutations, or a finite group from a Cayley table.
///
/// Cheap to copy; all copies share one immutable implementation, so a Group
/// and its elements may be shared freely between threads.
class Group {
public:
  static Group free(std::uint32_t rank);
  static Group infinite_dihedral();
  static Group symmetric(std::uint32_t degree);
  static Group cayley(CayleyTable table, std::string name);

  GroupKind kind() const noexcept;
  /// Short spec-style name: `f:3`, `dinf`, `s:8`, or the Cayley group's name.
  const std::string& name() const noexcept;
  /// Rank for free groups, degree for permutation groups, order for Cayley groups.
  std::uint32_t parameter() const noexcept;
  const CayleyTable& table() const; ///< Cayley groups only.

  Element identity() const;
  /// Throws ContextMismatch if either argument is foreign to this group.
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool contains(const Element& a) const noexcept;
  ElementKey canonical_key(const Element& a) const;

  /// Free groups are torsion-free; D_inf has reflections; finite carriers scan inverses.
  bool has_order_two() const;
  bool is_abelian() const;
  /// nullopt for infinite groups.
  std::optional<std::uint64_t> order() const;
  /// Every element, in a fixed order. Throws InvalidArgument for infinite
  /// groups or orders above `limit`.
  std::vector<Element> elements(std::uint64_t limit = 5040) const;

  /// Element text in the group's grammar (word, r/s, cycles, or Cayley names).
  std::string format(const Element& a) const;
  Element parse(std::string_view text) const;

  /// Same underlying implementation (not merely isomorphic).
  friend bool operator==(const Group& a, const Group& b) noexcept {
    return a.data_ == b.data_;
  }

private:
  explicit Group(std::shared_ptr<const detail::GroupData> data);
  void require(const Element& a) const;

  std::shared_ptr<const detail::GroupData> data_;
};

/// Group operations as free functions, named after the algebra they implement.
inline Element multiply(const Group& g, const Element& a, const Element& b) {
  return g.multiply(a, b);
}
inline Element inverse(const Group& g, const Element& a) { return g.inverse(a); }
inline bool has_order_two(const Group& g) { return g.has_order_two(); }
inline ElementKey canonical_key(const Group& g, const Element& a) {
  return g.canonical_key(a);
}

} // namespace qset
