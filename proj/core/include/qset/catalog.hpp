#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qset/group.hpp"

namespace qset {

enum class Family {
  cyclic,           ///< c:n
  dihedral,         ///< d:2n (parameter is the order)
  symmetric,        ///< s:n, permutations of degree n
  quaternion8,      ///< q8
  quasidihedral16,  ///< sd16, <a, b | a^8 = b^2 = e, bab = a^3>
  frobenius21,      ///< f21, <a, b | a^7 = b^3 = e, b^-1 a b = a^2>
  hamiltonian,      ///< ham:n = Q8 x C2^n
  direct_product,   ///< prod(X,Y)
  free,             ///< f:m
  infinite_dihedral ///< dinf
};

/// A named group family with its parameter, as written on the command line
/// (`c:12`, `d:8`, `s:4`, `q8`, `sd16`, `f21`, `ham:2`, `prod(q8,c:2)`,
/// `f:3`, `dinf`).
struct GroupSpec {
  Family family = Family::cyclic;
  std::uint32_t parameter = 0;
  std::vector<GroupSpec> factors; ///< direct_product only, flattened, >= 2

  /// Throws ParseError.
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;
  /// Order implied by the family formula; nullopt for infinite families.
  std::optional<std::uint64_t> expected_order() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Largest order realized as a Cayley table.
inline constexpr std::uint64_t kMaxCayleyOrder = 64;

/// Realizes a spec. symmetric(n) becomes a permutation group; free and dinf
/// their own carriers; every other family a validated Cayley table, with
/// generator names suffixed by factor position inside products (a1, b1, a2).
/// Throws UnsupportedSpec for orders above kMaxCayleyOrder or bad parameters.
Group make_group(const GroupSpec& spec);
Group make_group(std::string_view spec);

/// Finite groups the catalog lists by default.
std::vector<GroupSpec> catalog_specs();

/// Cayley table of the subgroup generated by `generators` (closure under
/// multiplication), elements named in the ambient group's grammar. Throws
/// InvalidArgument when the closure exceeds `limit` elements.
Group subgroup_closure(const Group& ambient, std::span<const Element> generators,
                       std::string name, std::uint64_t limit = kMaxCayleyOrder);

/// True iff the table has order 16 and elements a of order 8, b of order 2
/// with b outside <a> and b a b = a^3, i.e. the group is quasidihedral of order 16.
bool is_quasidihedral16(const CayleyTable& table);

} // namespace qset
