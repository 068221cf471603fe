#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qset/subset.hpp"

namespace qset {

/// Which quotient: right is a_i a_j^-1 (AA^-1), left is a_i^-1 a_j (A^-1 A).
enum class Side { left, right };

const char* to_string(Side side) noexcept;

/// Cardinalities and energies of one subset.
struct GapReport {
  std::uint64_t right_card = 0;   ///< |AA^-1|
  std::uint64_t left_card = 0;    ///< |A^-1 A|
  std::uint64_t product_card = 0; ///< |AA|
  std::int64_t gap = 0;           ///< right_card - left_card
  std::uint64_t right_energy = 0; ///< #{a1 a2^-1 = a3 a4^-1}
  std::uint64_t left_energy = 0;  ///< #{a1^-1 a2 = a3^-1 a4}
  std::uint64_t subset_size = 0;

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

void to_json(nlohmann::json& j, const GapReport& r);
void from_json(const nlohmann::json& j, GapReport& r);

/// The n^2 quotients a_i a_j^-1 (right) or a_i^-1 a_j (left), row-major.
Element quotient(const Subset& a, Side side, std::size_t i, std::size_t j);

/// Distinct elements of AA^-1, in order of first appearance over (i, j) row-major.
std::vector<Element> right_quotient_set(const Subset& a);
/// Distinct elements of A^-1 A, first-appearance order.
std::vector<Element> left_quotient_set(const Subset& a);
/// Distinct elements of AA, first-appearance order.
std::vector<Element> product_set(const Subset& a);

GapReport gap_report(const Subset& a);

/// Number of quadruples in A^4 with equal right (or left) quotients, computed
/// as the sum of squared multiplicities of the n^2 quotients.
std::uint64_t additive_energy(const Subset& a, Side side);

/// |AA| < 2|A|. When true, also checks that the gap is zero and throws
/// InvariantViolation if not.
bool small_product_criterion(const Subset& a);

} // namespace qset
