#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qset/group.hpp"
#include "qset/quotient.hpp"
#include "qset/subset.hpp"

namespace qset {

/// Finite group flattened to indices, for subset scans. Order <= 64 so that a
/// quotient set fits in one 64-bit mask.
class IndexedGroup {
public:
  /// Throws InvalidArgument for infinite groups or order > 64.
  explicit IndexedGroup(const Group& g);

  const Group& group() const noexcept { return group_; }
  std::uint32_t order() const noexcept { return order_; }
  const Element& element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t index_of(const Element& e) const;
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * order_ + b];
  }
  std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }

  /// Bitmask of AA^-1 (right) or A^-1 A (left) for the subset given by indices.
  std::uint64_t quotient_mask(std::span<const std::uint32_t> subset, Side side) const;
  /// |AA^-1| - |A^-1 A|.
  std::int64_t gap(std::span<const std::uint32_t> subset) const;

  Subset to_subset(std::span<const std::uint32_t> indices) const;

private:
  Group group_;
  std::uint32_t order_ = 0;
  std::vector<Element> elements_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
};

struct SearchOptions {
  std::uint64_t budget = std::uint64_t{1} << 28; ///< subset evaluations
  std::uint32_t threads = 1;                     ///< 0 picks hardware concurrency
  /// Skip A when A^-1 precedes it in scan order (gap(A^-1) = -gap(A)).
  bool use_inverse_symmetry = true;
};

/// Upper bound on the subsets one scan may cover.
inline constexpr std::uint64_t kMaxScanSubsets = std::uint64_t{1} << 32;

struct SearchVerdict {
  std::string group;
  std::uint32_t max_size_checked = 0;
  std::optional<std::uint32_t> min_asymmetric_size;
  std::optional<Subset> witness;
  std::optional<GapReport> witness_report;
  std::uint64_t subsets_examined = 0;
  std::uint64_t subsets_skipped = 0; ///< pruned by the inverse symmetry
};

void to_json(nlohmann::json& j, const SearchVerdict& v);

/// Scans all nonempty subsets of size <= max_size in size-then-lexicographic
/// index order and reports the first with |AA^-1| != |A^-1 A|. The witness is
/// independent of the thread count. Throws BudgetExceeded (with progress) when
/// the evaluation budget runs out, InvalidArgument when max_size exceeds the
/// order or the scan would cover more than kMaxScanSubsets subsets.
SearchVerdict exhaustive_balance_check(const Group& g, std::uint32_t max_size,
                                       const SearchOptions& options = {});

/// Result of checking the minimum size of an asymmetric subset.
struct SmallSetReport {
  std::string group;
  bool order2free = false;
  bool size3_balanced = false;           ///< every subset of size <= 3 balanced
  bool size4_checked = false;            ///< only for order-2-free groups
  bool size4_balanced = false;           ///< every subset of size <= 4 balanced
  std::optional<Subset> counterexample;  ///< present iff a check failed
  std::uint64_t subsets_examined = 0;

  bool holds() const noexcept {
    return size3_balanced && (!size4_checked || size4_balanced);
  }
};

/// Largest orders accepted for the size-3 and (order-2-free) size-4 sweeps.
inline constexpr std::uint32_t kSize3SweepMaxOrder = 24;
inline constexpr std::uint32_t kSize4SweepMaxOrder = 21;

/// Confirms every subset of size <= 3 is balanced, and every subset of size
/// <= 4 when the group has no element of order 2. A counterexample is reported
/// verbatim. Throws InvalidArgument above the sweep order limits.
SmallSetReport verify_small_sets_balanced(const Group& g,
                                          const SearchOptions& options = {});

/// {(15)(26)(37)(48), (1256)(3874), (17)(35)(48), (18765432)} in S_8;
/// |AA^-1| = 10 and |A^-1 A| = 7.
Subset quasidihedral_witness();

} // namespace qset
