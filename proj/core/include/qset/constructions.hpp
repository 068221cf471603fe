#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qset/intset.hpp"
#include "qset/subset.hpp"
#include "qset/word.hpp"

namespace qset {

/// {r^b : b in B} u {s r^b : b in B} in D_inf. Its gap equals |B-B| - |B+B|;
/// checked on construction (InvariantViolation).
Subset dinfty_set(const IntSet& b);

/// {x, xz, y^-1, y^-1 x^-1 y^-1, y^-1 z} in F_3: five elements, |AA^-1| = 17,
/// |A^-1 A| = 15.
Subset f3_base_set();

/// Homomorphism F_m -> F_2 given by the images of the generators.
struct FreeHomomorphism {
  std::uint32_t source_rank = 1;
  std::vector<Word> images; ///< one word of F_2 per source generator

  Word apply(const Word& w) const;
};

/// An embedding F_m -> F_2. For m = 3 it is x -> x^2, y -> xy, z -> xy^-1; for
/// other m, generator i -> x^i y x^-i, whose images freely generate.
FreeHomomorphism embed_free(std::uint32_t m);

/// Image of A under h. Checks that |A|, |AA^-1| and |A^-1 A| are preserved
/// (InvariantViolation otherwise).
Subset apply_hom(const FreeHomomorphism& h, const Subset& a);

/// Union over i = 1..n of {x_i, x_i z_i, y_i^-1, y_i^-1 x_i^-1 y_i^-1, y_i^-1 z_i}
/// in F_{3n}, block i on generators 3i, 3i+1, 3i+2; gap 2n. n = 1 is f3_base_set().
Subset construct_an(std::uint32_t n);

/// C_k = {x^i} u {x^i y}, 1 <= i <= k, in F_2; |C_k C_k^-1| = 2k^2 + 2k - 1.
Subset construct_ck(std::uint32_t k);

/// A closed-form count compared with enumeration.
struct ClosedFormCheck {
  std::string quantity;
  std::string formula;
  std::int64_t claimed = 0;
  std::int64_t computed = 0;

  bool matches() const noexcept { return claimed == computed; }
};

/// Published closed forms for the A_n family at n:
/// right 17n + 25n(n-1), left 15n + 25n(n-1), gap 2n.
std::vector<ClosedFormCheck> an_published_checks(std::uint32_t n);
/// Exact counts for A_n: right 16n + 1 + 25n(n-1), left 14n + 1 + 25n(n-1).
/// The published forms count the identity once per diagonal block.
std::vector<ClosedFormCheck> an_exact_checks(std::uint32_t n);

/// Published closed forms for C_k: right 2k^2 + 2k - 1, left 8k - 4,
/// gap 2k^2 - 6k + 1. Only the first one holds.
std::vector<ClosedFormCheck> ck_published_checks(std::uint32_t k);
/// Exact counts for C_k: right 2k^2 + 2k - 1, left 8k - 5, gap 2(k-1)(k-2).
std::vector<ClosedFormCheck> ck_exact_checks(std::uint32_t k);

/// How realize_gap found its set.
enum class GapRoute { direct, composed, widened };
const char* to_string(GapRoute r) noexcept;

struct GapRealization {
  IntSet set;
  GapRoute route = GapRoute::direct;
  int window = 0;              ///< window of the search that produced the set (or its factors)
  std::vector<IntSet> factors; ///< the two compose_base inputs when route == composed
};

/// Finds B with |B-B| - |B+B| = target: find_gap_set over [0, window], then
/// compose_base over pairs of sets found in that window, then widening the
/// window one step at a time up to kMaxGapWindow. nullopt if all fail.
std::optional<GapRealization> realize_gap(std::int64_t target, int window = 16,
                                          const GapSetOptions& options = {});

} // namespace qset
