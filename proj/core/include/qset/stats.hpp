#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qset/group.hpp"
#include "qset/subset.hpp"

namespace qset {

/// All reduced words of F_2 of length <= radius, ordered by length and then
/// lexicographically with letters x < x^-1 < y < y^-1. Has 2 * 3^radius - 1 words.
struct Ball {
  std::uint32_t radius = 0;
  Group group = Group::free(2);
  std::vector<Word> words;

  std::size_t size() const noexcept { return words.size(); }
};

/// Largest radius ball() enumerates.
inline constexpr std::uint32_t kMaxBallRadius = 6;

Ball ball(std::uint32_t radius);

/// Counter-based SplitMix64 draw for (seed, stream, counter).
///
/// The stream for element index i starts at splitmix64(seed + (i + 1) * G)
/// where G = 0x9E3779B97F4A7C15; its t-th draw is
/// splitmix64(stream + (t + 1) * G). Every (element, trial) pair has its own
/// draw, so subsets are reproducible regardless of how trials are split.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t inclusion_draw(std::uint64_t seed, std::uint64_t element,
                             std::uint64_t trial) noexcept;

/// True iff `draw` falls below probability p (p = 1 always includes).
bool include_with_probability(std::uint64_t draw, double p) noexcept;

/// Each ball word independently with probability p, using trial 0 of the
/// streams above. nullopt is the empty draw (its gap is 0 by convention).
/// Throws InvalidArgument unless 0 <= p <= 1.
std::optional<Subset> sample_subset(const Ball& b, double p, std::uint64_t seed);

struct ExactMode {
  /// Admit up to 2^25 subsets instead of the default 2^20.
  bool allow_large = false;
  std::uint32_t threads = 1; ///< 0 picks hardware concurrency
};

struct MonteCarloMode {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  double probability = 0.5;
  std::uint32_t threads = 1;
};

using SamplingMode = std::variant<ExactMode, MonteCarloMode>;

inline constexpr std::uint64_t kExactDefaultLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kExactOverrideLimit = std::uint64_t{1} << 25;

/// Distribution of |A^-1 A| - |AA^-1| over subsets A of a ball.
struct GapStats {
  std::uint32_t radius = 0;
  std::string mode; ///< "exact" or "montecarlo"
  std::uint64_t trials_or_total = 0;
  std::int64_t gap_sum = 0;
  std::uint64_t gap_square_sum = 0;
  double mean = 0.0;
  double variance = 0.0; ///< population variance
  /// Exact values as reduced fractions, "p/q".
  std::string mean_fraction;
  std::string variance_fraction;
  std::map<std::int64_t, std::uint64_t> histogram;
  std::optional<std::uint64_t> seed;
};

void to_json(nlohmann::json& j, const GapStats& s);

/// Exact mode enumerates every subset of the ball once (Gray-code order,
/// quotient multiplicities updated incrementally); Monte Carlo draws
/// `trials` subsets with MonteCarloMode::probability. The empty subset has
/// gap 0. Results do not depend on the thread count. Throws BudgetExceeded
/// for exact requests beyond the limits above.
GapStats gap_distribution(std::uint32_t radius, const SamplingMode& mode);

} // namespace qset
