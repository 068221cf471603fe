#include <cmath>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "oracle.hpp"
#include "qset/errors.hpp"
#include "qset/quotient.hpp"
#include "qset/stats.hpp"

using namespace qset;

TEST_CASE("balls in F_2") {
  CHECK(ball(0).size() == 1);
  const Ball b1 = ball(1);
  REQUIRE(b1.size() == 5);
  std::vector<std::string> names;
  for (const auto& w : b1.words) names.push_back(format_word(w));
  CHECK(names == std::vector<std::string>{"e", "x", "x^-1", "y", "y^-1"});
  CHECK(ball(2).size() == 17);
  CHECK(ball(3).size() == 53);
  CHECK(ball(6).size() == 1457);
  CHECK_THROWS_AS(ball(7), InvalidArgument);
  const Ball b3 = ball(3);
  const auto oracle_words = oracle::words_up_to(3);
  REQUIRE(oracle_words.size() == b3.size());
  for (std::size_t i = 0; i < b3.size(); ++i)
    CHECK(oracle::letters_of(b3.words[i]) == oracle_words[i]);
}

TEST_CASE("splitmix64 reference values") {
  // published first outputs of SplitMix64 seeded with 0
  std::uint64_t state = 0;
  auto next = [&] {
    const std::uint64_t out = splitmix64(state);
    state += 0x9E3779B97F4A7C15ULL;
    return out;
  };
  CHECK(next() == 0xE220A8397B1DCDAFULL);
  CHECK(next() == 0x6E789E6AA1B965F4ULL);
  CHECK(next() == 0x06C45D188009454FULL);
}

TEST_CASE("sampled subsets") {
  const Ball b = ball(2);
  const auto full = sample_subset(b, 1.0, 5);
  REQUIRE(full);
  CHECK(full->size() == b.size());
  CHECK_FALSE(sample_subset(b, 0.0, 5).has_value());
  const auto a1 = sample_subset(b, 0.5, 42);
  const auto a2 = sample_subset(b, 0.5, 42);
  REQUIRE(a1);
  REQUIRE(a2);
  CHECK(format_subset(*a1) == format_subset(*a2));
  CHECK_THROWS_AS(sample_subset(b, 1.5, 1), InvalidArgument);
}

TEST_CASE("exact distribution at radius 1 and 2") {
  const GapStats s1 = gap_distribution(1, ExactMode{});
  CHECK(s1.trials_or_total == 32);
  CHECK(s1.gap_sum == 0);
  CHECK(s1.variance == 0.0);
  CHECK(s1.variance_fraction == "0/1");

  const GapStats s2 = gap_distribution(2, ExactMode{});
  CHECK(s2.trials_or_total == 131072);
  CHECK(s2.gap_sum == 0);
  CHECK(s2.mean_fraction == "0/1");
  CHECK(s2.variance_fraction == "3921/1024");
  CHECK(s2.variance == doctest::Approx(3.8291015625));
  const std::map<std::int64_t, std::uint64_t> expected{
      {-16, 2},    {-14, 6},     {-12, 48},   {-10, 82},   {-8, 492}, {-6, 1286},
      {-4, 5172},  {-2, 18402},  {0, 80092},  {2, 18402},  {4, 5172}, {6, 1286},
      {8, 492},    {10, 82},     {12, 48},    {14, 6},     {16, 2}};
  CHECK(s2.histogram == expected);

  const GapStats s2t = gap_distribution(2, ExactMode{false, 7});
  CHECK(s2t.histogram == s2.histogram);
  CHECK(s2t.gap_square_sum == s2.gap_square_sum);

  CHECK_THROWS_AS(gap_distribution(3, ExactMode{}), BudgetExceeded);
  CHECK_THROWS_AS(gap_distribution(3, ExactMode{true, 1}), BudgetExceeded);
}

TEST_CASE("exact enumeration agrees with direct gap reports at radius 1") {
  const Ball b = ball(1);
  std::map<std::int64_t, std::uint64_t> hist{{0, 1}};
  for (std::uint32_t mask = 1; mask < 32; ++mask) {
    std::vector<Element> elems;
    for (std::uint32_t i = 0; i < 5; ++i)
      if (mask >> i & 1U) elems.emplace_back(b.words[i]);
    ++hist[-gap_report(Subset(b.group, elems)).gap];
  }
  CHECK(gap_distribution(1, ExactMode{}).histogram == hist);
}

TEST_CASE("Monte Carlo is reproducible and thread-independent") {
  const GapStats a = gap_distribution(3, MonteCarloMode{2000, 9, 0.5, 1});
  const GapStats b = gap_distribution(3, MonteCarloMode{2000, 9, 0.5, 4});
  CHECK(a.histogram == b.histogram);
  CHECK(a.gap_sum == b.gap_sum);
  CHECK(a.seed == 9u);
  for (const auto& [g, c] : a.histogram) CHECK(g % 2 == 0);
  std::uint64_t mass = 0;
  for (const auto& [g, c] : a.histogram) mass += c;
  CHECK(mass == 2000);
  CHECK_THROWS_AS(gap_distribution(3, MonteCarloMode{0, 1, 0.5, 1}), InvalidArgument);
}

TEST_CASE("Monte Carlo mean is near zero at radius 3") {
  double total = 0;
  const int seeds = 16;
  for (int s = 0; s < seeds; ++s)
    total += gap_distribution(3, MonteCarloMode{10000, static_cast<std::uint64_t>(s), 0.5, 0}).mean;
  CHECK(std::abs(total / seeds) <= 4.0 / std::sqrt(10000.0));
}

TEST_CASE("GapStats JSON") {
  const nlohmann::json j = gap_distribution(1, ExactMode{});
  CHECK(j["histogram"]["0"] == 32);
  CHECK(j["seed"].is_null());
  CHECK(j["mode"] == "exact");
}
