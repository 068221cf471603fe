#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "oracle.hpp"
#include "qset/catalog.hpp"
#include "qset/errors.hpp"
#include "qset/quotient.hpp"
#include "qset/search.hpp"

using namespace qset;

TEST_CASE("group specs parse and print") {
  for (const char* s : {"c:12", "d:8", "s:4", "q8", "sd16", "f21", "ham:2", "prod(q8,c:2)", "f:3",
                        "dinf"})
    CHECK(GroupSpec::parse(s).to_string() == s);
  CHECK(GroupSpec::parse("prod(c:2,prod(c:3,c:5))").factors.size() == 3);
  CHECK_THROWS_AS(GroupSpec::parse("d:7"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("x:3"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("prod(c:2)"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("prod(c:2,c:3"), ParseError);
  CHECK_THROWS_AS(make_group("c:65"), UnsupportedSpec);
  CHECK_THROWS_AS(make_group("ham:4"), UnsupportedSpec);
  CHECK_THROWS_AS(make_group("prod(s:3,c:2)"), UnsupportedSpec);
}

TEST_CASE("catalog groups have the right orders and properties") {
  const Group s3 = make_group("s:3");
  CHECK(*s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  const Group sd = make_group("sd16");
  CHECK(*sd.order() == 16);
  CHECK(sd.has_order_two());
  CHECK(is_quasidihedral16(sd.table()));
  CHECK_FALSE(is_quasidihedral16(make_group("d:16").table()));
  const Group f21 = make_group("f21");
  CHECK(*f21.order() == 21);
  CHECK_FALSE(f21.has_order_two());
  CHECK_FALSE(f21.is_abelian());
  CHECK(*make_group("ham:2").order() == 32);
  CHECK(make_group("q8").parse("b^2") == make_group("q8").parse("a^2"));
  CHECK(*make_group("prod(q8,c:2)").order() == 16);
  for (const auto& spec : catalog_specs()) CHECK(*make_group(spec).order() == *spec.expected_order());
  // element names re-parse
  const Group p = make_group("prod(q8,c:2)");
  for (const auto& e : p.elements()) CHECK(p.parse(p.format(e)) == e);
}

TEST_CASE("S_3: all 64 subsets balanced") {
  const SearchVerdict v = exhaustive_balance_check(make_group("s:3"), 6);
  CHECK_FALSE(v.min_asymmetric_size.has_value());
  CHECK(v.max_size_checked == 6);
  CHECK(v.subsets_examined + v.subsets_skipped == 63);
  const SearchVerdict perm = exhaustive_balance_check(Group::symmetric(3), 6);
  CHECK_FALSE(perm.witness.has_value());
}

TEST_CASE("quasidihedral16 has an unbalanced set of size 4") {
  const SearchVerdict v = exhaustive_balance_check(make_group("sd16"), 4);
  REQUIRE(v.witness);
  CHECK(v.min_asymmetric_size == 4u);
  CHECK(std::abs(v.witness_report->gap) == 3);
  CHECK(v.witness->size() == 4);
  const nlohmann::json j = v;
  CHECK(j["witness"].size() == 4);
}

TEST_CASE("witness is independent of threads and pruning") {
  for (const char* spec : {"sd16", "s:4", "d:8"}) {
    const Group g = make_group(spec);
    const auto m = std::min<std::uint32_t>(*g.order(), 4);
    SearchOptions base;
    const SearchVerdict ref = exhaustive_balance_check(g, m, base);
    for (std::uint32_t t : {2u, 3u, 8u}) {
      SearchOptions o;
      o.threads = t;
      const SearchVerdict v = exhaustive_balance_check(g, m, o);
      CHECK(v.min_asymmetric_size == ref.min_asymmetric_size);
      CHECK(v.subsets_examined == ref.subsets_examined);
      if (ref.witness) CHECK(format_subset(*v.witness) == format_subset(*ref.witness));
    }
    SearchOptions noprune;
    noprune.use_inverse_symmetry = false;
    const SearchVerdict np = exhaustive_balance_check(g, m, noprune);
    CHECK(np.min_asymmetric_size == ref.min_asymmetric_size);
    CHECK(np.subsets_skipped == 0);
    if (ref.witness) CHECK(format_subset(*np.witness) == format_subset(*ref.witness));
  }
}

TEST_CASE("verdicts survive relabeling of the table") {
  const Group sd = make_group("sd16");
  std::vector<std::uint32_t> perm(16);
  std::iota(perm.begin(), perm.end(), 0U);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const Group relabeled = Group::cayley(sd.table().relabeled(perm), "sd16'");
    const SearchVerdict v = exhaustive_balance_check(relabeled, 4);
    CHECK(v.min_asymmetric_size == 4u);
    CHECK(std::abs(v.witness_report->gap) == 3);
  }
}

TEST_CASE("small sets are balanced") {
  for (const char* spec : {"d:8", "q8", "sd16", "s:3", "c:12"}) {
    const SmallSetReport r = verify_small_sets_balanced(make_group(spec));
    CHECK(r.size3_balanced);
    CHECK(r.holds());
  }
  for (const char* spec : {"f21", "c:15", "c:5"}) {
    const SmallSetReport r = verify_small_sets_balanced(make_group(spec));
    CHECK(r.order2free);
    CHECK(r.size4_checked);
    CHECK(r.size4_balanced);
  }
  CHECK_THROWS_AS(verify_small_sets_balanced(make_group("ham:2")), InvalidArgument);
  CHECK_THROWS_AS(verify_small_sets_balanced(Group::free(2)), InvalidArgument);
}

TEST_CASE("hamiltonian groups stay balanced up to size 6") {
  for (const char* spec : {"ham:0", "ham:1"}) {
    SearchOptions o;
    o.threads = 0;
    const SearchVerdict v = exhaustive_balance_check(make_group(spec), 6, o);
    CHECK_FALSE(v.witness.has_value());
  }
}

TEST_CASE("order-2-free witnesses have even gap") {
  for (const char* spec : {"c:5", "c:7", "f21"}) {
    const SearchVerdict v = exhaustive_balance_check(make_group(spec), 5);
    if (v.witness_report) CHECK(v.witness_report->gap % 2 == 0);
  }
}

TEST_CASE("budget and scan limits") {
  SearchOptions o;
  o.budget = 100;
  try {
    (void)exhaustive_balance_check(make_group("s:4"), 5, o);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.examined() <= 100);
    CHECK(e.sizes_completed() >= 1);
  }
  CHECK_THROWS_AS(exhaustive_balance_check(make_group("c:5"), 6), InvalidArgument);
  CHECK_THROWS_AS(exhaustive_balance_check(make_group("c:64"), 20), InvalidArgument);
  CHECK_THROWS_AS(exhaustive_balance_check(Group::free(2), 2), InvalidArgument);
}

TEST_CASE("quasidihedral witness in S_8") {
  const Subset a = quasidihedral_witness();
  const GapReport r = gap_report(a);
  CHECK(r.right_card == 10);
  CHECK(r.left_card == 7);
  // permutation oracle
  std::vector<oracle::Perm> perms{
      oracle::perm_from_cycles(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}),
      oracle::perm_from_cycles(8, {{1, 2, 5, 6}, {3, 8, 7, 4}}),
      oracle::perm_from_cycles(8, {{1, 7}, {3, 5}, {4, 8}}),
      oracle::perm_from_cycles(8, {{1, 8, 7, 6, 5, 4, 3, 2}})};
  const auto o = oracle::counts(perms, oracle::perm_mul, oracle::perm_inv);
  CHECK(o.right == 10);
  CHECK(o.left == 7);
  const Group closure = subgroup_closure(a.group(), a.elements(), "closure");
  CHECK(*closure.order() == 16);
  CHECK(is_quasidihedral16(closure.table()));
}
