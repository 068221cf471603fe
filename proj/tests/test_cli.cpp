#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "doctest.h"
#include "qset/catalog.hpp"
#include "qset/quotient.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qset::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("quotient reports the F_3 base set") {
  const auto r = run({"quotient", "--group", "f:3", "--set", "x, x z, y^-1, y^-1 x^-1 y^-1, y^-1 z"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["report"]["right_card"] == 17);
  CHECK(j["report"]["left_card"] == 15);
  CHECK(j["report"]["gap"] == 2);
  CHECK(j["right_quotient_set"].size() == 17);
}

TEST_CASE("printed sets re-parse to the same subset") {
  const auto r = run({"construct", "dinfty", "--intset", "{0,2,3,4,7,11,12,14}"});
  REQUIRE(r.code == 0);
  const json printed = r.parsed();
  std::string joined;
  for (const auto& e : printed["set"]) joined += (joined.empty() ? "" : ", ") + e.get<std::string>();
  const auto q = run({"quotient", "--group", "dinf", "--set", joined});
  REQUIRE(q.code == 0);
  CHECK(q.parsed()["set"] == r.parsed()["set"]);
  CHECK(q.parsed()["report"]["gap"] == -1);
}

TEST_CASE("graph component count equals the quotient size") {
  const std::string set = "x, x z, y^-1, y^-1 x^-1 y^-1, y^-1 z";
  const auto g = run({"graph", "--group", "f:3", "--set", set, "--side", "right"});
  REQUIRE(g.code == 0);
  CHECK(g.parsed()["components"].size() == 17);
  const auto l = run({"graph", "--group", "f:3", "--set", set, "--side", "left"});
  CHECK(l.parsed()["components"].size() == 15);
  const auto dot = run({"graph", "--group", "f:3", "--set", set, "--format", "dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("graph", 0) == 0);
  std::string big;
  for (int k = 1; k <= 13; ++k) big += (k > 1 ? ", x^" : "x^") + std::to_string(k);
  const auto fallback = run({"graph", "--group", "f:2", "--set", big, "--format", "dot"});
  CHECK(fallback.code == 0);
  CHECK(fallback.parsed()["n"] == 13);
  CHECK_FALSE(fallback.err.empty());
}

TEST_CASE("construct an --verify flags the published cardinalities") {
  const auto r = run({"construct", "an", "--n", "2", "--verify"});
  CHECK(r.code == qset::cli::kVerifyMismatch);
  const json j = r.parsed();
  CHECK(j["set"].size() == 10);
  CHECK(j["report"]["gap"] == 4);
  CHECK(j["checks"][0]["claimed"] == 84);
  CHECK(j["checks"][0]["computed"] == 83);
  CHECK(r.err.find("claims 84") != std::string::npos);
  const auto one = run({"construct", "an", "--n", "1", "--verify"});
  CHECK(one.code == 0);
  const auto ck = run({"construct", "ck", "--k", "3", "--verify"});
  CHECK(ck.code == qset::cli::kVerifyMismatch);
  CHECK(ck.parsed()["report"]["gap"] == 4);
  const auto ckq = run({"construct", "ck", "--k", "3"});
  CHECK(ckq.code == 0);
}

TEST_CASE("construct gapset and f3") {
  const auto g = run({"construct", "gapset", "--t", "-1", "--verify"});
  REQUIRE(g.code == 0);
  CHECK(g.parsed()["intset"] == "{0,2,3,4,7,11,12,14}");
  CHECK(g.parsed()["route"] == "direct");
  const auto f3 = run({"construct", "f3", "--verify"});
  REQUIRE(f3.code == 0);
  CHECK(f3.parsed()["embedded"]["set"][4] == "y^-2");
}

TEST_CASE("search finds the quasidihedral witness") {
  const auto r = run({"search", "--group", "sd16", "--max-size", "4", "--threads", "3"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["min_asymmetric_size"] == 4);
  CHECK(j["witness"].size() == 4);
  CHECK(std::abs(j["witness_report"]["gap"].get<int>()) == 3);
  const auto s3 = run({"search", "--group", "s:3", "--max-size", "6"});
  CHECK(s3.parsed()["min_asymmetric_size"].is_null());
  const auto small = run({"search", "--group", "f21", "--small-sets"});
  CHECK(small.parsed()["holds"] == true);
}

TEST_CASE("budget exhaustion exits 3") {
  const auto r = run({"search", "--group", "s:4", "--max-size", "6", "--budget", "2^6"});
  CHECK(r.code == qset::cli::kBudget);
  CHECK(r.parsed()["error"] == "budget_exceeded");
  const auto big = run({"sample", "--radius", "3", "--mode", "exact"});
  CHECK(big.code == qset::cli::kBudget);
}

TEST_CASE("sample modes") {
  const auto e = run({"sample", "--radius", "1", "--mode", "exact"});
  REQUIRE(e.code == 0);
  CHECK(e.parsed()["variance_fraction"] == "0/1");
  const auto m1 = run({"sample", "--radius", "2", "--mode", "mc", "--trials", "500", "--seed", "3"});
  const auto m2 = run({"sample", "--radius", "2", "--mode", "mc", "--trials", "500", "--seed", "3",
                       "--threads", "4"});
  REQUIRE(m1.code == 0);
  CHECK(m1.out == m2.out);
  CHECK(m1.parsed()["seed"] == 3);
}

TEST_CASE("catalog") {
  const auto r = run({"catalog", "--list"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed().size() == qset::catalog_specs().size());
  const auto show = run({"catalog", "--show", "q8"});
  CHECK(show.parsed()["elements"].size() == 8);
}

TEST_CASE("usage errors exit 2 and name the problem") {
  CHECK(run({}).code == qset::cli::kUsage);
  CHECK(run({"frobnicate"}).code == qset::cli::kUsage);
  CHECK(run({"quotient", "--group", "f:2"}).code == qset::cli::kUsage);
  const auto bad_word = run({"quotient", "--group", "f:2", "--set", "x, w"});
  CHECK(bad_word.code == qset::cli::kUsage);
  CHECK(bad_word.err.find("w") != std::string::npos);
  CHECK(run({"quotient", "--group", "g:2", "--set", "x"}).code == qset::cli::kUsage);
  CHECK(run({"construct", "an", "--k", "2"}).code == qset::cli::kUsage);
  CHECK(run({"construct", "dinfty", "--t", "1", "--intset", "{0}"}).code == qset::cli::kUsage);
  CHECK(run({"sample", "--radius", "1", "--mode", "exact", "--seed", "4"}).code == qset::cli::kUsage);
  CHECK(run({"search", "--group", "sd16", "--max-size", "4", "--small-sets"}).code ==
        qset::cli::kUsage);
  CHECK(run({"search", "--group", "sd16", "--max-size", "4", "--budget", "3^4"}).code ==
        qset::cli::kUsage);
  CHECK(run({"catalog"}).code == qset::cli::kUsage);
  CHECK(run({"catalog", "--list", "--show", "q8"}).code == qset::cli::kUsage);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("quotient") != std::string::npos);
}
