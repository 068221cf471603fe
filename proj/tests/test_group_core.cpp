#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qset/catalog.hpp"
#include "qset/errors.hpp"
#include "qset/group.hpp"

using namespace qset;

namespace {

Word w(const Group& g, const char* text) { return std::get<Word>(g.parse(text)); }

} // namespace

TEST_CASE("reduce_word cancels adjacent inverse pairs") {
  const std::vector<Syllable> xyY{{0, 1}, {1, 1}, {1, -1}};
  CHECK(Word::reduce(xyY, 2) == Word::generator(2, 0));
  CHECK(Word::reduce({}, 2).is_identity());
  const std::vector<Syllable> full{{0, 2}, {0, -1}, {0, -1}};
  CHECK(Word::reduce(full, 2).is_identity());
  const std::vector<Syllable> bad{{2, 1}};
  CHECK_THROWS_AS(Word::reduce(bad, 2), MalformedWord);
  const std::vector<Syllable> zero{{0, 0}};
  CHECK_THROWS_AS(Word::reduce(zero, 2), MalformedWord);
}

TEST_CASE("reduce_word is idempotent and never lengthens") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Syllable> raw;
    std::uint64_t raw_len = 0;
    const int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      std::int64_t e = static_cast<std::int64_t>(rng() % 5) - 2;
      if (e == 0) e = 1;
      raw.push_back({static_cast<std::uint32_t>(rng() % 3), e});
      raw_len += static_cast<std::uint64_t>(std::llabs(e));
    }
    const Word r = Word::reduce(raw, 3);
    CHECK(r.length() <= raw_len);
    CHECK(Word::reduce(r.syllables(), 3) == r);
    for (std::size_t i = 1; i < r.syllables().size(); ++i)
      CHECK(r.syllables()[i].generator != r.syllables()[i - 1].generator);
  }
}

TEST_CASE("word grammar round-trips") {
  const Group f3 = Group::free(3);
  CHECK(format_word(w(f3, "x x z")) == "x^2 z");
  CHECK(format_word(w(f3, "y^-1 x^-1 y^-1")) == "y^-1 x^-1 y^-1");
  CHECK(w(f3, "e").is_identity());
  CHECK(w(f3, "x x^-1").is_identity());
  CHECK_THROWS_AS(f3.parse("w"), ParseError);
  CHECK_THROWS_AS(f3.parse("x^"), ParseError);
  const Group f6 = Group::free(6);
  CHECK(format_word(w(f6, "x1 z2^-3")) == "x1 z2^-3");
  CHECK(w(f6, "x z") == w(f6, "x1 z1"));
  CHECK_THROWS_AS(f6.parse("x3"), MalformedWord);
}

TEST_CASE("multiply and inverse in each carrier") {
  const Group d = Group::infinite_dihedral();
  const Element s = d.parse("s"), r = d.parse("r");
  CHECK(d.multiply(s, r) == d.parse("r^-1 s"));
  CHECK(d.inverse(s) == s);
  CHECK(d.multiply(d.multiply(s, r), s) == d.inverse(r));
  for (std::int64_t a = -5; a <= 5; ++a) {
    const Element refl = DihedralElement{a, true};
    CHECK(d.multiply(refl, refl) == d.identity());
  }

  const Group f3 = Group::free(3);
  CHECK(f3.multiply(w(f3, "x"), w(f3, "x z")) == Element(w(f3, "x^2 z")));
  const Group f2 = Group::free(2);
  CHECK(f2.inverse(w(f2, "x y")) == Element(w(f2, "y^-1 x^-1")));
  CHECK_THROWS_AS(f2.multiply(w(f2, "x"), w(f3, "x")), ContextMismatch);
  CHECK_THROWS_AS(f2.multiply(w(f2, "x"), s), ContextMismatch);

  const Group s8 = Group::symmetric(8);
  CHECK(s8.inverse(s8.parse("(1 2 5 6)")) == s8.parse("(1 6 5 2)"));
  const Group s3 = make_group("s:3");
  CHECK(s3.multiply(s3.parse("(1 2)"), s3.parse("(1 2)")) == s3.identity());
}

TEST_CASE("permutation product applies the left factor first") {
  const Group s3 = Group::symmetric(3);
  const auto a = std::get<Permutation>(s3.parse("(1 2)"));
  const auto b = std::get<Permutation>(s3.parse("(2 3)"));
  const auto ab = a * b;
  const auto oa = oracle::perm_from_cycles(3, {{1, 2}});
  const auto ob = oracle::perm_from_cycles(3, {{2, 3}});
  CHECK(std::vector<unsigned>(ab.images().begin(), ab.images().end()) == oracle::perm_mul(oa, ob));
  CHECK(format_permutation(ab) == "(1 3 2)");
  CHECK(parse_permutation("(15)(26)", 8) == parse_permutation("(1 5)(2 6)", 8));
  CHECK_THROWS_AS(parse_permutation("(1 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 9)", 3), ParseError);
}

TEST_CASE("D_inf multiplication agrees with affine maps of Z") {
  const Group d = Group::infinite_dihedral();
  auto to_affine = [](const DihedralElement& e) {
    return oracle::Affine{e.flip ? -1 : 1, e.shift};
  };
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const DihedralElement a{static_cast<std::int64_t>(rng() % 21) - 10, (rng() & 1) != 0};
    const DihedralElement b{static_cast<std::int64_t>(rng() % 21) - 10, (rng() & 1) != 0};
    CHECK(to_affine(a * b) == oracle::aff_mul(to_affine(a), to_affine(b)));
    CHECK(to_affine(inverse(a)) == oracle::aff_inv(to_affine(a)));
  }
  const DihedralElement big{INT64_MAX, false}, one{1, false};
  CHECK_THROWS_AS(big * one, ArithmeticOverflow);
}

TEST_CASE("free-group products agree with letter reduction") {
  std::mt19937_64 rng(3);
  const auto pool = oracle::words_up_to(4);
  const Group f2 = Group::free(2);
  for (int i = 0; i < 2000; ++i) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const Word wa = oracle::to_word(a, 2), wb = oracle::to_word(b, 2);
    CHECK(oracle::letters_of(wa * wb) == oracle::mul(a, b));
    CHECK(oracle::letters_of(wa.inverse()) == oracle::inv(a));
  }
}

TEST_CASE("group axioms hold on random triples and exhaustively on small tables") {
  std::mt19937_64 rng(5);
  const Group f2 = Group::free(2);
  const auto pool = oracle::words_up_to(3);
  for (int i = 0; i < 500; ++i) {
    const Element a = oracle::to_word(pool[rng() % pool.size()], 2);
    const Element b = oracle::to_word(pool[rng() % pool.size()], 2);
    const Element c = oracle::to_word(pool[rng() % pool.size()], 2);
    CHECK(f2.multiply(f2.multiply(a, b), c) == f2.multiply(a, f2.multiply(b, c)));
    CHECK(f2.inverse(f2.inverse(a)) == a);
    CHECK(f2.inverse(f2.multiply(a, b)) == f2.multiply(f2.inverse(b), f2.inverse(a)));
  }
  for (const char* spec : {"q8", "sd16", "d:8", "c:5", "s:3", "ham:1"}) {
    const Group g = make_group(spec);
    const auto elems = g.elements();
    for (const auto& a : elems) {
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
      for (const auto& b : elems)
        for (const auto& c : elems)
          REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    }
  }
}

TEST_CASE("has_order_two census") {
  CHECK_FALSE(Group::free(2).has_order_two());
  CHECK(Group::infinite_dihedral().has_order_two());
  CHECK_FALSE(make_group("c:5").has_order_two());
  CHECK(make_group("c:12").has_order_two());
  CHECK_FALSE(make_group("f21").has_order_two());
  CHECK(make_group("sd16").has_order_two());
  CHECK(Group::symmetric(3).has_order_two());
}

TEST_CASE("canonical keys identify equal elements only") {
  const Group f2 = Group::free(2);
  CHECK(f2.canonical_key(f2.identity()) == f2.canonical_key(f2.parse("x x^-1")));
  CHECK(f2.canonical_key(f2.parse("x")) != f2.canonical_key(f2.parse("y")));
  const Group d = Group::infinite_dihedral();
  const Element rs = d.parse("r s");
  const Element sr = d.multiply(d.parse("s"), d.parse("r^-1"));
  CHECK(d.canonical_key(rs) == d.canonical_key(sr));
  const Group s4 = Group::symmetric(4);
  CHECK(s4.canonical_key(s4.parse("(1 2)(3 4)")) == s4.canonical_key(s4.parse("(3 4)(1 2)")));
}

TEST_CASE("Cayley tables reject non-groups") {
  // 0 is identity, but 1*1 = 1 breaks inverses
  CHECK_THROWS_AS(CayleyTable(2, {0, 1, 1, 1}, {"e", "a"}, {}), InvalidArgument);
  // Latin square without associativity: a loop of order 5
  const std::vector<std::uint32_t> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                                        3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(CayleyTable(5, loop, {"e", "a", "b", "c", "d"}, {}), InvalidArgument);
  CHECK_NOTHROW(CayleyTable(2, {0, 1, 1, 0}, {"e", "a"}, {{"a", 1}}));
}
