#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "oracle.hpp"
#include "qset/catalog.hpp"
#include "qset/constructions.hpp"
#include "qset/difference_graph.hpp"
#include "qset/errors.hpp"
#include "qset/search.hpp"

using namespace qset;

namespace {

// 1-based helpers matching the indices a_1..a_n
Vertex v(std::uint32_t i, std::uint32_t j) { return Vertex{i - 1, j - 1}; }

void check_phi_bijection(const Subset& a) {
  const auto right = build_difference_graph(a, Side::right);
  const auto left = build_difference_graph(a, Side::left);
  REQUIRE(right.edge_count() == left.edge_count());
  std::set<Edge> images;
  right.for_each_edge([&](const Edge& e) {
    const Edge f = phi_edge(right, e);
    REQUIRE(left.adjacent(f.from, f.to));
    images.insert(f);
  });
  CHECK(images.size() == right.edge_count());
  std::set<Edge> back;
  left.for_each_edge([&](const Edge& e) {
    const Edge f = phi_edge(left, e);
    REQUIRE(right.adjacent(f.from, f.to));
    back.insert(f);
  });
  CHECK(back.size() == left.edge_count());
}

} // namespace

TEST_CASE("component counts match quotient-set sizes") {
  const Subset a = f3_base_set();
  const auto right = build_difference_graph(a, Side::right);
  const auto left = build_difference_graph(a, Side::left);
  CHECK(right.component_count() == 17);
  CHECK(left.component_count() == 15);
  CHECK(right.diagonal_component() == 0);
  CHECK(right.edge_count() == additive_energy(a, Side::right));
  CHECK(left.edge_count() == additive_energy(a, Side::left));
  CHECK(right.undirected_edge_count() == (right.edge_count() + 25) / 2);

  const auto single = build_difference_graph(parse_subset(Group::free(2), "e"), Side::right);
  CHECK(single.n() == 1);
  CHECK(single.component_count() == 1);
  CHECK(validate_lemma_properties(single, true).empty());
}

TEST_CASE("transpose acts on components") {
  CHECK(transpose(v(1, 2)) == v(2, 1));
  CHECK(transpose(transpose(v(3, 5))) == v(3, 5));
  const auto g = build_difference_graph(f3_base_set(), Side::right);
  CHECK(transpose_component(g, g.diagonal_component()) == g.diagonal_component());
  CHECK(transpose_component(g, g.component_of(v(3, 1))) == g.component_of(v(1, 3)));
  for (std::uint32_t c = 0; c < g.component_count(); ++c)
    CHECK(transpose_component(g, transpose_component(g, c)) == c);
}

TEST_CASE("the F_3 triangle and clique bound") {
  const auto g = build_difference_graph(f3_base_set(), Side::right);
  const auto comp = g.component_of(v(3, 1));
  CHECK(g.members(comp) == std::vector<Vertex>{v(3, 1), v(4, 3), v(5, 2)});
  CHECK(max_offdiagonal_clique(g) == 3);
  const auto xx = build_difference_graph(parse_subset(Group::free(2), "x, x^2"), Side::right);
  CHECK(max_offdiagonal_clique(xx) == 1);
}

TEST_CASE("phi on explicit edges") {
  const auto g = build_difference_graph(f3_base_set(), Side::right);
  const auto left = build_difference_graph(f3_base_set(), Side::left);
  const Edge e{v(3, 1), v(4, 3)};
  const Edge f = phi_edge(g, e);
  CHECK(f == Edge{v(4, 3), v(3, 1)});
  CHECK(left.adjacent(f.from, f.to));
  const Edge loop{v(2, 4), v(2, 4)};
  CHECK(phi_edge(g, loop) == Edge{v(2, 2), v(4, 4)});
  CHECK_THROWS_AS(phi_edge(g, Edge{v(1, 2), v(1, 3)}), NotAnEdge);
  CHECK_THROWS_AS(phi_edge(g, Edge{v(1, 2), v(9, 3)}), NotAnEdge);
}

TEST_CASE("phi is a bijection on random subsets of three carriers") {
  std::mt19937_64 rng(99);
  const auto pool = oracle::words_up_to(3);
  const Group sd16 = make_group("sd16");
  const auto sd_elems = sd16.elements();
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Element> fe;
    std::set<oracle::Letters> seen;
    const std::size_t n = 1 + rng() % 6;
    while (fe.size() < n) {
      const auto& l = pool[rng() % pool.size()];
      if (seen.insert(l).second) fe.emplace_back(oracle::to_word(l, 2));
    }
    check_phi_bijection(Subset(Group::free(2), fe));

    std::set<std::int64_t> b;
    while (b.size() < 1 + rng() % 4) b.insert(static_cast<std::int64_t>(rng() % 9));
    check_phi_bijection(dinfty_set(IntSet(std::vector<std::int64_t>(b.begin(), b.end()))));

    std::vector<Element> se;
    for (const auto& el : sd_elems)
      if (rng() % 3 == 0) se.push_back(el);
    if (!se.empty()) check_phi_bijection(Subset(sd16, se));
  }
}

TEST_CASE("lemma validators") {
  const auto f3 = build_difference_graph(f3_base_set(), Side::right);
  CHECK(validate_lemma_properties(f3, true).empty());
  const auto f3l = build_difference_graph(f3_base_set(), Side::left);
  CHECK(validate_lemma_properties(f3l, true).empty());

  const Subset w = quasidihedral_witness();
  for (Side side : {Side::right, Side::left}) {
    const auto g = build_difference_graph(w, side);
    CHECK(validate_lemma_properties(g, false).empty());
  }
  const auto flipped = validate_lemma_properties(build_difference_graph(w, Side::right), true);
  REQUIRE_FALSE(flipped.empty());
  for (const auto& viol : flipped) CHECK(viol.property == LemmaProperty::transposed_pair);
}

TEST_CASE("parity certificates") {
  const auto f3 = build_difference_graph(f3_base_set(), Side::right);
  const auto cert = parity_certificate(f3, true);
  CHECK(cert.diagonal_component_count == 1);
  CHECK(cert.paired_components.size() == 8);
  CHECK(cert.fixed_nondiagonal.empty());
  CHECK(cert.component_count() == 17);
  CHECK(cert.certifies_odd());

  const Group c5 = make_group("c:5");
  const auto full = build_difference_graph(Subset(c5, c5.elements()), Side::right);
  CHECK(parity_certificate(full, true).fixed_nondiagonal.empty());

  const auto sd = build_difference_graph(quasidihedral_witness(), Side::right);
  CHECK_FALSE(parity_certificate(sd, false).fixed_nondiagonal.empty());
}

TEST_CASE("DOT export") {
  const auto single = build_difference_graph(parse_subset(Group::free(2), "e"), Side::right);
  const std::string one = export_dot(single);
  CHECK(one.find("v1_1") != std::string::npos);
  CHECK(one.find("v1_2") == std::string::npos);

  const auto g = build_difference_graph(f3_base_set(), Side::right);
  const std::string dot = export_dot(g);
  CHECK(dot == export_dot(g));
  std::size_t nodes = 0;
  for (std::uint32_t i = 1; i <= 5; ++i)
    for (std::uint32_t j = 1; j <= 5; ++j)
      if (dot.find("v" + std::to_string(i) + "_" + std::to_string(j) + " [") != std::string::npos)
        ++nodes;
  CHECK(nodes == 25);
  // triangle edges of the clique (3,1)(4,3)(5,2)
  CHECK(dot.find("v3_1 -- v4_3") != std::string::npos);
  CHECK(dot.find("v3_1 -- v5_2") != std::string::npos);
  CHECK(dot.find("v4_3 -- v5_2") != std::string::npos);

  std::vector<Element> many;
  for (int k = 1; k <= 13; ++k) many.emplace_back(Word::generator(2, 0, k));
  const auto big = build_difference_graph(Subset(Group::free(2), many), Side::right);
  CHECK_THROWS_AS(export_dot(big), InvalidArgument);
  const auto summary = component_summary(big);
  CHECK(summary["n"] == 13);
  CHECK(summary["components"].size() == big.component_count());
}
