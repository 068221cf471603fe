#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qset/quotient.hpp"
#include "qset/subset.hpp"

namespace qset {

/// Vertex (i, j) of the n x n grid, 0-based. Exports print 1-based indices.
struct Vertex {
  std::uint32_t row = 0;
  std::uint32_t col = 0;

  bool on_diagonal() const noexcept { return row == col; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Directed edge (ordered vertex pair); loops allowed. Unordered edges are the
/// orbits of reversal, see `undirected()`.
struct Edge {
  Vertex from;
  Vertex to;

  /// Representative with the lexicographically smaller endpoint first.
  Edge undirected() const noexcept { return to < from ? Edge{to, from} : *this; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Difference graph on [n] x [n]: (i,j) ~ (k,l) iff the quotients agree
/// (a_i a_j^-1 = a_k a_l^-1 on the right side, a_i^-1 a_j = a_k^-1 a_l on the
/// left). Components are cliques, so the graph is stored as a labelling of
/// vertices by component; component ids follow first appearance in row-major
/// order, which puts the diagonal at id 0.
class DifferenceGraph {
public:
  std::uint32_t n() const noexcept { return n_; }
  Side side() const noexcept { return side_; }
  const Group& group() const noexcept { return group_; }

  std::uint32_t component_of(Vertex v) const { return labels_[index(v)]; }
  std::uint32_t component_count() const noexcept {
    return static_cast<std::uint32_t>(members_.size());
  }
  /// Vertices of a component, row-major.
  const std::vector<Vertex>& members(std::uint32_t id) const { return members_[id]; }
  /// The common quotient value of a component.
  const Element& value(std::uint32_t id) const { return values_[id]; }
  std::uint32_t diagonal_component() const;

  bool adjacent(Vertex u, Vertex v) const { return component_of(u) == component_of(v); }
  bool in_range(Vertex v) const noexcept { return v.row < n_ && v.col < n_; }

  /// Directed edges including loops: the sum of squared component sizes.
  /// Equals the additive energy of the corresponding side.
  std::uint64_t edge_count() const noexcept;
  /// Undirected edges including loops: (edge_count() + n^2) / 2.
  std::uint64_t undirected_edge_count() const noexcept;

  /// Calls f(Edge) for every directed edge, component by component.
  template <class F>
  void for_each_edge(F&& f) const {
    for (const auto& comp : members_)
      for (const Vertex& u : comp)
        for (const Vertex& v : comp) f(Edge{u, v});
  }

private:
  friend DifferenceGraph build_difference_graph(const Subset& a, Side side);

  std::size_t index(Vertex v) const noexcept {
    return static_cast<std::size_t>(v.row) * n_ + v.col;
  }

  std::uint32_t n_ = 0;
  Side side_ = Side::right;
  Group group_ = Group::free(1);
  std::vector<std::uint32_t> labels_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<Element> values_;
};

/// D_A for Side::right, D_{A^-1} for Side::left.
DifferenceGraph build_difference_graph(const Subset& a, Side side);

/// T: (i, j) -> (j, i).
constexpr Vertex transpose(Vertex v) noexcept { return Vertex{v.col, v.row}; }
/// Component containing T of the given component's vertices.
std::uint32_t transpose_component(const DifferenceGraph& g, std::uint32_t id);

/// [(i,j), (k,l)] -> [(k,i), (l,j)]. Maps directed edges of D_A bijectively
/// onto directed edges of D_{A^-1} (and, by the same formula, back). Loops go
/// to edges between diagonal vertices. Throws NotAnEdge.
Edge phi_edge(const DifferenceGraph& g, Edge e);

enum class LemmaProperty {
  touches_diagonal, ///< off-diagonal vertex in the diagonal's component
  shares_axis,      ///< two vertices of a component share a row or a column
  transposed_pair,  ///< (i,j) and (j,i), i != j, in one component
  diagonal_split,   ///< two diagonal vertices in different components
};

const char* to_string(LemmaProperty p) noexcept;

struct LemmaViolation {
  LemmaProperty property;
  Vertex first;
  Vertex second;
};

/// Checks the structural properties every difference graph satisfies;
/// transposed_pair is only checked when `order2free` is set. An empty result
/// means no violation.
std::vector<LemmaViolation> validate_lemma_properties(const DifferenceGraph& g,
                                                      bool order2free);

/// Largest component other than the diagonal (0 if there is none).
std::uint32_t max_offdiagonal_clique(const DifferenceGraph& g);

/// Classification of components under T used to certify an odd component count.
struct ParityCertificate {
  std::uint32_t diagonal_component_count = 1;
  /// Unordered pairs {C, T(C)}, C != T(C), smaller id first.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> paired_components;
  /// Non-diagonal components with T(C) = C.
  std::vector<std::uint32_t> fixed_nondiagonal;
  bool order2free = false;

  std::uint32_t component_count() const noexcept;
  /// Count is 1 + 2 * pairs when nothing besides the diagonal is fixed.
  bool certifies_odd() const noexcept { return fixed_nondiagonal.empty(); }
};

ParityCertificate parity_certificate(const DifferenceGraph& g, bool order2free);

struct DotOptions {
  enum class EdgeStyle { clique, path };
  /// Off-diagonal components: all clique edges, or a row-major path.
  EdgeStyle edge_style = EdgeStyle::clique;
  /// Graph name; defaults to D_A / D_Ainv by side.
  std::string name;
};

/// Largest n export_dot accepts.
inline constexpr std::uint32_t kMaxDotSize = 12;

/// Undirected DOT graph: one node per vertex pinned at pos="i,j!", the
/// diagonal drawn as a path (1,1)-(2,2)-..., other components per
/// DotOptions::edge_style, and a fill color per component. Throws
/// InvalidArgument when n > kMaxDotSize.
std::string export_dot(const DifferenceGraph& g, const DotOptions& options = {});

/// { "n", "side", "components": [{ "value_key", "vertices": [[i,j], ...] }] },
/// vertices 1-based, value_key the element text.
nlohmann::json component_summary(const DifferenceGraph& g);

} // namespace qset
