#include "qset/difference_graph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "qset/errors.hpp"

namespace qset {

DifferenceGraph build_difference_graph(const Subset& a, Side side) {
  const Group& g = a.group();
  const auto n = static_cast<std::uint32_t>(a.size());
  std::vector<Element> inverses;
  inverses.reserve(n);
  for (const Element& e : a.elements()) inverses.push_back(g.inverse(e));

  DifferenceGraph d;
  d.n_ = n;
  d.side_ = side;
  d.group_ = g;
  d.labels_.resize(static_cast<std::size_t>(n) * n);
  std::unordered_map<ElementKey, std::uint32_t, ElementKeyHash> ids;
  ids.reserve(d.labels_.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      Element q = side == Side::right ? g.multiply(a[i], inverses[j])
                                      : g.multiply(inverses[i], a[j]);
      const auto next = static_cast<std::uint32_t>(d.members_.size());
      auto [it, fresh] = ids.try_emplace(g.canonical_key(q), next);
      if (fresh) {
        d.members_.emplace_back();
        d.values_.push_back(std::move(q));
      }
      d.labels_[d.index(Vertex{i, j})] = it->second;
      d.members_[it->second].push_back(Vertex{i, j});
    }
  }
  return d;
}

std::uint32_t DifferenceGraph::diagonal_component() const {
  return component_of(Vertex{0, 0});
}

std::uint64_t DifferenceGraph::edge_count() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& comp : members_) sum += static_cast<std::uint64_t>(comp.size()) * comp.size();
  return sum;
}

std::uint64_t DifferenceGraph::undirected_edge_count() const noexcept {
  return (edge_count() + static_cast<std::uint64_t>(n_) * n_) / 2;
}

std::uint32_t transpose_component(const DifferenceGraph& g, std::uint32_t id) {
  if (id >= g.component_count())
    throw InvalidArgument("component id " + std::to_string(id) + " out of range");
  return g.component_of(transpose(g.members(id).front()));
}

Edge phi_edge(const DifferenceGraph& g, Edge e) {
  if (!g.in_range(e.from) || !g.in_range(e.to))
    throw NotAnEdge("edge endpoint outside the vertex grid");
  if (!g.adjacent(e.from, e.to))
    throw NotAnEdge("vertices (" + std::to_string(e.from.row + 1) + "," +
                    std::to_string(e.from.col + 1) + ") and (" +
                    std::to_string(e.to.row + 1) + "," + std::to_string(e.to.col + 1) +
                    ") are not adjacent");
  // [(i,j), (k,l)] -> [(k,i), (l,j)]
  return Edge{Vertex{e.to.row, e.from.row}, Vertex{e.to.col, e.from.col}};
}

const char* to_string(LemmaProperty p) noexcept {
  switch (p) {
  case LemmaProperty::touches_diagonal: return "touches_diagonal";
  case LemmaProperty::shares_axis: return "shares_axis";
  case LemmaProperty::transposed_pair: return "transposed_pair";
  case LemmaProperty::diagonal_split: return "diagonal_split";
  }
  return "unknown";
}

std::vector<LemmaViolation> validate_lemma_properties(const DifferenceGraph& g,
                                                      bool order2free) {
  std::vector<LemmaViolation> out;
  const std::uint32_t n = g.n();
  const Vertex origin{0, 0};
  const auto diag = g.diagonal_component();

  std::vector<bool> holds_diagonal(g.component_count(), false);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Vertex v{i, i};
    holds_diagonal[g.component_of(v)] = true;
    if (g.component_of(v) != diag)
      out.push_back({LemmaProperty::diagonal_split, origin, v});
  }

  for (std::uint32_t id = 0; id < g.component_count(); ++id) {
    const auto& comp = g.members(id);
    if (holds_diagonal[id])
      for (const Vertex& v : comp)
        if (!v.on_diagonal()) out.push_back({LemmaProperty::touches_diagonal, v, origin});

    for (std::size_t x = 0; x < comp.size(); ++x)
      for (std::size_t y = x + 1; y < comp.size(); ++y)
        if (comp[x].row == comp[y].row || comp[x].col == comp[y].col)
          out.push_back({LemmaProperty::shares_axis, comp[x], comp[y]});
  }

  if (order2free) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (g.adjacent(Vertex{i, j}, Vertex{j, i}))
          out.push_back({LemmaProperty::transposed_pair, Vertex{i, j}, Vertex{j, i}});
  }
  return out;
}

std::uint32_t max_offdiagonal_clique(const DifferenceGraph& g) {
  const auto diag = g.diagonal_component();
  std::size_t best = 0;
  for (std::uint32_t id = 0; id < g.component_count(); ++id)
    if (id != diag) best = std::max(best, g.members(id).size());
  return static_cast<std::uint32_t>(best);
}

std::uint32_t ParityCertificate::component_count() const noexcept {
  return diagonal_component_count +
         2 * static_cast<std::uint32_t>(paired_components.size()) +
         static_cast<std::uint32_t>(fixed_nondiagonal.size());
}

ParityCertificate parity_certificate(const DifferenceGraph& g, bool order2free) {
  ParityCertificate cert;
  cert.order2free = order2free;
  std::set<std::uint32_t> diagonal_ids;
  for (std::uint32_t i = 0; i < g.n(); ++i) diagonal_ids.insert(g.component_of(Vertex{i, i}));
  cert.diagonal_component_count = static_cast<std::uint32_t>(diagonal_ids.size());
  for (std::uint32_t id = 0; id < g.component_count(); ++id) {
    if (diagonal_ids.contains(id)) continue;
    const auto t = transpose_component(g, id);
    if (t == id)
      cert.fixed_nondiagonal.push_back(id);
    else if (id < t)
      cert.paired_components.emplace_back(id, t);
  }
  return cert;
}

namespace {

std::string vertex_name(Vertex v) {
  return "v" + std::to_string(v.row + 1) + "_" + std::to_string(v.col + 1);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78", "#98df8a"};

} // namespace

std::string export_dot(const DifferenceGraph& g, const DotOptions& options) {
  if (g.n() > kMaxDotSize)
    throw InvalidArgument("DOT export is limited to n <= " + std::to_string(kMaxDotSize) +
                          " (got " + std::to_string(g.n()) + "); use the component summary");
  const auto diag = g.diagonal_component();
  std::vector<std::string> color(g.component_count(), "white");
  std::size_t next_color = 0;
  for (std::uint32_t id = 0; id < g.component_count(); ++id) {
    if (id == diag) color[id] = "gray70";
    else if (g.members(id).size() > 1) color[id] = kPalette[next_color++ % kPalette.size()];
  }

  std::ostringstream out;
  const std::string name =
      !options.name.empty() ? options.name : (g.side() == Side::right ? "D_A" : "D_Ainv");
  out << "graph \"" << escape(name) << "\" {\n";
  out << "  layout=neato;\n";
  out << "  node [shape=circle, style=filled, fixedsize=true, width=0.25, label=\"\"];\n";
  for (std::uint32_t i = 0; i < g.n(); ++i) {
    for (std::uint32_t j = 0; j < g.n(); ++j) {
      const Vertex v{i, j};
      const auto id = g.component_of(v);
      out << "  " << vertex_name(v) << " [pos=\"" << i << "," << j << "!\", fillcolor=\""
          << color[id] << "\", tooltip=\"(" << i + 1 << "," << j + 1
          << "): " << escape(g.group().format(g.value(id))) << "\"];\n";
    }
  }
  for (std::uint32_t id = 0; id < g.component_count(); ++id) {
    const auto& comp = g.members(id);
    const bool path = id == diag || options.edge_style == DotOptions::EdgeStyle::path;
    for (std::size_t x = 0; x < comp.size(); ++x) {
      if (path) {
        if (x + 1 < comp.size())
          out << "  " << vertex_name(comp[x]) << " -- " << vertex_name(comp[x + 1]) << ";\n";
        continue;
      }
      for (std::size_t y = x + 1; y < comp.size(); ++y)
        out << "  " << vertex_name(comp[x]) << " -- " << vertex_name(comp[y]) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json component_summary(const DifferenceGraph& g) {
  nlohmann::json comps = nlohmann::json::array();
  for (std::uint32_t id = 0; id < g.component_count(); ++id) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const Vertex& v : g.members(id)) vertices.push_back({v.row + 1, v.col + 1});
    comps.push_back({{"value_key", g.group().format(g.value(id))}, {"vertices", vertices}});
  }
  return {{"n", g.n()}, {"side", to_string(g.side())}, {"components", comps}};
}

} // namespace qset
