#include "hypersym/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hypersym/errors.hpp"

namespace hypersym {

Hypergraph::Hypergraph(GroundSet ground, std::vector<Edge> edges)
    : ground_(std::move(ground)), edges_(std::move(edges)) {
  std::set<Edge> seen;
  for (auto& e : edges_) {
    if (e.empty()) throw Error(Errc::EmptyEdge, "edges must be non-empty");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(Errc::DuplicateEdge, "repeated vertex inside an edge");
    }
    if (e.back() >= ground_.size()) {
      throw Error(Errc::PointOutOfRange, "edge vertex outside the ground set");
    }
    if (!seen.insert(e).second) {
      throw Error(Errc::DuplicateEdge, "duplicate edge");
    }
  }
}

std::size_t Hypergraph::find_edge(std::span<const std::uint32_t> e) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (std::equal(edges_[i].begin(), edges_[i].end(), e.begin(), e.end())) {
      return i;
    }
  }
  return npos;
}

bool Hypergraph::is_homogeneous() const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.size() == edges_.front().size();
  });
}

std::size_t Hypergraph::arity() const {
  if (edges_.empty() || !is_homogeneous()) return 0;
  return edges_.front().size();
}

std::size_t Hypergraph::degree(std::uint32_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  }
  return d;
}

std::vector<std::uint32_t> singular_set(const Hypergraph& g) {
  std::set<std::uint32_t> pts;
  for (const auto& e : g.edges()) pts.insert(e.begin(), e.end());
  return {pts.begin(), pts.end()};
}

bool is_spanning(const Hypergraph& g) {
  return singular_set(g).size() == g.ground_size();
}

std::map<std::size_t, Hypergraph> sections(const Hypergraph& g) {
  std::map<std::size_t, std::vector<Edge>> by_arity;
  for (const auto& e : g.edges()) by_arity[e.size()].push_back(e);
  std::map<std::size_t, Hypergraph> out;
  for (auto& [k, edges] : by_arity) {
    out.emplace(k, Hypergraph(g.ground(), std::move(edges)));
  }
  return out;
}

std::vector<std::size_t> section_order(const Hypergraph& g) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.edge(a).size() < g.edge(b).size();
  });
  return order;
}

Hypergraph relabel(const Hypergraph& g, std::span<const std::uint32_t> p) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    Edge out;
    for (auto x : e) out.push_back(p[x]);
    edges.push_back(std::move(out));
  }
  return Hypergraph(g.ground(), std::move(edges));
}

}  // namespace hypersym
