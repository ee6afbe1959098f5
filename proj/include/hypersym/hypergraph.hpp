#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hypersym/ground_set.hpp"

namespace hypersym {

// Sorted, duplicate-free point indices.
using Edge = std::vector<std::uint32_t>;

// A ground set with a family of distinct non-empty edges. Edge order is the
// order of construction and fixes the row order of canonical matrices.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Edges are sorted on entry. Errors: EmptyEdge, DuplicateEdge (also for a
  // repeated vertex inside one edge), PointOutOfRange.
  Hypergraph(GroundSet ground, std::vector<Edge> edges);

  const GroundSet& ground() const noexcept { return ground_; }
  std::size_t ground_size() const noexcept { return ground_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Index of an edge equal to e (sorted), or npos.
  std::size_t find_edge(std::span<const std::uint32_t> e) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool is_homogeneous() const;
  // Arity of every edge when homogeneous and non-empty, 0 otherwise.
  std::size_t arity() const;
  std::size_t degree(std::uint32_t v) const;

 private:
  GroundSet ground_;
  std::vector<Edge> edges_;
};

// Union of all edges, ascending.
std::vector<std::uint32_t> singular_set(const Hypergraph& g);
// True when every ground point lies in some edge.
bool is_spanning(const Hypergraph& g);

// Edges grouped by arity k, each group in original order, on the same ground.
std::map<std::size_t, Hypergraph> sections(const Hypergraph& g);

// Original edge indices in section order (ascending arity, stable). This is
// the row order of block_matrix.
std::vector<std::size_t> section_order(const Hypergraph& g);

// The hypergraph obtained by renaming every point x to p(x).
Hypergraph relabel(const Hypergraph& g, std::span<const std::uint32_t> p);

}  // namespace hypersym
