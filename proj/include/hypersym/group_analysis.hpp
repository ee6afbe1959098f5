#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypersym/determinant.hpp"
#include "hypersym/hypergraph.hpp"
#include "hypersym/permutation.hpp"
#include "hypersym/polypartial.hpp"

namespace hypersym {

enum class DetMethod { Initiators, Leibniz };
enum class RowOrder { Greedy, Given };

struct AutOptions {
  DetMethod method = DetMethod::Initiators;
  RowOrder row_order = RowOrder::Greedy;
  std::size_t max_arity = kDefaultMaxArity;
  std::size_t max_leibniz_dim = kDefaultLeibnizDim;
  std::size_t max_expand = kDefaultExpansionCap;
  // Expand the determinant into explicit permutations.
  bool expand = false;
};

// K_G for a graph: radical swaps times the full symmetry of free points.
struct KernelInfo {
  std::vector<std::size_t> radicals;  // edge indices
  std::vector<std::uint32_t> free_points;
  Count order;
};

struct AutResult {
  Polypartial determinant;
  std::vector<std::uint32_t> singular;
  Count order;
  std::optional<PermSet> elements;
  // Present for 2-homogeneous (and edgeless) hypergraphs.
  std::optional<KernelInfo> kernel;
};

// Aut(G) as the determinant of block_matrix(G). The order is read off the
// determinant symbolically; elements are expanded only when requested, and
// then checked to form a group.
AutResult aut(const Hypergraph& g, const AutOptions& opts = {});

struct IsoResult {
  Polypartial determinant;  // zero when no canonical transformation exists
  Count count;
  std::optional<PermSet> bijections;
};

// Iso(G1, G2) as the determinant of the canonical transformation. Partials
// in the determinant map left points of g1 to right points of g2.
IsoResult iso(const Hypergraph& g1, const Hypergraph& g2,
              const AutOptions& opts = {});

// Edges of a graph whose two endpoints both have degree 1.
// Errors: NotAGraph unless every edge has two vertices.
std::vector<std::size_t> radicals(const Hypergraph& g);

// Permutations fixing every edge setwise. Graphs (and edgeless hypergraphs)
// are built from radical swaps and cross-checked against kernel_by_stabilizers
// when the ground set has at most 7 points; other hypergraphs are enumerated
// over the singular set. Errors: ExpansionTooLarge.
PermSet kernel(const Hypergraph& g, std::size_t cap = kDefaultExpansionCap);
// The intersection of all edge stabilizers by enumeration of S_X.
PermSet kernel_by_stabilizers(const Hypergraph& g,
                              std::size_t cap = kDefaultExpansionCap);

// Permutation of edge indices: mapping[i] = j when g maps A_i onto A_j.
struct EdgePermutation {
  std::vector<std::size_t> mapping;

  friend EdgePermutation operator*(const EdgePermutation& a,
                                   const EdgePermutation& b);
  auto operator<=>(const EdgePermutation&) const = default;
};

// Errors: NotAnAutomorphism.
EdgePermutation edge_action(const Hypergraph& g, const Permutation& p);

struct QuotientImage {
  // Sorted, distinct.
  std::vector<EdgePermutation> image;
  // fiber_sizes[t] = number of elements mapped to image[t].
  std::vector<std::size_t> fiber_sizes;
};

QuotientImage quotient_embedding(const Hypergraph& g, const PermSet& elements);

// Permutations mapping A_i onto itself. Errors: ExpansionTooLarge.
PermSet stabilizer(const Hypergraph& g, std::size_t i,
                   std::size_t cap = kDefaultExpansionCap);

// transversal(A_i, A_j) * stabilizer(i): every permutation taking A_i onto
// A_j. Errors: ArityMismatch, ExpansionTooLarge.
PermSet coset(const Hypergraph& g, std::size_t i, std::size_t j,
              std::size_t cap = kDefaultExpansionCap);

}  // namespace hypersym
