#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypersym/hypergraph.hpp"
#include "hypersym/poly_matrix.hpp"

namespace hypersym {

inline constexpr std::size_t kDefaultLeibnizDim = 10;

// Sum over all column permutations of the row products. Partial products
// that vanish are pruned, which does not change the sum.
// Errors: DimensionTooLarge when dim() > max_dim.
Polypartial det_leibniz(const PolyMatrix& m,
                        std::size_t max_dim = kDefaultLeibnizDim);

// Sum of row i / column j.
Polypartial initiator(const PolyMatrix& m, std::size_t i);
Polypartial terminator(const PolyMatrix& m, std::size_t j);

struct InitiatorOptions {
  // Row order for the product; all rows in index order when empty.
  std::vector<std::size_t> order;
  // When in (0, 5], every product step is checked against evaluation:
  // eval(a * b) must equal eval(a) & eval(b) on a ground set of this size.
  std::size_t check_evaluation_ground = 0;
};

// Product of all initiators. Only meaningful for canonical matrices and
// canonical transformations, where it equals the determinant.
Polypartial det_initiators(const PolyMatrix& m, const InitiatorOptions& opts = {});

// Greedy vertex-overlap ordering: start with row 0, then repeatedly take the
// unprocessed edge sharing most vertices with the union of processed edges;
// ties go to the lower index.
std::vector<std::size_t> greedy_row_order(std::span<const Edge> row_edges);

}  // namespace hypersym
