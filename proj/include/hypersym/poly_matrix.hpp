#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypersym/hypergraph.hpp"
#include "hypersym/polypartial.hpp"

namespace hypersym {

// Square matrix over the Ring of Partials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n);

  static PolyMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  Polypartial& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Polypartial& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Polypartial> a_;
};

PolyMatrix transpose(const PolyMatrix& m);
// Errors: DimensionMismatch.
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix scalar_mul(const Polypartial& k, const PolyMatrix& m);

inline constexpr std::size_t kDefaultMaxArity = 6;

// Sum of the k! partials mapping a onto b in every bijective way; a is
// read as left points, b as points of image_side.
// Errors: ArityMismatch, ArityTooLarge.
Polypartial edge_bracket(std::span<const std::uint32_t> a,
                         std::span<const std::uint32_t> b,
                         Side image_side = Side::Left,
                         std::size_t max_arity = kDefaultMaxArity);

// (i, j) entry = edge_bracket(A_i, A_j). Errors: NotHomogeneous.
PolyMatrix canonical_matrix(const Hypergraph& g,
                            std::size_t max_arity = kDefaultMaxArity);

// Block-diagonal assembly of the per-section canonical matrices, rows in
// section_order(g).
PolyMatrix block_matrix(const Hypergraph& g,
                        std::size_t max_arity = kDefaultMaxArity);

// Cross brackets (A_i // B_j) with B_j right-side, block-diagonal across
// sections, rows and columns in section order. nullopt when the ground sizes
// or per-section edge counts differ.
std::optional<PolyMatrix> canonical_transformation(
    const Hypergraph& g1, const Hypergraph& g2,
    std::size_t max_arity = kDefaultMaxArity);

}  // namespace hypersym
