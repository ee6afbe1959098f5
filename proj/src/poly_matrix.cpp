#include "hypersym/poly_matrix.hpp"

#include <algorithm>

#include "hypersym/errors.hpp"

namespace hypersym {

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), a_(n * n) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polypartial::one();
  return m;
}

PolyMatrix transpose(const PolyMatrix& m) {
  PolyMatrix t(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::DimensionMismatch, "matrix dimensions differ");
  }
  const std::size_t n = a.dim();
  PolyMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polypartial s;
      for (std::size_t k = 0; k < n; ++k) s = s + a(i, k) * b(k, j);
      c(i, j) = std::move(s);
    }
  }
  return c;
}

PolyMatrix scalar_mul(const Polypartial& k, const PolyMatrix& m) {
  PolyMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = k * m(i, j);
  }
  return out;
}

Polypartial edge_bracket(std::span<const std::uint32_t> a,
                         std::span<const std::uint32_t> b, Side image_side,
                         std::size_t max_arity) {
  if (a.size() != b.size()) {
    throw Error(Errc::ArityMismatch, "bracket between edges of different size");
  }
  if (a.size() > max_arity) {
    throw Error(Errc::ArityTooLarge,
                "edge arity " + std::to_string(a.size()) + " exceeds cap " +
                    std::to_string(max_arity));
  }
  std::vector<std::uint32_t> targets(b.begin(), b.end());
  std::sort(targets.begin(), targets.end());
  std::vector<Partial> terms;
  do {
    terms.push_back(Partial::from_pairs(a, targets, image_side));
  } while (std::next_permutation(targets.begin(), targets.end()));
  return Polypartial(std::move(terms));
}

PolyMatrix canonical_matrix(const Hypergraph& g, std::size_t max_arity) {
  if (!g.is_homogeneous()) {
    throw Error(Errc::NotHomogeneous, "edges of different sizes");
  }
  const std::size_t n = g.edge_count();
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = edge_bracket(g.edge(i), g.edge(j), Side::Left, max_arity);
    }
  }
  return m;
}

namespace {

// Rows and columns follow the given edge orders; entries between edges of
// different arity are zero.
PolyMatrix bracket_matrix(const Hypergraph& rows, std::span<const std::size_t> row_order,
                          const Hypergraph& cols, std::span<const std::size_t> col_order,
                          Side side, std::size_t max_arity) {
  const std::size_t n = row_order.size();
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& a = rows.edge(row_order[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Edge& b = cols.edge(col_order[j]);
      if (a.size() == b.size()) m(i, j) = edge_bracket(a, b, side, max_arity);
    }
  }
  return m;
}

}  // namespace

PolyMatrix block_matrix(const Hypergraph& g, std::size_t max_arity) {
  auto order = section_order(g);
  return bracket_matrix(g, order, g, order, Side::Left, max_arity);
}

std::optional<PolyMatrix> canonical_transformation(const Hypergraph& g1,
                                                   const Hypergraph& g2,
                                                   std::size_t max_arity) {
  if (g1.ground_size() != g2.ground_size() ||
      g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  auto o1 = section_order(g1);
  auto o2 = section_order(g2);
  for (std::size_t i = 0; i < o1.size(); ++i) {
    if (g1.edge(o1[i]).size() != g2.edge(o2[i]).size()) return std::nullopt;
  }
  return bracket_matrix(g1, o1, g2, o2, Side::Right, max_arity);
}

}  // namespace hypersym
