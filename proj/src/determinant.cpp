#include "hypersym/determinant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hypersym/errors.hpp"

namespace hypersym {
namespace {

void leibniz_step(const PolyMatrix& m, std::size_t row, std::vector<bool>& used,
                  const Polypartial& prefix, std::vector<Partial>& acc) {
  if (row == m.dim()) {
    acc.insert(acc.end(), prefix.terms().begin(), prefix.terms().end());
    return;
  }
  for (std::size_t col = 0; col < m.dim(); ++col) {
    if (used[col] || m(row, col).is_zero()) continue;
    Polypartial next = prefix * m(row, col);
    if (next.is_zero()) continue;
    used[col] = true;
    leibniz_step(m, row + 1, used, next, acc);
    used[col] = false;
  }
}

}  // namespace

Polypartial det_leibniz(const PolyMatrix& m, std::size_t max_dim) {
  if (m.dim() > max_dim) {
    throw Error(Errc::DimensionTooLarge,
                "Leibniz expansion of dimension " + std::to_string(m.dim()) +
                    " exceeds cap " + std::to_string(max_dim));
  }
  std::vector<bool> used(m.dim(), false);
  std::vector<Partial> acc;
  leibniz_step(m, 0, used, Polypartial::one(), acc);
  return Polypartial(std::move(acc));
}

Polypartial initiator(const PolyMatrix& m, std::size_t i) {
  std::vector<Partial> terms;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const auto& e = m(i, j).terms();
    terms.insert(terms.end(), e.begin(), e.end());
  }
  return Polypartial(std::move(terms));
}

Polypartial terminator(const PolyMatrix& m, std::size_t j) {
  std::vector<Partial> terms;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto& e = m(i, j).terms();
    terms.insert(terms.end(), e.begin(), e.end());
  }
  return Polypartial(std::move(terms));
}

Polypartial det_initiators(const PolyMatrix& m, const InitiatorOptions& opts) {
  std::vector<std::size_t> order = opts.order;
  if (order.empty()) {
    order.resize(m.dim());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  std::vector<std::size_t> check = order;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i || check.size() != m.dim()) {
      throw Error(Errc::InvalidConfig, "row order is not a permutation of the rows");
    }
  }
  const std::size_t ground = opts.check_evaluation_ground;
  const bool verify = ground > 0 && ground <= 5;
  Polypartial acc = Polypartial::one();
  for (auto i : order) {
    Polypartial row = initiator(m, i);
    Polypartial next = acc * row;
    if (verify &&
        pp_eval(next, ground) != pp_eval(acc, ground).intersect(pp_eval(row, ground))) {
      throw std::logic_error("evaluation is not multiplicative on a determinant step");
    }
    acc = std::move(next);
    if (acc.is_zero()) break;
  }
  return acc;
}

std::vector<std::size_t> greedy_row_order(std::span<const Edge> row_edges) {
  const std::size_t n = row_edges.size();
  std::vector<std::size_t> order;
  if (n == 0) return order;
  std::vector<bool> done(n, false);
  std::vector<bool> covered;
  auto absorb = [&](std::size_t i) {
    done[i] = true;
    order.push_back(i);
    for (auto v : row_edges[i]) {
      if (v >= covered.size()) covered.resize(v + 1, false);
      covered[v] = true;
    }
  };
  absorb(0);
  while (order.size() < n) {
    std::size_t best = n;
    std::size_t best_overlap = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      std::size_t overlap = 0;
      for (auto v : row_edges[i]) {
        if (v < covered.size() && covered[v]) ++overlap;
      }
      if (best == n || overlap > best_overlap) {
        best = i;
        best_overlap = overlap;
      }
    }
    absorb(best);
  }
  return order;
}

}  // namespace hypersym
