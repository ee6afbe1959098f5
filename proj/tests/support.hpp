#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hypersym/hypergraph.hpp"
#include "hypersym/partial.hpp"
#include "hypersym/polypartial.hpp"

namespace hypersym::testing {

using Rng = std::mt19937_64;

// Labels "1".."m" are indices 0..m-1; these helpers take 1-based labels.
inline std::vector<std::uint32_t> idx(std::initializer_list<std::uint32_t> labels) {
  std::vector<std::uint32_t> out;
  for (auto l : labels) out.push_back(l - 1);
  return out;
}

inline Partial pl(std::initializer_list<std::uint32_t> dom,
                  std::initializer_list<std::uint32_t> img, Side side = Side::Left) {
  return make_partial(idx(dom), idx(img), side);
}

inline Hypergraph graph(std::size_t m,
                        std::initializer_list<std::initializer_list<std::uint32_t>> edges) {
  std::vector<Edge> es;
  for (auto e : edges) es.push_back(idx(e));
  return Hypergraph(GroundSet(m), std::move(es));
}

inline Hypergraph prism() {
  return graph(6, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {5, 6}, {4, 6}});
}

// Uniformly random partial on {0..m-1}: each point enters the domain with
// probability p_in, images drawn without replacement.
inline Partial random_partial(Rng& rng, std::size_t m, double p_in = 0.5,
                              Side side = Side::Left) {
  std::bernoulli_distribution in(p_in);
  std::vector<std::uint32_t> pool(m);
  std::iota(pool.begin(), pool.end(), 0u);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::uint32_t> dom;
  std::vector<std::uint32_t> img;
  for (std::uint32_t x = 0; x < m; ++x) {
    if (in(rng)) {
      dom.push_back(x);
      img.push_back(pool[dom.size() - 1]);
    }
  }
  return make_partial(dom, img, side);
}

inline Polypartial random_polypartial(Rng& rng, std::size_t m, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  std::vector<Partial> terms;
  const std::size_t n = count(rng);
  for (std::size_t t = 0; t < n; ++t) terms.push_back(random_partial(rng, m, density(rng)));
  return Polypartial(std::move(terms));
}

// All 2-subsets of {0..m-1} in lexicographic order.
inline std::vector<Edge> all_pairs(std::size_t m) {
  std::vector<Edge> out;
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) out.push_back({a, b});
  }
  return out;
}

inline std::vector<Edge> all_subsets_of_size(std::size_t m, std::size_t k) {
  std::vector<Edge> out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Edge e;
    for (std::uint32_t x = 0; x < m; ++x) {
      if (pick[x]) e.push_back(x);
    }
    out.push_back(e);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Each candidate edge kept with probability p.
inline Hypergraph random_hypergraph(Rng& rng, std::size_t m,
                                    const std::vector<Edge>& candidates, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (const auto& e : candidates) {
    if (keep(rng)) edges.push_back(e);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Hypergraph(GroundSet(m), std::move(edges));
}

inline Hypergraph random_graph(Rng& rng, std::size_t m, double p = 0.5) {
  return random_hypergraph(rng, m, all_pairs(m), p);
}

inline std::vector<std::uint32_t> random_permutation(Rng& rng, std::size_t m) {
  std::vector<std::uint32_t> p(m);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace hypersym::testing
