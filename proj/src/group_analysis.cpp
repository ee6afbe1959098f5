#include "hypersym/group_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hypersym/errors.hpp"

namespace hypersym {
namespace {

constexpr std::size_t kKernelCrossCheckGround = 7;
constexpr std::size_t kFullGroupCheck = 2048;

// Identity and inverses always; full closure up to kFullGroupCheck elements,
// closure against the first 64 elements beyond that.
bool looks_like_group(const PermSet& s) {
  if (s.size() <= kFullGroupCheck) return s.is_group();
  const auto& items = s.items();
  if (!s.contains(Permutation::identity(items.front().size()))) return false;
  for (const auto& a : items) {
    if (!s.contains(a.inverse())) return false;
  }
  const std::size_t probe = std::min<std::size_t>(64, items.size());
  for (std::size_t t = 0; t < probe; ++t) {
    for (const auto& b : items) {
      if (!s.contains(items[t] * b)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> row_order_for(const Hypergraph& g, const AutOptions& opts) {
  auto rows = section_order(g);
  std::vector<Edge> row_edges;
  row_edges.reserve(rows.size());
  for (auto r : rows) row_edges.push_back(g.edge(r));
  if (opts.row_order == RowOrder::Greedy) return greedy_row_order(row_edges);
  std::vector<std::size_t> given(rows.size());
  std::iota(given.begin(), given.end(), std::size_t{0});
  return given;
}

Polypartial determinant_of(const PolyMatrix& m, const Hypergraph& rows,
                           const AutOptions& opts) {
  if (opts.method == DetMethod::Leibniz) {
    return det_leibniz(m, opts.max_leibniz_dim);
  }
  InitiatorOptions io;
  io.order = row_order_for(rows, opts);
  return det_initiators(m, io);
}

void require_domains(const Polypartial& det, const std::vector<std::uint32_t>& dom,
                     const std::vector<std::uint32_t>& img) {
  for (const auto& t : det.terms()) {
    if (t.domain() != dom || t.image_set() != img) {
      throw std::logic_error("determinant term does not cover the singular set");
    }
  }
}

Count factorial(std::size_t n) {
  Count f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<std::uint32_t> free_points(const Hypergraph& g) {
  auto sing = singular_set(g);
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.ground_size(); ++x) {
    if (!std::binary_search(sing.begin(), sing.end(), x)) out.push_back(x);
  }
  return out;
}

bool is_graph(const Hypergraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.size() == 2; });
}

bool fixes_every_edge(const Hypergraph& g, const Permutation& p) {
  for (const auto& e : g.edges()) {
    if (p.apply(e) != e) return false;
  }
  return true;
}

void require_expansion(const Count& count, std::size_t cap, const char* what) {
  if (count > cap) {
    throw Error(Errc::ExpansionTooLarge,
                std::string(what) + " of " + count.str() +
                    " permutations exceeds cap " + std::to_string(cap));
  }
}

// Each base image vector from `local` (which fixes the free points) combined
// with every permutation of the free points.
PermSet combine(std::size_t m, const std::vector<std::vector<std::uint32_t>>& local,
                const std::vector<std::uint32_t>& free) {
  std::vector<Permutation> out;
  std::vector<std::uint32_t> targets = free;
  for (const auto& base : local) {
    std::sort(targets.begin(), targets.end());
    do {
      std::vector<std::uint32_t> images = base;
      images.resize(m);
      for (std::size_t t = 0; t < free.size(); ++t) images[free[t]] = targets[t];
      out.emplace_back(std::move(images));
    } while (std::next_permutation(targets.begin(), targets.end()));
  }
  return PermSet(std::move(out));
}

}  // namespace

AutResult aut(const Hypergraph& g, const AutOptions& opts) {
  AutResult r;
  const std::size_t m = g.ground_size();
  r.singular = singular_set(g);
  const PolyMatrix mat = block_matrix(g, opts.max_arity);
  r.determinant = determinant_of(mat, g, opts);
  require_domains(r.determinant, r.singular, r.singular);
  r.order = pp_order(r.determinant, r.singular.size(), m);
  if (is_graph(g)) {
    KernelInfo k;
    k.radicals = radicals(g);
    k.free_points = free_points(g);
    k.order = factorial(k.free_points.size()) << k.radicals.size();
    r.kernel = std::move(k);
  }
  if (opts.expand) {
    r.elements = pp_eval(r.determinant, m, opts.max_expand);
    if (Count(r.elements->size()) != r.order || !looks_like_group(*r.elements)) {
      throw std::logic_error("expanded automorphisms do not form the expected group");
    }
  }
  return r;
}

IsoResult iso(const Hypergraph& g1, const Hypergraph& g2, const AutOptions& opts) {
  IsoResult r;
  r.count = 0;
  auto mat = canonical_transformation(g1, g2, opts.max_arity);
  if (mat) {
    r.determinant = determinant_of(*mat, g1, opts);
    auto s1 = singular_set(g1);
    require_domains(r.determinant, s1, singular_set(g2));
    r.count = pp_order(r.determinant, s1.size(), g1.ground_size());
  }
  if (opts.expand) {
    r.bijections = pp_eval(r.determinant, g1.ground_size(), opts.max_expand);
    if (Count(r.bijections->size()) != r.count) {
      throw std::logic_error("expanded isomorphisms disagree with the count");
    }
  }
  return r;
}

std::vector<std::size_t> radicals(const Hypergraph& g) {
  if (!is_graph(g)) {
    throw Error(Errc::NotAGraph, "radicals are defined for 2-uniform graphs only");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (g.degree(e[0]) == 1 && g.degree(e[1]) == 1) out.push_back(i);
  }
  return out;
}

PermSet kernel_by_stabilizers(const Hypergraph& g, std::size_t cap) {
  const std::size_t m = g.ground_size();
  require_expansion(factorial(m), cap, "stabilizer intersection");
  std::vector<Permutation> out;
  std::vector<std::uint32_t> v(m);
  std::iota(v.begin(), v.end(), 0u);
  do {
    Permutation p(v);
    if (fixes_every_edge(g, p)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return PermSet(std::move(out));
}

PermSet kernel(const Hypergraph& g, std::size_t cap) {
  const std::size_t m = g.ground_size();
  const auto free = free_points(g);
  std::vector<std::vector<std::uint32_t>> local;
  if (is_graph(g)) {
    const auto rad = radicals(g);
    require_expansion(factorial(free.size()) << rad.size(), cap, "kernel");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rad.size()); ++mask) {
      auto id = Permutation::identity(m);
      std::vector<std::uint32_t> images(id.images().begin(), id.images().end());
      for (std::size_t r = 0; r < rad.size(); ++r) {
        if (mask >> r & 1) {
          const auto& e = g.edge(rad[r]);
          std::swap(images[e[0]], images[e[1]]);
        }
      }
      local.push_back(std::move(images));
    }
    PermSet k = combine(m, local, free);
    if (m <= kKernelCrossCheckGround && k != kernel_by_stabilizers(g, cap)) {
      throw std::logic_error("radical kernel disagrees with the stabilizer kernel");
    }
    return k;
  }
  const auto sing = singular_set(g);
  require_expansion(factorial(sing.size()) * factorial(free.size()), cap, "kernel");
  std::vector<std::uint32_t> targets = sing;
  do {
    auto id = Permutation::identity(m);
    std::vector<std::uint32_t> images(id.images().begin(), id.images().end());
    for (std::size_t t = 0; t < sing.size(); ++t) images[sing[t]] = targets[t];
    if (fixes_every_edge(g, Permutation(images))) local.push_back(std::move(images));
  } while (std::next_permutation(targets.begin(), targets.end()));
  return combine(m, local, free);
}

EdgePermutation operator*(const EdgePermutation& a, const EdgePermutation& b) {
  EdgePermutation c;
  c.mapping.resize(b.mapping.size());
  for (std::size_t i = 0; i < b.mapping.size(); ++i) {
    c.mapping[i] = a.mapping[b.mapping[i]];
  }
  return c;
}

EdgePermutation edge_action(const Hypergraph& g, const Permutation& p) {
  EdgePermutation out;
  out.mapping.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    auto j = g.find_edge(p.apply(e));
    if (j == Hypergraph::npos) {
      throw Error(Errc::NotAnAutomorphism, "permutation moves an edge outside the family");
    }
    out.mapping.push_back(j);
  }
  return out;
}

QuotientImage quotient_embedding(const Hypergraph& g, const PermSet& elements) {
  std::map<EdgePermutation, std::size_t> fibers;
  for (const auto& p : elements) ++fibers[edge_action(g, p)];
  QuotientImage q;
  for (auto& [e, n] : fibers) {
    q.image.push_back(e);
    q.fiber_sizes.push_back(n);
  }
  return q;
}

PermSet stabilizer(const Hypergraph& g, std::size_t i, std::size_t cap) {
  const std::size_t m = g.ground_size();
  const Edge& a = g.edge(i);
  std::vector<std::uint32_t> rest;
  for (std::uint32_t x = 0; x < m; ++x) {
    if (!std::binary_search(a.begin(), a.end(), x)) rest.push_back(x);
  }
  require_expansion(factorial(a.size()) * factorial(rest.size()), cap, "stabilizer");
  std::vector<std::vector<std::uint32_t>> local;
  std::vector<std::uint32_t> targets = a;
  do {
    auto id = Permutation::identity(m);
    std::vector<std::uint32_t> images(id.images().begin(), id.images().end());
    for (std::size_t t = 0; t < a.size(); ++t) images[a[t]] = targets[t];
    local.push_back(std::move(images));
  } while (std::next_permutation(targets.begin(), targets.end()));
  return combine(m, local, rest);
}

PermSet coset(const Hypergraph& g, std::size_t i, std::size_t j, std::size_t cap) {
  if (g.edge(i).size() != g.edge(j).size()) {
    throw Error(Errc::ArityMismatch, "coset between edges of different size");
  }
  return left_multiply(transversal(g.edge(i), g.edge(j), g.ground_size()),
                       stabilizer(g, i, cap));
}

}  // namespace hypersym
