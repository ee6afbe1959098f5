#include "hypersym/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "hypersym/determinant.hpp"
#include "hypersym/errors.hpp"
#include "hypersym/group_analysis.hpp"
#include "hypersym/poly_matrix.hpp"
#include "hypersym/polypartial.hpp"

namespace hypersym {
namespace {

constexpr std::size_t kExhaustiveCosetEdges = 6;
constexpr std::size_t kHomomorphismProbe = 256;

class Report {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    out_.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  }
  // Runs body; a thrown Error counts as a failure of that check.
  void run(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      add(std::move(name), ok, std::move(detail));
    } catch (const std::exception& e) {
      add(std::move(name), false, e.what());
    }
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::vector<CheckResult> out_;
};

std::string sizes(std::size_t got, std::size_t want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace

std::vector<CheckResult> verify_instance(const Hypergraph& g,
                                         const VerifyOptions& opts) {
  opts.oracle.validate();
  const std::size_t m = g.ground_size();
  if (m > opts.oracle.max_ground_size) {
    throw Error(Errc::GroundSetTooLarge,
                "verify is limited to " + std::to_string(opts.oracle.max_ground_size) +
                    " ground points, got " + std::to_string(m));
  }
  const std::size_t n = g.edge_count();
  Report report;

  AutOptions ao;
  ao.max_arity = opts.max_arity;
  ao.max_expand = opts.max_expand;
  ao.expand = true;
  const AutResult result = aut(g, ao);
  const PermSet& elements = *result.elements;
  const PermSet truth = oracle::brute_aut(g, opts.oracle);

  report.add("determinant-equals-oracle", elements == truth,
             sizes(elements.size(), truth.size()));
  report.add("order-readout", result.order == truth.size(),
             result.order.str() + " vs " + std::to_string(truth.size()));
  report.add("group-closure", truth.is_group(), "automorphisms not closed");

  report.run("initiators-equal-leibniz", [&] {
    const PolyMatrix mat = block_matrix(g, opts.max_arity);
    if (mat.dim() > kDefaultLeibnizDim) return std::pair{true, std::string()};
    return std::pair{det_leibniz(mat) == result.determinant,
                     std::string("determinants differ")};
  });

  report.run("row-order-independence", [&] {
    const PolyMatrix mat = block_matrix(g, opts.max_arity);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    InitiatorOptions io;
    io.order = order;
    bool ok = det_initiators(mat, io) == result.determinant;
    std::reverse(io.order.begin(), io.order.end());
    ok = ok && det_initiators(mat, io) == result.determinant;
    return std::pair{ok, std::string("row order changed the determinant")};
  });

  report.run("section-law", [&] {
    PermSet meet = symmetric_group(m);
    for (const auto& [k, section] : sections(g)) {
      meet = meet.intersect(pp_eval(aut(section, ao).determinant, m, opts.max_expand));
    }
    return std::pair{meet == truth, sizes(meet.size(), truth.size())};
  });

  // hits[i][j]: every g in S_X with g(A_i) = A_j.
  std::vector<std::vector<std::vector<Permutation>>> hits(
      n, std::vector<std::vector<Permutation>>(n));
  for (const auto& p : symmetric_group(m)) {
    for (std::size_t i = 0; i < n; ++i) {
      auto j = g.find_edge(p.apply(g.edge(i)));
      if (j != Hypergraph::npos) hits[i][j].push_back(p);
    }
  }
  auto same_arity = [&](std::size_t i, std::size_t j) {
    return g.edge(i).size() == g.edge(j).size();
  };
  std::vector<std::vector<PermSet>> cosets(n, std::vector<PermSet>(n));
  report.run("coset-identities", [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!same_arity(i, j)) continue;
        cosets[i][j] = coset(g, i, j, opts.max_expand);
        const auto sigma = transversal(g.edge(i), g.edge(j), m);
        const PermSet mapped(hits[i][j]);
        if (cosets[i][j] != mapped ||
            cosets[i][j] != right_multiply(stabilizer(g, j, opts.max_expand), sigma)) {
          return std::pair{false, "edges " + std::to_string(i) + " -> " + std::to_string(j)};
        }
      }
    }
    return std::pair{true, std::string()};
  });

  report.run("bracket-class-split", [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!same_arity(i, j)) continue;
        auto br = edge_bracket(g.edge(i), g.edge(j), Side::Left, opts.max_arity);
        if (pp_eval(br, m, opts.max_expand) != cosets[i][j]) {
          return std::pair{false, "edges " + std::to_string(i) + " -> " + std::to_string(j)};
        }
      }
    }
    return std::pair{true, std::string()};
  });

  report.run("union-of-intersections", [&] {
    PermSet meet = symmetric_group(m);
    for (std::size_t i = 0; i < n; ++i) {
      PermSet row;
      for (std::size_t j = 0; j < n; ++j) {
        if (same_arity(i, j)) row = row.unite(cosets[i][j]);
      }
      meet = meet.intersect(row);
    }
    return std::pair{meet == truth, sizes(meet.size(), truth.size())};
  });

  const PermSet kern = kernel(g, opts.max_expand);
  report.run("kernel-classification", [&] {
    const PermSet direct = kernel_by_stabilizers(g, opts.max_expand);
    if (kern != direct) return std::pair{false, sizes(kern.size(), direct.size())};
    if (result.kernel && result.kernel->order != kern.size()) {
      return std::pair{false, "radical count predicts " + result.kernel->order.str() +
                                  ", found " + std::to_string(kern.size())};
    }
    return std::pair{true, std::string()};
  });

  report.run("coset-characterization", [&] {
    auto is_kernel_coset = [&](const PermSet& s) {
      return !s.empty() && left_multiply(*s.begin(), kern) == s;
    };
    if (n <= kExhaustiveCosetEdges) {
      std::vector<std::size_t> j(n);
      std::iota(j.begin(), j.end(), std::size_t{0});
      std::size_t nonempty = 0;
      do {
        bool valid = true;
        for (std::size_t i = 0; i < n && valid; ++i) valid = same_arity(i, j[i]);
        if (!valid) continue;
        PermSet meet = n ? cosets[0][j[0]] : symmetric_group(m);
        for (std::size_t i = 1; i < n && !meet.empty(); ++i) {
          meet = meet.intersect(cosets[i][j[i]]);
        }
        if (meet.empty()) continue;
        ++nonempty;
        if (!is_kernel_coset(meet)) return std::pair{false, std::string("not a kernel coset")};
      } while (std::next_permutation(j.begin(), j.end()));
      return std::pair{nonempty * kern.size() == truth.size(),
                       std::string("cosets do not partition the group")};
    }
    std::map<EdgePermutation, std::vector<Permutation>> fibers;
    for (const auto& p : truth) fibers[edge_action(g, p)].push_back(p);
    for (const auto& [psi, members] : fibers) {
      PermSet meet = cosets[0][psi.mapping[0]];
      for (std::size_t i = 1; i < n; ++i) meet = meet.intersect(cosets[i][psi.mapping[i]]);
      if (meet != PermSet(members) || !is_kernel_coset(meet)) {
        return std::pair{false, std::string("fiber is not a kernel coset")};
      }
    }
    return std::pair{true, std::string()};
  });

  report.run("quotient-embedding", [&] {
    const QuotientImage q = quotient_embedding(g, truth);
    for (auto f : q.fiber_sizes) {
      if (f != kern.size()) return std::pair{false, sizes(f, kern.size())};
    }
    if (q.image.size() * kern.size() != truth.size()) {
      return std::pair{false, std::string("image size is not |Aut|/|K|")};
    }
    const auto& items = truth.items();
    const std::size_t probe = std::min(items.size(), kHomomorphismProbe);
    for (std::size_t a = 0; a < probe; ++a) {
      const auto pa = edge_action(g, items[a]);
      for (std::size_t b = 0; b < probe; ++b) {
        if (edge_action(g, items[a] * items[b]) != pa * edge_action(g, items[b])) {
          return std::pair{false, std::string("edge action is not a homomorphism")};
        }
      }
    }
    return std::pair{true, std::string()};
  });

  return report.take();
}

}  // namespace hypersym
