#include <doctest.h>

#include "hypersym/errors.hpp"
#include "hypersym/group_analysis.hpp"
#include "hypersym/oracle.hpp"
#include "hypersym/verify.hpp"
#include "prism_steps.hpp"
#include "support.hpp"

using namespace hypersym;
using namespace hypersym::testing;

namespace {

Permutation perm(std::initializer_list<std::uint32_t> one_line) {
  return Permutation(idx(one_line));
}

AutOptions expanded(DetMethod method = DetMethod::Initiators) {
  AutOptions o;
  o.method = method;
  o.expand = true;
  return o;
}

}  // namespace

TEST_CASE("automorphisms of the prism") {
  std::vector<Permutation> want;
  for (const auto& img : prism_automorphisms()) {
    std::vector<std::uint32_t> v;
    for (auto x : img) v.push_back(x - 1);
    want.emplace_back(v);
  }
  const PermSet expected(want);
  for (auto method : {DetMethod::Initiators, DetMethod::Leibniz}) {
    for (auto order : {RowOrder::Greedy, RowOrder::Given}) {
      auto o = expanded(method);
      o.row_order = order;
      auto r = aut(prism(), o);
      CHECK(r.order == 12);
      REQUIRE(r.elements);
      CHECK(*r.elements == expected);
      CHECK(r.elements->is_group());
    }
  }
  auto r = aut(prism());
  CHECK(r.order == 12);
  CHECK_FALSE(r.elements);
  REQUIRE(r.kernel);
  CHECK(r.kernel->order == 1);
}

TEST_CASE("small automorphism groups") {
  auto path = aut(graph(3, {{1, 2}, {2, 3}}), expanded());
  CHECK(*path.elements == PermSet({perm({1, 2, 3}), perm({3, 2, 1})}));

  auto edgeless = aut(Hypergraph(GroundSet(4), {}), expanded());
  CHECK(edgeless.order == 24);
  CHECK(*edgeless.elements == symmetric_group(4));
  CHECK(edgeless.determinant.is_one());

  // Free points contribute their full symmetric group.
  auto lone = aut(graph(5, {{1, 2}}));
  CHECK(lone.order == 12);
  CHECK(lone.singular == idx({1, 2}));

  auto k4 = aut(graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK(k4.order == 24);

  auto mixed = aut(graph(4, {{1}, {1, 2}, {3, 4}}), expanded());
  CHECK(*mixed.elements == PermSet({perm({1, 2, 3, 4}), perm({1, 2, 4, 3})}));

  auto triples = aut(graph(4, {{1, 2, 3}, {2, 3, 4}}), expanded());
  CHECK(triples.order == 4);
}

TEST_CASE("orders beyond the expansion cap") {
  // 12 free points and one edge. The order is read off symbolically even
  // though 2 * 12! elements would blow the expansion cap.
  auto g = graph(14, {{1, 2}});
  auto r = aut(g);
  CHECK(r.order == Count(2) * Count(479001600));
  auto o = expanded();
  CHECK_THROWS_AS(aut(g, o), Error);
  try {
    aut(g, o);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ExpansionTooLarge);
    CHECK(is_cap_error(e.code()));
  }
}

TEST_CASE("automorphisms agree with the oracle") {
  Rng rng(71);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 4 + t % 3;
    auto g = random_graph(rng, m, 0.45);
    auto r = aut(g, expanded());
    REQUIRE(*r.elements == oracle::brute_aut(g));
    REQUIRE(r.order == r.elements->size());
  }
  std::vector<Edge> cand;
  for (std::size_t k = 1; k <= 3; ++k) {
    auto e = all_subsets_of_size(5, k);
    cand.insert(cand.end(), e.begin(), e.end());
  }
  for (int t = 0; t < 30; ++t) {
    auto g = random_hypergraph(rng, 5, cand, 0.2);
    REQUIRE(*aut(g, expanded()).elements == oracle::brute_aut(g));
  }
}

TEST_CASE("section law") {
  Rng rng(73);
  std::vector<Edge> cand;
  for (std::size_t k = 1; k <= 3; ++k) {
    auto e = all_subsets_of_size(5, k);
    cand.insert(cand.end(), e.begin(), e.end());
  }
  for (int t = 0; t < 30; ++t) {
    auto g = random_hypergraph(rng, 5, cand, 0.25);
    PermSet meet = symmetric_group(5);
    for (auto& [k, h] : sections(g)) meet = meet.intersect(*aut(h, expanded()).elements);
    REQUIRE(meet == *aut(g, expanded()).elements);
  }
}

TEST_CASE("isomorphisms") {
  auto p = prism();
  auto self = iso(p, p);
  CHECK(self.count == 12);

  // (1 4)(2 5)(3 6) applied to the labels.
  auto moved = relabel(p, idx({4, 5, 6, 1, 2, 3}));
  auto r = iso(p, moved, expanded());
  CHECK(r.count == 12);
  CHECK(*r.bijections == oracle::brute_iso(p, moved));

  auto path = graph(4, {{1, 2}, {2, 3}, {3, 4}});
  auto star = graph(4, {{1, 2}, {1, 3}, {1, 4}});
  auto none = iso(path, star, expanded());
  CHECK(none.count == 0);
  CHECK(none.bijections->empty());
  CHECK(none.determinant.is_zero());

  // Different edge counts never reach the determinant.
  CHECK(iso(path, graph(4, {{1, 2}})).count == 0);
  CHECK(iso(path, graph(5, {{1, 2}, {2, 3}, {3, 4}})).count == 0);

  Rng rng(79);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 4 + t % 3;
    auto g1 = random_graph(rng, m, 0.5);
    auto g2 = t % 2 ? relabel(g1, random_permutation(rng, m)) : random_graph(rng, m, 0.5);
    auto got = iso(g1, g2, expanded());
    REQUIRE(*got.bijections == oracle::brute_iso(g1, g2));
    REQUIRE(got.count == got.bijections->size());
  }
}

TEST_CASE("radicals and the kernel") {
  auto g = graph(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(radicals(g) == std::vector<std::size_t>{0});
  auto k = kernel(g);
  CHECK(k == PermSet({perm({1, 2, 3, 4, 5}), perm({2, 1, 3, 4, 5})}));
  CHECK(k == kernel_by_stabilizers(g));
  CHECK(aut(g).kernel->order == 2);

  auto matching = graph(6, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(radicals(matching).size() == 3);
  CHECK(kernel(matching).size() == 8);
  CHECK(aut(matching).order == 48);

  // Free points sit in the kernel.
  auto free = aut(graph(4, {{1, 2}, {2, 3}}));
  REQUIRE(free.kernel);
  CHECK(free.kernel->free_points == idx({4}));
  CHECK(free.kernel->order == 1);
  CHECK(kernel(graph(4, {{1, 2}})).size() == 4);

  CHECK_THROWS_AS(radicals(graph(3, {{1, 2, 3}})), Error);

  Rng rng(83);
  int spanning = 0;
  while (spanning < 40) {
    const std::size_t m = 3 + spanning % 4;
    auto h = random_graph(rng, m, 0.4);
    if (!is_spanning(h)) continue;
    ++spanning;
    auto kk = kernel(h);
    REQUIRE(kk == kernel_by_stabilizers(h));
    REQUIRE(kk.size() == (std::size_t{1} << radicals(h).size()));
  }
}

TEST_CASE("edge action and quotient") {
  auto g = graph(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto all = *aut(g, expanded()).elements;
  CHECK(all.size() == 12);
  auto q = quotient_embedding(g, all);
  CHECK(q.image.size() == 6);
  for (auto f : q.fiber_sizes) CHECK(f == 2);
  for (const auto& a : all) {
    for (const auto& b : all) {
      REQUIRE(edge_action(g, a * b) == edge_action(g, a) * edge_action(g, b));
    }
  }
  CHECK_THROWS_AS(edge_action(g, perm({1, 3, 2, 4, 5})), Error);
}

TEST_CASE("stabilizers and cosets") {
  auto p = prism();
  const std::size_t n = p.edge_count();
  auto truth = oracle::brute_aut(p);
  PermSet meet = symmetric_group(6);
  for (std::size_t i = 0; i < n; ++i) {
    auto gi = stabilizer(p, i);
    CHECK(gi.size() == 2 * 24);
    CHECK(gi.is_group());
    PermSet row;
    for (std::size_t j = 0; j < n; ++j) {
      auto c = coset(p, i, j);
      // Same coset from either side of the transversal.
      const Permutation s = transversal(p.edge(i), p.edge(j), 6);
      REQUIRE(c == right_multiply(stabilizer(p, j), s));
      REQUIRE(c == left_multiply(s, gi));
      for (const auto& x : c) REQUIRE(x.apply(p.edge(i)) == p.edge(j));
      // The bracket evaluates to this coset.
      REQUIRE(pp_eval(edge_bracket(p.edge(i), p.edge(j)), 6) == c);
      row = row.unite(c);
    }
    meet = meet.intersect(row);
  }
  CHECK(meet == truth);
}

TEST_CASE("verify passes on random instances") {
  Rng rng(89);
  for (int t = 0; t < 12; ++t) {
    auto g = random_graph(rng, 4 + t % 3, 0.5);
    for (const auto& c : verify_instance(g)) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.passed);
    }
  }
  CHECK_THROWS_AS(verify_instance(graph(9, {{1, 2}})), Error);
}
