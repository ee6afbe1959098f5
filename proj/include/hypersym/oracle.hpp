#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "hypersym/hypergraph.hpp"
#include "hypersym/partial.hpp"
#include "hypersym/permutation.hpp"

// Exhaustive ground truth. Nothing here shares code with the determinant
// path: edge families are compared as bitmask sets over plain one-line
// permutations.
namespace hypersym::oracle {

struct OracleConfig {
  std::size_t max_ground_size = 8;  // at most 10
  std::chrono::milliseconds timeout{0};  // 0 = no limit

  // Errors: InvalidConfig.
  void validate() const;
};

// Every g in S_X with {g(A)} = G. Errors: GroundSetTooLarge, ExpansionTooLarge
// on timeout.
PermSet brute_aut(const Hypergraph& g, const OracleConfig& cfg = {});
// Every bijection X -> Y carrying g1's edge family onto g2's.
PermSet brute_iso(const Hypergraph& g1, const Hypergraph& g2,
                  const OracleConfig& cfg = {});

// The <=-minimum partial on {0..m-1} restricting to both p1 and p2, found by
// enumerating all partials; nullopt if there is no common upper bound.
// Errors: GroundSetTooLarge when m > 6.
std::optional<Partial> brute_join_min(const Partial& p1, const Partial& p2,
                                      std::size_t m);

}  // namespace hypersym::oracle
