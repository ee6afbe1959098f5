#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypersym/hypergraph.hpp"
#include "hypersym/oracle.hpp"
#include "hypersym/partial.hpp"

namespace hypersym {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  oracle::OracleConfig oracle;
  std::size_t max_arity = 6;
  std::size_t max_expand = kDefaultExpansionCap;
};

// Cross-checks the determinant machinery and the group-theoretic identities
// on one instance against exhaustive enumeration. Errors: GroundSetTooLarge
// when the ground set exceeds the oracle limit.
std::vector<CheckResult> verify_instance(const Hypergraph& g,
                                         const VerifyOptions& opts = {});

}  // namespace hypersym
