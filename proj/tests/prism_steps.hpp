#pragma once

// Partial products from the hand calculation of the prism determinant.
// Shared by the unit tests and the acceptance binary.

#include <string>
#include <vector>

#include "hypersym/determinant.hpp"
#include "hypersym/poly_matrix.hpp"
#include "support.hpp"

namespace hypersym::testing {

struct PrismStep {
  std::string name;
  Polypartial got;
  Polypartial want;
};

// Full 1..k map from a one-line image list.
inline Partial line(std::initializer_list<std::uint32_t> img) {
  std::vector<std::uint32_t> dom;
  for (std::uint32_t i = 1; i <= img.size(); ++i) dom.push_back(i);
  std::vector<std::uint32_t> im(img);
  for (auto& v : dom) --v;
  for (auto& v : im) --v;
  return make_partial(dom, im, Side::Left);
}

inline Polypartial bracket(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return edge_bracket(idx({a, b}), idx({c, d}));
}

inline std::vector<PrismStep> prism_steps() {
  const auto g = prism();
  const auto m = canonical_matrix(g);
  // Rows of the prism in listing order: 12 23 13 14 25 36 45 56 46.
  auto tau = [&](std::uint32_t a, std::uint32_t b) {
    return initiator(m, g.find_edge(idx({a, b})));
  };
  const auto t13 = tau(1, 3), t23 = tau(2, 3), t14 = tau(1, 4);
  const auto t25 = tau(2, 5), t36 = tau(3, 6);
  const auto chain = t36 * t25 * t14 * t13 * t23;
  const auto b1212 = bracket(1, 2, 1, 2);

  std::vector<PrismStep> s;
  s.push_back({"[12//12] t23", b1212 * t23,
               Polypartial{line({1, 2, 3}), line({2, 1, 3}), line({2, 1, 4}), line({1, 2, 5})}});
  s.push_back({"[12//12] t13", b1212 * t13,
               Polypartial{line({1, 2, 3}), line({1, 2, 4}), line({2, 1, 5}), line({2, 1, 3})}});
  s.push_back({"[12//12] t13 t23", b1212 * t13 * t23,
               Polypartial{line({1, 2, 3}), line({2, 1, 3})}});
  s.push_back({"[12//12] t14 t13 t23", b1212 * t14 * t13 * t23,
               Polypartial{line({1, 2, 3, 4}), line({2, 1, 3, 5})}});
  s.push_back({"[12//12] chain", b1212 * chain,
               Polypartial{line({1, 2, 3, 4, 5, 6}), line({2, 1, 3, 5, 4, 6})}});
  s.push_back({"[12//23] chain", bracket(1, 2, 2, 3) * chain,
               Polypartial{line({3, 2, 1, 6, 5, 4}), line({2, 3, 1, 5, 6, 4})}});
  s.push_back({"[12//13] chain", bracket(1, 2, 1, 3) * chain,
               Polypartial{line({1, 3, 2, 4, 6, 5}), line({3, 1, 2, 6, 4, 5})}});
  s.push_back({"[12//45] chain", bracket(1, 2, 4, 5) * chain,
               Polypartial{line({5, 4, 6, 2, 1, 3}), line({4, 5, 6, 1, 2, 3})}});
  s.push_back({"[12//56] chain", bracket(1, 2, 5, 6) * chain,
               Polypartial{line({6, 5, 4, 3, 2, 1}), line({5, 6, 4, 2, 3, 1})}});
  s.push_back({"[12//46] chain", bracket(1, 2, 4, 6) * chain,
               Polypartial{line({6, 4, 5, 3, 1, 2}), line({4, 6, 5, 1, 3, 2})}});
  s.push_back({"[12//14] t13 t23", bracket(1, 2, 1, 4) * t13 * t23, Polypartial()});
  s.push_back({"[12//25] t13 t23", bracket(1, 2, 2, 5) * t13 * t23, Polypartial()});
  s.push_back({"[12//36] t13 t23", bracket(1, 2, 3, 6) * t13 * t23, Polypartial()});
  return s;
}

// The twelve automorphisms of the prism, as one-line images.
inline std::vector<std::vector<std::uint32_t>> prism_automorphisms() {
  return {{1, 2, 3, 4, 5, 6}, {2, 1, 3, 5, 4, 6}, {3, 2, 1, 6, 5, 4}, {2, 3, 1, 5, 6, 4},
          {1, 3, 2, 4, 6, 5}, {4, 5, 6, 1, 2, 3}, {6, 5, 4, 3, 2, 1}, {5, 6, 4, 2, 3, 1},
          {6, 4, 5, 3, 1, 2}, {4, 6, 5, 1, 3, 2}, {5, 4, 6, 2, 1, 3}, {3, 1, 2, 6, 4, 5}};
}

}  // namespace hypersym::testing
