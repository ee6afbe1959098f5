#include "hypersym/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hypersym/errors.hpp"

namespace hypersym::oracle {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> edge_masks(const Hypergraph& g) {
  std::vector<Mask> out;
  for (const auto& e : g.edges()) {
    Mask m = 0;
    for (auto x : e) m |= Mask{1} << x;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mask image_mask(Mask m, const std::vector<std::uint32_t>& p) {
  Mask out = 0;
  for (std::uint32_t x = 0; m; ++x, m >>= 1) {
    if (m & 1) out |= Mask{1} << p[x];
  }
  return out;
}

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds limit)
      : limit_(limit), start_(std::chrono::steady_clock::now()) {}
  void poll() {
    if (limit_.count() == 0 || ++ticks_ % 4096 != 0) return;
    if (std::chrono::steady_clock::now() - start_ > limit_) {
      throw Error(Errc::ExpansionTooLarge, "oracle timed out");
    }
  }

 private:
  std::chrono::milliseconds limit_;
  std::chrono::steady_clock::time_point start_;
  std::size_t ticks_ = 0;
};

PermSet search(const std::vector<Mask>& from, const std::vector<Mask>& to,
               std::size_t m, const OracleConfig& cfg) {
  std::vector<Permutation> out;
  if (from.size() != to.size()) return PermSet();
  Deadline deadline(cfg.timeout);
  std::vector<std::uint32_t> p(m);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Mask> img(from.size());
  do {
    deadline.poll();
    for (std::size_t i = 0; i < from.size(); ++i) img[i] = image_mask(from[i], p);
    std::sort(img.begin(), img.end());
    if (img == to) out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return PermSet(std::move(out));
}

void check_size(std::size_t m, const OracleConfig& cfg) {
  cfg.validate();
  if (m > cfg.max_ground_size) {
    throw Error(Errc::GroundSetTooLarge,
                "oracle limited to " + std::to_string(cfg.max_ground_size) +
                    " points, got " + std::to_string(m));
  }
}

// Does q agree with p on every pair of p?
bool extends(const Partial& q, const Partial& p) {
  auto dom = p.domain();
  auto img = p.image_list();
  for (std::size_t t = 0; t < dom.size(); ++t) {
    auto y = q.image_of(dom[t]);
    if (!y || *y != img[t]) return false;
  }
  return p.empty() || q.image_side() == p.image_side();
}

void all_partials(std::size_t m, Side side, std::uint32_t x,
                  std::vector<std::uint32_t>& dom, std::vector<std::uint32_t>& img,
                  std::vector<bool>& taken, std::vector<Partial>& out) {
  if (x == m) {
    out.push_back(Partial::from_pairs(dom, img, side));
    return;
  }
  all_partials(m, side, x + 1, dom, img, taken, out);  // x undefined
  for (std::uint32_t y = 0; y < m; ++y) {
    if (taken[y]) continue;
    taken[y] = true;
    dom.push_back(x);
    img.push_back(y);
    all_partials(m, side, x + 1, dom, img, taken, out);
    dom.pop_back();
    img.pop_back();
    taken[y] = false;
  }
}

}  // namespace

void OracleConfig::validate() const {
  if (max_ground_size > 10) {
    throw Error(Errc::InvalidConfig, "oracle ground size limit must be at most 10");
  }
}

PermSet brute_aut(const Hypergraph& g, const OracleConfig& cfg) {
  check_size(g.ground_size(), cfg);
  auto masks = edge_masks(g);
  return search(masks, masks, g.ground_size(), cfg);
}

PermSet brute_iso(const Hypergraph& g1, const Hypergraph& g2,
                  const OracleConfig& cfg) {
  check_size(g1.ground_size(), cfg);
  if (g1.ground_size() != g2.ground_size()) return PermSet();
  return search(edge_masks(g1), edge_masks(g2), g1.ground_size(), cfg);
}

std::optional<Partial> brute_join_min(const Partial& p1, const Partial& p2,
                                      std::size_t m) {
  if (m > 6) {
    throw Error(Errc::GroundSetTooLarge, "join oracle limited to 6 points");
  }
  const Side side = p1.empty() ? p2.image_side() : p1.image_side();
  std::vector<Partial> every;
  std::vector<std::uint32_t> dom;
  std::vector<std::uint32_t> img;
  std::vector<bool> taken(m, false);
  all_partials(m, side, 0, dom, img, taken, every);

  std::vector<const Partial*> upper;
  for (const auto& q : every) {
    if (extends(q, p1) && extends(q, p2)) upper.push_back(&q);
  }
  if (upper.empty()) return std::nullopt;
  // A minimum has the fewest pairs; test the smallest bounds against all.
  std::size_t smallest = (*std::min_element(upper.begin(), upper.end(),
                                            [](auto* a, auto* b) {
                                              return a->size() < b->size();
                                            }))->size();
  for (const auto* q : upper) {
    if (q->size() != smallest) continue;
    bool below_all = std::all_of(upper.begin(), upper.end(),
                                 [&](const Partial* r) { return extends(*r, *q); });
    if (below_all) return *q;
  }
  return std::nullopt;
}

}  // namespace hypersym::oracle
