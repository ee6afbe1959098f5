#include "hypersym/partial.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

#include "hypersym/errors.hpp"

namespace hypersym {

using kernels::kLaneWidth;
using kernels::kUnset;

Partial::Partial() {
  forward_.fill(kUnset);
  backward_.fill(kUnset);
}

Partial Partial::from_pairs(std::span<const std::uint32_t> domain,
                            std::span<const std::uint32_t> image,
                            Side image_side) {
  Partial p;
  for (std::size_t t = 0; t < domain.size(); ++t) {
    if (domain[t] >= kLaneWidth || image[t] >= kLaneWidth) {
      throw Error(Errc::PointOutOfRange, "point index beyond ground capacity");
    }
    p.forward_[domain[t]] = static_cast<std::uint8_t>(image[t]);
    p.backward_[image[t]] = static_cast<std::uint8_t>(domain[t]);
  }
  p.size_ = static_cast<std::uint8_t>(domain.size());
  p.side_ = domain.empty() ? Side::Left : image_side;
  return p;
}

std::optional<std::uint32_t> Partial::image_of(std::uint32_t x) const {
  if (x >= kLaneWidth || forward_[x] == kUnset) return std::nullopt;
  return forward_[x];
}

std::optional<std::uint32_t> Partial::preimage_of(std::uint32_t y) const {
  if (y >= kLaneWidth || backward_[y] == kUnset) return std::nullopt;
  return backward_[y];
}

std::vector<std::uint32_t> Partial::domain() const {
  std::vector<std::uint32_t> out;
  out.reserve(size_);
  for (std::uint32_t x = 0; x < kLaneWidth; ++x) {
    if (forward_[x] != kUnset) out.push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> Partial::image_list() const {
  std::vector<std::uint32_t> out;
  out.reserve(size_);
  for (std::uint32_t x = 0; x < kLaneWidth; ++x) {
    if (forward_[x] != kUnset) out.push_back(forward_[x]);
  }
  return out;
}

std::vector<std::uint32_t> Partial::image_set() const {
  std::vector<std::uint32_t> out;
  out.reserve(size_);
  for (std::uint32_t y = 0; y < kLaneWidth; ++y) {
    if (backward_[y] != kUnset) out.push_back(y);
  }
  return out;
}

bool operator==(const Partial& a, const Partial& b) {
  return a.size_ == b.size_ && a.side_ == b.side_ &&
         std::memcmp(a.forward_.data(), b.forward_.data(), kLaneWidth) == 0;
}

bool operator<(const Partial& a, const Partial& b) {
  int c = std::memcmp(a.forward_.data(), b.forward_.data(), kLaneWidth);
  if (c != 0) return c < 0;
  return a.side_ < b.side_;
}

Partial make_partial(std::span<const Point> domain,
                     std::span<const Point> image) {
  if (domain.size() != image.size()) {
    throw Error(Errc::LengthMismatch, "domain and image lists differ in length");
  }
  std::vector<std::uint32_t> dom;
  std::vector<std::uint32_t> img;
  Side side = image.empty() ? Side::Left : image.front().side;
  for (std::size_t t = 0; t < domain.size(); ++t) {
    if (domain[t].side != Side::Left) {
      throw Error(Errc::MixedSides, "domain points must be left-side");
    }
    if (image[t].side != side) {
      throw Error(Errc::MixedSides, "image points must share one side");
    }
    dom.push_back(domain[t].index);
    img.push_back(image[t].index);
  }
  return make_partial(dom, img, side);
}

Partial make_partial(std::span<const std::uint32_t> domain,
                     std::span<const std::uint32_t> image, Side image_side) {
  if (domain.size() != image.size()) {
    throw Error(Errc::LengthMismatch, "domain and image lists differ in length");
  }
  auto check_distinct = [](std::span<const std::uint32_t> pts, Errc code,
                           const char* what) {
    std::vector<std::uint32_t> sorted(pts.begin(), pts.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(code, what);
    }
    if (!sorted.empty() && sorted.back() >= kLaneWidth) {
      throw Error(Errc::PointOutOfRange, "point index beyond ground capacity");
    }
  };
  check_distinct(domain, Errc::DuplicateDomain, "repeated domain point");
  check_distinct(image, Errc::DuplicateImage, "repeated image point");
  return Partial::from_pairs(domain, image, image_side);
}

namespace {

void require_same_side(const Partial& a, const Partial& b) {
  if (!a.empty() && !b.empty() && a.image_side() != b.image_side()) {
    throw Error(Errc::MixedSides,
                "cannot combine automorphism and isomorphism partials");
  }
}

}  // namespace

bool is_uniform(const Partial& a, const Partial& b) {
  require_same_side(a, b);
  return kernels::active().uniform(a.lanes(), b.lanes());
}

std::optional<Partial> join(const Partial& a, const Partial& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  require_same_side(a, b);
  Partial out;
  int n = kernels::active().join(a.lanes(), b.lanes(),
                                 {out.forward_.data(), out.backward_.data()});
  if (n < 0) return std::nullopt;
  out.size_ = static_cast<std::uint8_t>(n);
  out.side_ = a.side_;
  return out;
}

bool leq(const Partial& a, const Partial& b) {
  if (a.empty()) return true;
  if (a.image_side() != b.image_side() || a.size() > b.size()) return false;
  return kernels::active().restricts_to(a.lanes().forward, b.lanes().forward);
}

Permutation extend_to_permutation(const Partial& p, std::size_t m) {
  if (!p.empty() && p.image_side() != Side::Left) {
    throw Error(Errc::MixedSides, "cannot extend an isomorphism partial");
  }
  std::vector<std::uint32_t> images(m);
  std::vector<std::uint32_t> img_only;  // img \ dom, ascending
  std::vector<std::uint32_t> dom_only;  // dom \ img, ascending
  for (std::uint32_t x = 0; x < m; ++x) {
    auto fx = p.image_of(x);
    auto gx = p.preimage_of(x);
    if (fx && !gx) dom_only.push_back(x);
    if (!fx && gx) img_only.push_back(x);
  }
  if (p.size() > 0 && p.domain().back() >= m) {
    throw Error(Errc::PointOutOfRange, "partial reaches beyond the ground set");
  }
  std::size_t next = 0;
  for (std::uint32_t x = 0; x < m; ++x) {
    if (auto fx = p.image_of(x)) {
      if (*fx >= m) {
        throw Error(Errc::PointOutOfRange, "partial reaches beyond the ground set");
      }
      images[x] = *fx;
    } else if (p.preimage_of(x)) {
      images[x] = dom_only[next++];
    } else {
      images[x] = x;
    }
  }
  return Permutation(std::move(images));
}

Permutation transversal(std::span<const std::uint32_t> a,
                        std::span<const std::uint32_t> b, std::size_t m) {
  if (a.size() != b.size()) {
    throw Error(Errc::SizeMismatch, "transversal between sets of different size");
  }
  std::vector<std::uint32_t> sa(a.begin(), a.end());
  std::vector<std::uint32_t> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<std::uint32_t> a_only;
  std::vector<std::uint32_t> b_only;
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                      std::back_inserter(a_only));
  std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                      std::back_inserter(b_only));
  auto images = Permutation::identity(m);
  std::vector<std::uint32_t> v(images.images().begin(), images.images().end());
  for (std::size_t t = 0; t < a_only.size(); ++t) {
    if (a_only[t] >= m || b_only[t] >= m) {
      throw Error(Errc::PointOutOfRange, "point outside the ground set");
    }
    v[a_only[t]] = b_only[t];
    v[b_only[t]] = a_only[t];
  }
  return Permutation(std::move(v));
}

std::size_t factorial_capped(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::size_t>::max() / i) {
      return std::numeric_limits<std::size_t>::max();
    }
    f *= i;
  }
  return f;
}

PermSet enumerate_class(const Partial& p, std::size_t m, std::size_t cap) {
  if (p.size() > m) {
    throw Error(Errc::PointOutOfRange, "partial larger than the ground set");
  }
  const std::size_t count = factorial_capped(m - p.size());
  if (count > cap) {
    throw Error(Errc::ExpansionTooLarge,
                "class expansion of " + std::to_string(m - p.size()) +
                    "! permutations exceeds cap " + std::to_string(cap));
  }
  std::vector<std::uint32_t> images(m);
  std::vector<std::uint32_t> free_dom;
  std::vector<std::uint32_t> free_img;
  for (std::uint32_t x = 0; x < m; ++x) {
    if (auto fx = p.image_of(x)) {
      if (*fx >= m) {
        throw Error(Errc::PointOutOfRange, "partial reaches beyond the ground set");
      }
      images[x] = *fx;
    } else {
      free_dom.push_back(x);
    }
    if (!p.preimage_of(x)) free_img.push_back(x);
  }
  std::vector<Permutation> out;
  out.reserve(count);
  do {
    for (std::size_t t = 0; t < free_dom.size(); ++t) {
      images[free_dom[t]] = free_img[t];
    }
    out.emplace_back(images);
  } while (std::next_permutation(free_img.begin(), free_img.end()));
  return PermSet(std::move(out));
}

std::string format_partial(const Partial& p, const GroundSet& domain,
                           const GroundSet& codomain) {
  if (p.empty()) return "()";
  std::string top;
  std::string bottom;
  bool first = true;
  for (auto x : p.domain()) {
    if (!first) {
      top += ' ';
      bottom += ' ';
    }
    first = false;
    top += domain.label(x);
    bottom += codomain.label(*p.image_of(x));
  }
  return "(" + top + " // " + bottom + ")";
}

}  // namespace hypersym
