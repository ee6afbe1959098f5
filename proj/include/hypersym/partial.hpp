#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypersym/ground_set.hpp"
#include "hypersym/kernels.hpp"
#include "hypersym/permutation.hpp"

namespace hypersym {

// An injective map from a subset of the left ground set into the left ground
// set (automorphism mode) or into a right ground set (isomorphism mode).
//
// Stored as dense forward/backward byte lanes so that joins and restriction
// tests run as lane-parallel kernels. Domain points are always left-side; the
// image side is recorded once for the whole partial. The empty partial has no
// pairs, is left-sided, and acts as the ring unit.
class Partial {
 public:
  using Lanes = std::array<std::uint8_t, kernels::kLaneWidth>;

  Partial();

  // Unchecked except for range; use make_partial for user input.
  static Partial from_pairs(std::span<const std::uint32_t> domain,
                            std::span<const std::uint32_t> image,
                            Side image_side = Side::Left);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Side image_side() const noexcept { return side_; }

  std::optional<std::uint32_t> image_of(std::uint32_t x) const;
  std::optional<std::uint32_t> preimage_of(std::uint32_t y) const;

  // Ascending domain points and, positionally, their images.
  std::vector<std::uint32_t> domain() const;
  std::vector<std::uint32_t> image_list() const;
  // Image points in ascending order.
  std::vector<std::uint32_t> image_set() const;

  kernels::LanePair lanes() const noexcept {
    return {forward_.data(), backward_.data()};
  }

  // Total order: forward lanes bytewise, then image side.
  friend bool operator==(const Partial& a, const Partial& b);
  friend bool operator<(const Partial& a, const Partial& b);

 private:
  friend std::optional<Partial> join(const Partial&, const Partial&);

  alignas(32) Lanes forward_;
  alignas(32) Lanes backward_;
  std::uint8_t size_ = 0;
  Side side_ = Side::Left;
};

// Validated construction from positional domain/image lists. Domain points
// must be left-side; image points must share one side.
// Errors: LengthMismatch, DuplicateDomain, DuplicateImage, MixedSides,
// PointOutOfRange.
Partial make_partial(std::span<const Point> domain, std::span<const Point> image);
// Same-side convenience form over point indices.
Partial make_partial(std::span<const std::uint32_t> domain,
                     std::span<const std::uint32_t> image,
                     Side image_side = Side::Left);

// No shared domain point with different images and no shared image point
// with different preimages.
bool is_uniform(const Partial& a, const Partial& b);

// The minimum common extension, or nullopt (the ring zero) if a and b are
// not uniform.
std::optional<Partial> join(const Partial& a, const Partial& b);

// a <= b: b restricts to a.
bool leq(const Partial& a, const Partial& b);

// Extends a same-side partial on a ground set of size m to a permutation:
// points of img \ dom go to dom \ img in ascending order, every other point
// outside the domain is fixed.
Permutation extend_to_permutation(const Partial& p, std::size_t m);

// The involution exchanging A \ B with B \ A in ascending order, identity
// elsewhere. Errors: SizeMismatch.
Permutation transversal(std::span<const std::uint32_t> a,
                        std::span<const std::uint32_t> b, std::size_t m);

inline constexpr std::size_t kDefaultExpansionCap = 3628800;  // 10!

// Every bijection {0..m-1} -> {0..m-1} restricting to p. Errors:
// ExpansionTooLarge when (m - |p|)! exceeds cap.
PermSet enumerate_class(const Partial& p, std::size_t m,
                        std::size_t cap = kDefaultExpansionCap);

// n!, saturating at SIZE_MAX.
std::size_t factorial_capped(std::size_t n);

// "(1 2 // 2 1)" with labels; the empty partial prints as "()".
std::string format_partial(const Partial& p, const GroundSet& domain,
                           const GroundSet& codomain);

}  // namespace hypersym
