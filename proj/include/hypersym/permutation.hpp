#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypersym/ground_set.hpp"

namespace hypersym {

// A total bijection given in one-line notation: images()[i] is the image of
// point i. Also used for bijections X -> Y between equal-size ground sets.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t m);

  std::size_t size() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // (a * b)(x) = a(b(x)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  // Image of a sorted point set, returned sorted.
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> set) const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

// Disjoint cycles sorted by smallest moved point, fixed points omitted;
// the identity prints as "()".
std::string format_cycles(const Permutation& p, const GroundSet& ground);
// "(1 2 3 // 2 1 3)": the full domain in ascending order over its images.
std::string format_two_row(const Permutation& p, const GroundSet& domain,
                           const GroundSet& codomain);
// "1->2 2->1 3->3"
std::string format_map(const Permutation& p, const GroundSet& domain,
                       const GroundSet& codomain);

// A finite set of permutations kept in lexicographic one-line order.
class PermSet {
 public:
  PermSet() = default;
  explicit PermSet(std::vector<Permutation> perms);

  std::size_t size() const noexcept { return perms_.size(); }
  bool empty() const noexcept { return perms_.empty(); }
  bool contains(const Permutation& p) const;

  auto begin() const noexcept { return perms_.begin(); }
  auto end() const noexcept { return perms_.end(); }
  const std::vector<Permutation>& items() const noexcept { return perms_; }

  PermSet intersect(const PermSet& other) const;
  PermSet unite(const PermSet& other) const;
  PermSet symmetric_difference(const PermSet& other) const;

  // Closed under composition and inverses, containing the identity.
  bool is_group() const;

  bool operator==(const PermSet&) const = default;

 private:
  std::vector<Permutation> perms_;
};

// {a * p : p in s} and {p * a : p in s}.
PermSet left_multiply(const Permutation& a, const PermSet& s);
PermSet right_multiply(const PermSet& s, const Permutation& a);

// Every permutation of {0..m-1}, lexicographic order.
PermSet symmetric_group(std::size_t m);

}  // namespace hypersym
