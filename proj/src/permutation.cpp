#include "hypersym/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hypersym {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {}

Permutation Permutation::identity(std::size_t m) {
  std::vector<std::uint32_t> v(m);
  std::iota(v.begin(), v.end(), 0u);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<std::uint32_t> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a.images_[b.images_[i]];
  return Permutation(std::move(out));
}

std::vector<std::uint32_t> Permutation::apply(
    std::span<const std::uint32_t> set) const {
  std::vector<std::uint32_t> out;
  out.reserve(set.size());
  for (auto x : set) out.push_back(images_[x]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_cycles(const Permutation& p, const GroundSet& ground) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    do {
      seen[x] = true;
      if (!first) out += ' ';
      out += ground.label(x);
      first = false;
      x = p(x);
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string format_two_row(const Permutation& p, const GroundSet& domain,
                           const GroundSet& codomain) {
  std::string top;
  std::string bottom;
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (i) {
      top += ' ';
      bottom += ' ';
    }
    top += domain.label(i);
    bottom += codomain.label(p(i));
  }
  return "(" + top + " // " + bottom + ")";
}

std::string format_map(const Permutation& p, const GroundSet& domain,
                       const GroundSet& codomain) {
  std::string out;
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += domain.label(i) + "->" + codomain.label(p(i));
  }
  return out;
}

PermSet::PermSet(std::vector<Permutation> perms) : perms_(std::move(perms)) {
  std::sort(perms_.begin(), perms_.end());
  perms_.erase(std::unique(perms_.begin(), perms_.end()), perms_.end());
}

bool PermSet::contains(const Permutation& p) const {
  return std::binary_search(perms_.begin(), perms_.end(), p);
}

PermSet PermSet::intersect(const PermSet& other) const {
  PermSet out;
  std::set_intersection(perms_.begin(), perms_.end(), other.perms_.begin(),
                        other.perms_.end(), std::back_inserter(out.perms_));
  return out;
}

PermSet PermSet::unite(const PermSet& other) const {
  PermSet out;
  std::set_union(perms_.begin(), perms_.end(), other.perms_.begin(),
                 other.perms_.end(), std::back_inserter(out.perms_));
  return out;
}

PermSet PermSet::symmetric_difference(const PermSet& other) const {
  PermSet out;
  std::set_symmetric_difference(perms_.begin(), perms_.end(),
                                other.perms_.begin(), other.perms_.end(),
                                std::back_inserter(out.perms_));
  return out;
}

bool PermSet::is_group() const {
  if (perms_.empty()) return false;
  if (!contains(Permutation::identity(perms_.front().size()))) return false;
  for (const auto& a : perms_) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : perms_) {
      if (!contains(a * b)) return false;
    }
  }
  return true;
}

PermSet left_multiply(const Permutation& a, const PermSet& s) {
  std::vector<Permutation> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(a * p);
  return PermSet(std::move(out));
}

PermSet right_multiply(const PermSet& s, const Permutation& a) {
  std::vector<Permutation> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(p * a);
  return PermSet(std::move(out));
}

PermSet symmetric_group(std::size_t m) {
  std::vector<Permutation> out;
  std::vector<std::uint32_t> v(m);
  std::iota(v.begin(), v.end(), 0u);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return PermSet(std::move(out));
}

}  // namespace hypersym
