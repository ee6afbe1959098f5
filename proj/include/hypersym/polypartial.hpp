#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypersym/ground_set.hpp"
#include "hypersym/partial.hpp"
#include "hypersym/permutation.hpp"

namespace hypersym {

// An element of the Ring of Partials: a sum over F2 of distinct partials.
// Terms are kept sorted and duplicate-free after every operation, so two
// polypartials are equal iff their term lists are equal. No term is ever
// absorbed into another: {p, q} with p <= q stays a two-term sum.
class Polypartial {
 public:
  // Zero.
  Polypartial() = default;
  // A single term.
  explicit Polypartial(Partial p);
  // XOR-normalizes: terms occurring an even number of times cancel.
  explicit Polypartial(std::vector<Partial> terms);
  Polypartial(std::initializer_list<Partial> terms);

  static Polypartial zero() { return Polypartial(); }
  static Polypartial one() { return Polypartial(Partial()); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Partial>& terms() const noexcept { return terms_; }

  bool operator==(const Polypartial&) const = default;

 private:
  std::vector<Partial> terms_;
};

// Sorts and drops pairs of equal terms.
void xor_normalize(std::vector<Partial>& terms);

Polypartial pp_add(const Polypartial& a, const Polypartial& b);
// Bilinear extension of join; colliding pairs contribute zero.
Polypartial pp_mul(const Polypartial& a, const Polypartial& b);

inline Polypartial operator+(const Polypartial& a, const Polypartial& b) {
  return pp_add(a, b);
}
inline Polypartial operator*(const Polypartial& a, const Polypartial& b) {
  return pp_mul(a, b);
}

// Evaluation into permutation sets: the symmetric difference of the classes
// of all terms, over a ground set of size m. Errors: ExpansionTooLarge when
// the summed class sizes exceed cap.
PermSet pp_eval(const Polypartial& a, std::size_t m,
                std::size_t cap = kDefaultExpansionCap);

// |terms| * (m - singular_size)!, valid when every term has singular_size
// pairs (distinct equal-size terms have disjoint classes). Errors:
// MixedDomainSizes.
using Count = boost::multiprecision::cpp_int;

Count pp_order(const Polypartial& a, std::size_t singular_size, std::size_t m);

// Terms joined by " + ", "0" for zero.
std::string format_polypartial(const Polypartial& a, const GroundSet& domain,
                               const GroundSet& codomain);

}  // namespace hypersym
