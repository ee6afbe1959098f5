#include "hypersym/polypartial.hpp"

#include <algorithm>

#include "hypersym/errors.hpp"

namespace hypersym {

void xor_normalize(std::vector<Partial>& terms) {
  std::sort(terms.begin(), terms.end());
  std::size_t out = 0;
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) {
      if (out != i) terms[out] = terms[i];
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Polypartial::Polypartial(Partial p) { terms_.push_back(std::move(p)); }

Polypartial::Polypartial(std::vector<Partial> terms) : terms_(std::move(terms)) {
  xor_normalize(terms_);
}

Polypartial::Polypartial(std::initializer_list<Partial> terms)
    : Polypartial(std::vector<Partial>(terms)) {}

Polypartial pp_add(const Polypartial& a, const Polypartial& b) {
  std::vector<Partial> out;
  out.reserve(a.term_count() + b.term_count());
  std::set_symmetric_difference(a.terms().begin(), a.terms().end(),
                                b.terms().begin(), b.terms().end(),
                                std::back_inserter(out));
  return Polypartial(std::move(out));
}

Polypartial pp_mul(const Polypartial& a, const Polypartial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<Partial> out;
  out.reserve(std::min<std::size_t>(a.term_count() * b.term_count(), 1u << 16));
  for (const auto& p : a.terms()) {
    for (const auto& q : b.terms()) {
      if (auto j = join(p, q)) out.push_back(*j);
    }
  }
  return Polypartial(std::move(out));
}

PermSet pp_eval(const Polypartial& a, std::size_t m, std::size_t cap) {
  std::size_t total = 0;
  for (const auto& t : a.terms()) {
    if (t.size() > m) {
      throw Error(Errc::PointOutOfRange, "term larger than the ground set");
    }
    std::size_t c = factorial_capped(m - t.size());
    if (c > cap || total > cap - c) {
      throw Error(Errc::ExpansionTooLarge,
                  "evaluation would expand more than " + std::to_string(cap) +
                      " permutations");
    }
    total += c;
  }
  std::vector<Permutation> all;
  all.reserve(total);
  for (const auto& t : a.terms()) {
    auto cls = enumerate_class(t, m, cap);
    all.insert(all.end(), cls.begin(), cls.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<Permutation> odd;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i + 1;
    while (j < all.size() && all[j] == all[i]) ++j;
    if ((j - i) % 2 == 1) odd.push_back(std::move(all[i]));
    i = j;
  }
  return PermSet(std::move(odd));
}

Count pp_order(const Polypartial& a, std::size_t singular_size, std::size_t m) {
  for (const auto& t : a.terms()) {
    if (t.size() != singular_size) {
      throw Error(Errc::MixedDomainSizes,
                  "term of size " + std::to_string(t.size()) + " where " +
                      std::to_string(singular_size) + " expected");
    }
  }
  if (a.is_zero()) return 0;
  if (singular_size > m) {
    throw Error(Errc::SizeMismatch, "singular set larger than the ground set");
  }
  Count order = a.term_count();
  for (std::size_t i = 2; i <= m - singular_size; ++i) order *= i;
  return order;
}

std::string format_polypartial(const Polypartial& a, const GroundSet& domain,
                               const GroundSet& codomain) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    out += format_partial(t, domain, codomain);
  }
  return out;
}

}  // namespace hypersym
