#include "hypersym/ground_set.hpp"

#include <algorithm>

#include "hypersym/errors.hpp"

namespace hypersym {
namespace {

bool is_number(const Label& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(const Label& s) {
  std::string_view v = s;
  while (v.size() > 1 && v.front() == '0') v.remove_prefix(1);
  return v;
}

}  // namespace

bool label_less(const Label& a, const Label& b) {
  const bool na = is_number(a);
  const bool nb = is_number(b);
  if (na != nb) return na;
  if (!na) return a < b;
  auto va = strip_zeros(a);
  auto vb = strip_zeros(b);
  if (va.size() != vb.size()) return va.size() < vb.size();
  if (va != vb) return va < vb;
  return a < b;  // "007" vs "7"
}

GroundSet::GroundSet(std::size_t m) {
  if (m > kMaxGroundSize) {
    throw Error(Errc::GroundSetTooLarge,
                "ground set of " + std::to_string(m) + " points exceeds limit " +
                    std::to_string(kMaxGroundSize));
  }
  labels_.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) labels_.push_back(std::to_string(i));
}

GroundSet::GroundSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGroundSize) {
    throw Error(Errc::GroundSetTooLarge,
                "ground set of " + std::to_string(labels_.size()) +
                    " points exceeds limit " + std::to_string(kMaxGroundSize));
  }
  std::sort(labels_.begin(), labels_.end(), label_less);
  auto dup = std::adjacent_find(labels_.begin(), labels_.end());
  if (dup != labels_.end()) {
    throw Error(Errc::DuplicateLabel, "duplicate vertex label '" + *dup + "'");
  }
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(Errc::ParseError, "empty vertex label");
  }
}

std::optional<std::uint32_t> GroundSet::find(const Label& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label, label_less);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::uint32_t>(it - labels_.begin());
}

std::uint32_t GroundSet::index_of(const Label& label) const {
  if (auto i = find(label)) return *i;
  throw Error(Errc::UnknownLabel, "unknown vertex label '" + label + "'");
}

}  // namespace hypersym
