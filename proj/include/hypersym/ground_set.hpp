#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypersym {

// Hard upper bound on the number of ground points. Partials are stored as
// dense byte lanes of this width, see partial.hpp.
inline constexpr std::size_t kMaxGroundSize = 128;

using Label = std::string;

// Ascending label order: labels that spell a non-negative integer sort
// numerically and precede all other labels, which sort lexicographically.
bool label_less(const Label& a, const Label& b);

// An ordered, duplicate-free vertex universe. Point indices are positions in
// ascending label order.
class GroundSet {
 public:
  GroundSet() = default;
  // Labels "1".."m".
  explicit GroundSet(std::size_t m);
  explicit GroundSet(std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const Label& label(std::uint32_t index) const { return labels_.at(index); }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  std::optional<std::uint32_t> find(const Label& label) const;
  // Throws Error(UnknownLabel).
  std::uint32_t index_of(const Label& label) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<Label> labels_;
};

enum class Side : std::uint8_t { Left = 0, Right = 1 };

// A ground point. Right-side points live in the second ground set of an
// isomorphism computation.
struct Point {
  std::uint32_t index = 0;
  Side side = Side::Left;

  auto operator<=>(const Point&) const = default;
};

inline Point left(std::uint32_t i) { return {i, Side::Left}; }
inline Point right(std::uint32_t i) { return {i, Side::Right}; }

}  // namespace hypersym
