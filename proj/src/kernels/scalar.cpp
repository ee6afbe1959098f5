#include "hypersym/kernels.hpp"

namespace hypersym::kernels {
namespace {

bool lanes_collide(const std::uint8_t* a, const std::uint8_t* b) {
  for (std::size_t x = 0; x < kLaneWidth; ++x) {
    if (a[x] != kUnset && b[x] != kUnset && a[x] != b[x]) return true;
  }
  return false;
}

int join(LanePair a, LanePair b, MutableLanePair out) {
  if (lanes_collide(a.forward, b.forward) ||
      lanes_collide(a.backward, b.backward)) {
    return -1;
  }
  int size = 0;
  for (std::size_t x = 0; x < kLaneWidth; ++x) {
    std::uint8_t f = a.forward[x] != kUnset ? a.forward[x] : b.forward[x];
    out.forward[x] = f;
    out.backward[x] = a.backward[x] != kUnset ? a.backward[x] : b.backward[x];
    if (f != kUnset) ++size;
  }
  return size;
}

bool uniform(LanePair a, LanePair b) {
  return !lanes_collide(a.forward, b.forward) &&
         !lanes_collide(a.backward, b.backward);
}

bool restricts_to(const std::uint8_t* a, const std::uint8_t* b) {
  for (std::size_t x = 0; x < kLaneWidth; ++x) {
    if (a[x] != kUnset && a[x] != b[x]) return false;
  }
  return true;
}

constexpr KernelSet kScalar{"scalar", &join, &uniform, &restricts_to};

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

}  // namespace hypersym::kernels
