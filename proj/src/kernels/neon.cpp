#include <arm_neon.h>

#include "hypersym/kernels.hpp"

namespace hypersym::kernels {
namespace {

static_assert(kLaneWidth % 16 == 0);
constexpr std::size_t kBlocks = kLaneWidth / 16;

inline uint8x16_t collisions(uint8x16_t a, uint8x16_t b, uint8x16_t unset) {
  uint8x16_t agree =
      vorrq_u8(vceqq_u8(a, b), vceqq_u8(vmaxq_u8(a, b), unset));
  return vmvnq_u8(agree);
}

int join(LanePair a, LanePair b, MutableLanePair out) {
  const uint8x16_t unset = vdupq_n_u8(kUnset);
  const uint8x16_t one = vdupq_n_u8(1);
  uint8x16_t bad = vdupq_n_u8(0);
  int size = 0;
  for (std::size_t i = 0; i < kBlocks; ++i) {
    uint8x16_t af = vld1q_u8(a.forward + 16 * i);
    uint8x16_t bf = vld1q_u8(b.forward + 16 * i);
    uint8x16_t ab = vld1q_u8(a.backward + 16 * i);
    uint8x16_t bb = vld1q_u8(b.backward + 16 * i);
    bad = vorrq_u8(bad, collisions(af, bf, unset));
    bad = vorrq_u8(bad, collisions(ab, bb, unset));
    uint8x16_t f = vminq_u8(af, bf);
    vst1q_u8(out.forward + 16 * i, f);
    vst1q_u8(out.backward + 16 * i, vminq_u8(ab, bb));
    size += vaddvq_u8(vandq_u8(vmvnq_u8(vceqq_u8(f, unset)), one));
  }
  return vmaxvq_u8(bad) == 0 ? size : -1;
}

bool uniform(LanePair a, LanePair b) {
  const uint8x16_t unset = vdupq_n_u8(kUnset);
  uint8x16_t bad = vdupq_n_u8(0);
  for (std::size_t i = 0; i < kBlocks; ++i) {
    bad = vorrq_u8(bad, collisions(vld1q_u8(a.forward + 16 * i),
                                   vld1q_u8(b.forward + 16 * i), unset));
    bad = vorrq_u8(bad, collisions(vld1q_u8(a.backward + 16 * i),
                                   vld1q_u8(b.backward + 16 * i), unset));
  }
  return vmaxvq_u8(bad) == 0;
}

bool restricts_to(const std::uint8_t* a, const std::uint8_t* b) {
  const uint8x16_t unset = vdupq_n_u8(kUnset);
  uint8x16_t bad = vdupq_n_u8(0);
  for (std::size_t i = 0; i < kBlocks; ++i) {
    uint8x16_t av = vld1q_u8(a + 16 * i);
    uint8x16_t ok =
        vorrq_u8(vceqq_u8(av, unset), vceqq_u8(av, vld1q_u8(b + 16 * i)));
    bad = vorrq_u8(bad, vmvnq_u8(ok));
  }
  return vmaxvq_u8(bad) == 0;
}

constexpr KernelSet kNeon{"neon", &join, &uniform, &restricts_to};

}  // namespace

const KernelSet& neon_kernels() { return kNeon; }

}  // namespace hypersym::kernels
