#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hypersym::kernels {

// Partials are stored as two byte lanes of kLaneWidth entries: forward[x] is
// the image of x and backward[y] the preimage of y, kUnset where undefined.
inline constexpr std::size_t kLaneWidth = 128;
inline constexpr std::uint8_t kUnset = 0xFF;

struct LanePair {
  const std::uint8_t* forward;
  const std::uint8_t* backward;
};

struct MutableLanePair {
  std::uint8_t* forward;
  std::uint8_t* backward;
};

// One implementation of the lane primitives. Every variant must agree with
// the scalar reference bit for bit.
struct KernelSet {
  std::string_view name;
  // Writes the union of a and b and returns its number of pairs, or -1 when a
  // and b collide (disagree on a shared domain or image point). Output lanes
  // are unspecified on collision.
  int (*join)(LanePair a, LanePair b, MutableLanePair out);
  // True iff a and b do not collide.
  bool (*uniform)(LanePair a, LanePair b);
  // True iff every pair of a is a pair of b.
  bool (*restricts_to)(const std::uint8_t* a_forward,
                       const std::uint8_t* b_forward);
};

const KernelSet& scalar_kernels();
#if defined(HYPERSYM_HAVE_AVX2)
const KernelSet& avx2_kernels();
#endif
#if defined(HYPERSYM_HAVE_NEON)
const KernelSet& neon_kernels();
#endif

// Variants compiled in and supported by the running CPU, scalar first.
std::span<const KernelSet* const> available();

// The variant used by the library. Chosen once at startup: the widest
// supported variant, unless HYPERSYM_KERNEL names another available one.
const KernelSet& active();

}  // namespace hypersym::kernels
