#include <immintrin.h>

#include "hypersym/kernels.hpp"

namespace hypersym::kernels {
namespace {

static_assert(kLaneWidth % 32 == 0);
constexpr std::size_t kBlocks = kLaneWidth / 32;

inline __m256i load(const std::uint8_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Lanes where both sides are set and differ. With kUnset = 0xFF the max of a
// pair is 0xFF exactly when one side is unset.
inline __m256i collisions(__m256i a, __m256i b, __m256i unset) {
  __m256i agree = _mm256_or_si256(_mm256_cmpeq_epi8(a, b),
                                  _mm256_cmpeq_epi8(_mm256_max_epu8(a, b), unset));
  return _mm256_andnot_si256(agree, unset);
}

int join(LanePair a, LanePair b, MutableLanePair out) {
  const __m256i unset = _mm256_set1_epi8(static_cast<char>(kUnset));
  __m256i bad = _mm256_setzero_si256();
  int size = 0;
  for (std::size_t i = 0; i < kBlocks; ++i) {
    __m256i af = load(a.forward + 32 * i);
    __m256i bf = load(b.forward + 32 * i);
    __m256i ab = load(a.backward + 32 * i);
    __m256i bb = load(b.backward + 32 * i);
    bad = _mm256_or_si256(bad, collisions(af, bf, unset));
    bad = _mm256_or_si256(bad, collisions(ab, bb, unset));
    __m256i f = _mm256_min_epu8(af, bf);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.forward + 32 * i), f);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.backward + 32 * i),
                        _mm256_min_epu8(ab, bb));
    unsigned empty = static_cast<unsigned>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(f, unset)));
    size += 32 - _mm_popcnt_u32(empty);
  }
  return _mm256_testz_si256(bad, bad) ? size : -1;
}

bool uniform(LanePair a, LanePair b) {
  const __m256i unset = _mm256_set1_epi8(static_cast<char>(kUnset));
  __m256i bad = _mm256_setzero_si256();
  for (std::size_t i = 0; i < kBlocks; ++i) {
    bad = _mm256_or_si256(
        bad, collisions(load(a.forward + 32 * i), load(b.forward + 32 * i), unset));
    bad = _mm256_or_si256(
        bad, collisions(load(a.backward + 32 * i), load(b.backward + 32 * i), unset));
  }
  return _mm256_testz_si256(bad, bad);
}

bool restricts_to(const std::uint8_t* a, const std::uint8_t* b) {
  const __m256i unset = _mm256_set1_epi8(static_cast<char>(kUnset));
  __m256i bad = _mm256_setzero_si256();
  for (std::size_t i = 0; i < kBlocks; ++i) {
    __m256i av = load(a + 32 * i);
    __m256i ok = _mm256_or_si256(_mm256_cmpeq_epi8(av, unset),
                                 _mm256_cmpeq_epi8(av, load(b + 32 * i)));
    bad = _mm256_or_si256(bad, _mm256_andnot_si256(ok, unset));
  }
  return _mm256_testz_si256(bad, bad);
}

constexpr KernelSet kAvx2{"avx2", &join, &uniform, &restricts_to};

}  // namespace

const KernelSet& avx2_kernels() { return kAvx2; }

}  // namespace hypersym::kernels
