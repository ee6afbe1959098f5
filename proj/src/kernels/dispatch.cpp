#include <cstdlib>
#include <string_view>
#include <vector>

#include "hypersym/kernels.hpp"

namespace hypersym::kernels {
namespace {

std::vector<const KernelSet*> detect() {
  std::vector<const KernelSet*> out{&scalar_kernels()};
#if defined(HYPERSYM_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt")) {
    out.push_back(&avx2_kernels());
  }
#endif
#if defined(HYPERSYM_HAVE_NEON)
  out.push_back(&neon_kernels());
#endif
  return out;
}

const std::vector<const KernelSet*>& registry() {
  static const std::vector<const KernelSet*> sets = detect();
  return sets;
}

const KernelSet& choose() {
  const auto& sets = registry();
  if (const char* want = std::getenv("HYPERSYM_KERNEL")) {
    for (const auto* s : sets) {
      if (s->name == std::string_view(want)) return *s;
    }
  }
  return *sets.back();
}

}  // namespace

std::span<const KernelSet* const> available() { return registry(); }

const KernelSet& active() {
  static const KernelSet& chosen = choose();
  return chosen;
}

}  // namespace hypersym::kernels
