#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace sublat::simd {

namespace {

bool cpu_has_avx2() {
#if defined(SUBLAT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& choose() {
  const auto avail = available_kernels();
  if (const char* forced = std::getenv("SUBLAT_KERNELS")) {
    for (const KernelTable* t : avail)
      if (std::string_view(t->name) == forced) return *t;
  }
  return *avail.back();
}

}  // namespace

const KernelTable& scalar_kernels() { return detail::kScalarTable; }

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&detail::kScalarTable};
#if defined(SUBLAT_HAVE_AVX2)
  if (cpu_has_avx2()) out.push_back(&detail::kAvx2Table);
#endif
#if defined(SUBLAT_HAVE_NEON)
  out.push_back(&detail::kNeonTable);
#endif
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = choose();
  return table;
}

}  // namespace sublat::simd
