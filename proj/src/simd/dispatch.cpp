#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cdk/simd/kernels.hpp"

namespace cdk::simd {

namespace {

constexpr KernelTable kBase{Isa::scalar, &base::cgemm, &base::axpy, &base::scaled_error};
#ifdef CDK_HAVE_AVX2
constexpr KernelTable kAvx2{Isa::avx2, &avx2::cgemm, &avx2::axpy, &avx2::scaled_error};
#endif

bool cpu_has_avx2() noexcept {
#if defined(CDK_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) noexcept {
  if (isa == Isa::scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

const KernelTable& kernels(Isa isa) {
  if (isa == Isa::scalar) return kBase;
#ifdef CDK_HAVE_AVX2
  if (isa_available(Isa::avx2)) return kAvx2;
#endif
  throw std::runtime_error("instruction set '" + std::string(isa_name(isa)) + "' not available");
}

const KernelTable& kernels() {
  static const KernelTable& selected = [&]() -> const KernelTable& {
    if (const char* forced = std::getenv("CDK_SIMD"); forced && std::string(forced) == "scalar") return kBase;
    return isa_available(Isa::avx2) ? kernels(Isa::avx2) : kBase;
  }();
  return selected;
}

}  // namespace cdk::simd
