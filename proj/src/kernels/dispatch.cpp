#include <cstdlib>
#include <string>

#include "fsig/kernels.hpp"

namespace fsig::kernels {
namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::axpy_mod, &scalar::scale_mod, 0xFFFFFFFFu};
#if defined(FSIG_BUILD_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::axpy_mod, &avx2::scale_mod, (1u << 16) - 1};
#endif

bool cpu_has_avx2() {
#if defined(FSIG_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& select_active() {
  if (const char* env = std::getenv("FSIG_SIMD"); env && std::string(env) == "scalar") {
    return kScalar;
  }
#if defined(FSIG_BUILD_AVX2)
  if (cpu_has_avx2()) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
#if defined(FSIG_BUILD_AVX2)
  if (isa == Isa::avx2 && cpu_has_avx2()) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

const KernelTable& active() {
  static const KernelTable& table = select_active();
  return table;
}

const KernelTable& for_modulus(std::uint32_t p) {
  const KernelTable& t = active();
  return p <= t.max_modulus ? t : kScalar;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace fsig::kernels
