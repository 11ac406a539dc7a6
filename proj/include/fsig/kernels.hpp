#pragma once

// Row kernels over Z/p used by dense elimination. Every kernel has a
// portable scalar reference; wider variants are picked at runtime from the
// host CPU and must agree with the reference bit for bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace fsig::kernels {

enum class Isa { scalar, avx2 };

/// y[i] = (y[i] + a * x[i]) mod p. Inputs must already be reduced mod p.
using AxpyFn = void (*)(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
                        std::uint32_t a, std::uint32_t p);
/// y[i] = (a * y[i]) mod p.
using ScaleFn = void (*)(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);

struct KernelTable {
  Isa isa;
  AxpyFn axpy_mod;
  ScaleFn scale_mod;
  // Largest modulus the table handles; callers fall back to scalar above it.
  std::uint32_t max_modulus;
};

namespace scalar {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
}  // namespace scalar

#if defined(FSIG_BUILD_AVX2)
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
}  // namespace avx2
#endif

bool isa_available(Isa isa);
const KernelTable& table_for(Isa isa);

/// Best table for this CPU. FSIG_SIMD=scalar in the environment forces the
/// reference path.
const KernelTable& active();

/// Table to use for modulus p: the active one if it supports p, else scalar.
const KernelTable& for_modulus(std::uint32_t p);

std::string_view isa_name(Isa isa);

}  // namespace fsig::kernels
