#include <immintrin.h>

#include <cassert>

#include "fsig/kernels.hpp"

// 8 lanes of uint32. Valid for p < 2^16 so that y + a*x < 2^32.
// Barrett reduction with m = floor(2^32 / p); the quotient estimate is
// short by at most one, fixed with a single conditional subtract.

namespace fsig::kernels::avx2 {
namespace {

inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

inline __m256i reduce(__m256i v, __m256i vp, __m256i vm) {
  const __m256i q = mulhi_epu32(v, vm);
  const __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, vp));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

}  // namespace

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p) {
  assert(y.size() == x.size());
  assert(p < (1u << 16));
  const std::size_t n = y.size();
  const auto m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    const __m256i v = _mm256_add_epi32(vy, _mm256_mullo_epi32(va, vx));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), reduce(v, vp, vm));
  }
  if (i < n) scalar::axpy_mod(y.subspan(i), x.subspan(i), a, p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  assert(p < (1u << 16));
  const std::size_t n = y.size();
  const auto m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i),
                        reduce(_mm256_mullo_epi32(va, vy), vp, vm));
  }
  if (i < n) scalar::scale_mod(y.subspan(i), a, p);
}

}  // namespace fsig::kernels::avx2
