#include "fsig/kernels.hpp"

#include <cassert>

namespace fsig::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p) {
  assert(y.size() == x.size());
  const std::uint64_t m = p;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % m);
  }
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  const std::uint64_t m = p;
  for (auto& v : y) v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * v) % m);
}

}  // namespace fsig::kernels::scalar
