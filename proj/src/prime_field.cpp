#include "fsig/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace fsig {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not a word-sized prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff b = a;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    b = mul(b, b);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat
  return pow(a, p_ - 2);
}

}  // namespace fsig
