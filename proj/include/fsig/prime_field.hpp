#pragma once

#include <cstdint>

namespace fsig {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Z/p for a word-sized prime p. Elements are plain Coeff values in [0, p).
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is prime and below 2^32.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Coeff>(r < 0 ? r + m : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>(std::uint64_t{a} * b % p_); }
  Coeff pow(Coeff a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Coeff inv(Coeff a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace fsig
