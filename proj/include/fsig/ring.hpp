#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fsig/prime_field.hpp"

namespace fsig {

/// Rings carry at most this many variables, one of which is reserved for the
/// auxiliary variable used by elimination.
inline constexpr std::size_t kMaxVariables = 16;
inline constexpr std::size_t kMaxUserVariables = kMaxVariables - 1;

/// Exponent vector x^u. Storage is inline; only the first size() entries are
/// meaningful and the rest are kept at zero so whole-array compares are valid.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  static Monomial from_exponents(const std::vector<Exponent>& exps);

  std::size_t size() const { return size_; }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, Exponent v);
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::vector<Exponent> exponents() const { return {e_.begin(), e_.begin() + size_}; }

  /// Throws std::overflow_error if an exponent leaves 32 bits.
  Monomial operator*(const Monomial& other) const;
  /// Every exponent multiplied by k, overflow-checked.
  Monomial scaled(std::uint64_t k) const;
  /// Requires divides(other, *this).
  Monomial operator/(const Monomial& other) const;

  bool divides(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  /// Bit i set iff exponent i is nonzero; quick rejection for divisibility.
  std::uint32_t support_mask() const;

  bool operator==(const Monomial& other) const {
    return size_ == other.size_ && e_ == other.e_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> e_{};
  std::uint64_t degree_ = 0;
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Admissible monomial orders. Block orders compare the first block_size
/// variables first (the elimination block), then the rest, each by `inner`.
struct TermOrder {
  enum class Kind { degrevlex, lex, block };

  Kind kind = Kind::degrevlex;
  std::size_t block_size = 0;
  Kind inner = Kind::degrevlex;

  static TermOrder degrevlex() { return {}; }
  static TermOrder lex() { return {Kind::lex, 0, Kind::degrevlex}; }
  static TermOrder block(std::size_t first, Kind inner = Kind::degrevlex) {
    return {Kind::block, first, inner};
  }

  /// Negative, zero, positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string name() const;

  bool operator==(const TermOrder&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// F_p[x_1..x_n] with a fixed term order. Variable order is declaration order.
class Ring {
 public:
  Ring(std::uint64_t p, std::vector<std::string> names, TermOrder order);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const TermOrder& order() const { return order_; }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  bool operator==(const Ring& other) const {
    return field_ == other.field_ && names_ == other.names_ && order_ == other.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  TermOrder order_;
};

RingPtr make_ring(std::uint64_t p, std::vector<std::string> names,
                  TermOrder order = TermOrder::degrevlex());

/// Same ring or structurally identical rings.
bool same_ring(const RingPtr& a, const RingPtr& b);
/// Throws RingMismatch unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace fsig
