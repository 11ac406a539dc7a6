#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsig/bigint.hpp"
#include "fsig/groebner.hpp"

namespace fsig {

/// How a pair exponent t turns into an ideal power at level e.
enum class CeilingConvention {
  p_minus_one,  ///< ceil(t (p^e - 1)), the stored convention
  p_power,      ///< ceil(t p^e)
};

/// Exact rational exponent t >= 0 with integer ceilings per level.
class Exponent {
 public:
  explicit Exponent(Rational t);

  const Rational& value() const { return t_; }
  /// ceil(t (p^e - 1)) or ceil(t p^e). Throws std::overflow_error past 64 bits.
  std::uint64_t at(std::uint32_t p, unsigned e, CeilingConvention c = CeilingConvention::p_minus_one) const;
  BigInt exact_at(std::uint32_t p, unsigned e, CeilingConvention c = CeilingConvention::p_minus_one) const;

 private:
  Rational t_;
};

/// F-graded system b_e with b_e^[p^l] b_l in b_{e+l}; b_0 is the unit ideal.
/// Copies share one memo table of computed b_e.
class FGradedSystem {
 public:
  enum class Kind { quotient, pair, product, explicit_sequence };

  /// b_e = (J^[p^e] : J). J must be nonzero and proper.
  static FGradedSystem quotient(Ideal j);
  /// b_e = a^ceil(t (p^e - 1)) (or the p^e convention). a nonzero, t >= 0.
  static FGradedSystem pair(Ideal a, Rational t,
                            CeilingConvention convention = CeilingConvention::p_minus_one);
  /// b_e = product of the factors' b_e. Factors must share a ring.
  static FGradedSystem product(std::vector<FGradedSystem> factors);
  /// b_1, b_2, ... listed explicitly; no axiom is assumed. For testing the
  /// axiom checker and for ad hoc sequences.
  static FGradedSystem explicit_sequence(RingPtr ring, std::vector<Ideal> levels);

  Kind kind() const;
  const RingPtr& ring() const;

  /// J for quotient systems.
  const Ideal& quotient_ideal() const;
  /// a and t for pair systems.
  const Ideal& pair_ideal() const;
  const Exponent& pair_exponent() const;
  CeilingConvention convention() const;
  const std::vector<FGradedSystem>& factors() const;

  /// b_e, memoized. b_0 is the unit ideal.
  const Ideal& b(unsigned e) const;

  /// Dimension used to normalize splitting numbers: dim S/J for quotient
  /// systems, the number of variables for pair systems, the minimum over the
  /// factors of a product.
  std::size_t normalization_dimension() const;

  /// Sum of the J of every quotient factor (zero ideal if there are none).
  Ideal defining_ideal() const;

  std::string describe() const;

 private:
  struct Impl;
  explicit FGradedSystem(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

inline const Ideal& b_of(const FGradedSystem& sys, unsigned e) { return sys.b(e); }

/// Parses a system expression:
///   quotient { J = [ f, ... ] } | pair { a = [ f, ... ], t = n[/d] } |
///   product [ sys, ... ]
/// Column positions are offset by column_offset for error messages.
FGradedSystem parse_system(std::string_view text, const RingPtr& ring,
                           CeilingConvention convention = CeilingConvention::p_minus_one,
                           std::size_t line = 1, std::size_t column_offset = 0);

struct GradedCheck {
  bool ok = true;
  unsigned e = 0;  ///< first failing (e, l) when !ok
  unsigned l = 0;
  std::optional<Polynomial> witness;  ///< product outside b_{e+l}
};

/// Checks b_e^[p^l] b_l in b_{e+l} for all e, l >= 1 with e + l <= emax.
GradedCheck verify_graded(const FGradedSystem& sys, unsigned emax);

}  // namespace fsig
