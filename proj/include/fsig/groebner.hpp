#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fsig/bigint.hpp"
#include "fsig/polynomial.hpp"

namespace fsig {

/// Caps on a single Buchberger run. Hitting one throws ResourceLimit.
struct GroebnerLimits {
  std::size_t max_pairs = 5'000'000;
  std::size_t max_basis = 100'000;
};

/// Limits used when none are passed explicitly.
GroebnerLimits default_groebner_limits();
void set_default_groebner_limits(const GroebnerLimits& limits);

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
};

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool reduced() const { return reduced_; }
  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;

  /// Fully reduced remainder of f.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  bool operator==(const GroebnerBasis& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  bool reduced_;
};

/// Reduced Groebner basis of the ideal generated by gens. Normal selection
/// strategy with the Gebauer-Moeller pair criteria. Output is monic, reduced,
/// and sorted by increasing leading monomial.
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         const GroebnerLimits& limits = default_groebner_limits(),
                         GroebnerStats* stats = nullptr);

/// Remainder of f by the polynomials in `divisors` (any order, need not be a
/// basis); every term of the result is irreducible by their leading monomials.
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Finitely generated ideal with a write-once cached Groebner basis shared by
/// all copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);
  /// <x_1, ..., x_n>
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Computed on first use; later calls return the cached basis.
  const GroebnerBasis& groebner() const;
  const GroebnerBasis& groebner(const GroebnerLimits& limits) const;
  bool has_cached_groebner() const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return groebner().is_unit(); }
  bool is_principal() const { return generators_.size() == 1; }
  bool is_monomial() const;

  bool contains(const Polynomial& f) const;
  /// Every generator of other lies in this ideal.
  bool contains(const Ideal& other) const;

  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& ideal);

/// dim_k S/I, or nullopt when S/I is infinite dimensional. Counts the
/// standard monomials of the reduced basis.
std::optional<BigInt> quotient_length(const Ideal& ideal);
std::optional<BigInt> quotient_length(const GroebnerBasis& gb);

/// Krull dimension of S/I: the largest set U of variables such that no
/// leading monomial is supported inside U. Throws std::invalid_argument for
/// the unit ideal.
std::size_t krull_dimension(const Ideal& ideal);

}  // namespace fsig
