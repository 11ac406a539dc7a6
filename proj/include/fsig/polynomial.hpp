#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsig/ring.hpp"

namespace fsig {

struct Term {
  Monomial monomial;
  Coeff coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial over F_p. Terms are strictly decreasing in the ring's
/// term order and never carry a zero coefficient; the zero polynomial has no
/// terms. Values are immutable once built.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;
  Polynomial pow(std::uint64_t n) const;
  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  /// f^(p^e): every exponent vector scaled by p^e. Coefficients are fixed
  /// by Frobenius because they lie in the prime field.
  Polynomial frobenius_power(unsigned e) const;

  /// Exact quotient f / g if g divides f, otherwise nullopt.
  std::optional<Polynomial> exact_divide(const Polynomial& g) const;

  /// Terms with any exponent >= bound dropped (reduction mod the box ideal).
  Polynomial truncated_below(std::uint64_t bound) const;

  /// Same exponents, reinterpreted in a ring with as many variables but
  /// possibly another order.
  Polynomial in_ring(RingPtr target) const;
  /// Variable i of this ring becomes variable var_map[i] of `target`.
  Polynomial remapped(RingPtr target, const std::vector<std::size_t>& var_map) const;

  bool operator==(const Polynomial& g) const;

  /// Canonical text: descending terms, coefficients in [1, p-1].
  std::string to_string() const;

  /// Unchecked construction from already canonical terms.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

namespace detail {
/// a[a_start..] + c * shift * b[b_start..], both descending; shift may be null.
std::vector<Term> merge_scaled(const TermOrder& order, const PrimeField& field,
                               const std::vector<Term>& a, std::size_t a_start,
                               const std::vector<Term>& b, std::size_t b_start,
                               const Monomial* shift, Coeff c);
}  // namespace detail

/// f + c * m * g, the elimination step used by reduction. Both inputs in the
/// same ring.
Polynomial add_scaled_shift(const Polynomial& f, const Polynomial& g, const Monomial& m, Coeff c);

/// Parses the polynomial grammar: signed sums of products of integers,
/// variables, and parenthesized expressions, each optionally raised with '^'.
/// Throws ParseError (column is 1-based into `text`, line is `line`).
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                            std::size_t column_offset = 0);

}  // namespace fsig
