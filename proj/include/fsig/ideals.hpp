#pragma once

#include <cstdint>

#include "fsig/groebner.hpp"

namespace fsig {

/// I^[p^e]: generated by the p^e-th powers of the generators.
Ideal bracket_power(const Ideal& ideal, unsigned e);

/// I^n; I^0 is the unit ideal. Principal ideals take the f^n shortcut.
Ideal ideal_power(const Ideal& ideal, std::uint64_t n);

Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// I cap J. Monomial ideals use lcms of generator pairs; everything else
/// goes through intersection_by_elimination.
Ideal intersection(const Ideal& a, const Ideal& b);

/// I cap J via elimination of an auxiliary variable t from t*I + (1-t)*J
/// under a block order with t first.
Ideal intersection_by_elimination(const Ideal& a, const Ideal& b);

/// (I : f) = {g : g f in I}. Fast paths: I principal and divisible by f;
/// I and f monomial. Otherwise (1/f)(I cap <f>), dividing each basis element
/// exactly. Throws std::invalid_argument for f = 0 and InternalError if an
/// element of I cap <f> fails to be divisible by f.
Ideal colon(const Ideal& ideal, const Polynomial& f);

/// (I : J) as the intersection of (I : f_j) over generators f_j of J.
Ideal colon(const Ideal& ideal, const Ideal& divisor);

/// (I : f) always through elimination; used to cross-check the fast paths.
Ideal colon_by_elimination(const Ideal& ideal, const Polynomial& f);

/// Same reduced Groebner basis.
bool ideal_equals(const Ideal& a, const Ideal& b);

}  // namespace fsig
