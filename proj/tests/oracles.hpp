// Independent reference computations for the test suites. Nothing here calls
// into the library's Groebner or linear algebra code.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fsig/bigint.hpp"
#include "fsig/newton.hpp"
#include "fsig/polynomial.hpp"
#include "fsig/systems.hpp"

namespace oracle {

using Exps = std::vector<std::uint32_t>;

/// Rank over F_p by plain Gaussian elimination on 64-bit residues.
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

/// All exponent vectors in n variables of total degree <= d.
std::vector<Exps> monomials_up_to(std::size_t n, unsigned d);

/// f in the F_p-span of {m g : deg(m g) <= d}. Exact for homogeneous input
/// when d = deg f; a sufficient condition otherwise.
bool macaulay_member(const fsig::Polynomial& f, const std::vector<fsig::Polynomial>& gens, unsigned d);

/// dim S/I for I containing every x_i^q: box size minus the rank of the
/// multiples m g_i truncated to the box.
std::uint64_t box_quotient_length(const std::vector<fsig::Polynomial>& gens, std::uint32_t q);

/// Monomials outside the monomial ideal generated by `gens`, counted inside
/// the box [0, bound)^n.
std::uint64_t count_standard_monomials(const std::vector<Exps>& gens, std::size_t n, std::uint32_t bound);

/// Area of a convex polygon from its vertices in any order.
fsig::Rational shoelace(std::vector<fsig::newton::Point> pts);

/// #{u in [0,q]^n : <w,u> >= t q b for each facet}, by full enumeration.
fsig::BigInt brute_lattice_count(const fsig::newton::NewtonPolyhedron& poly, const fsig::Rational& t, std::uint64_t q);

/// Random polynomial with up to `terms` terms of total degree <= maxdeg.
fsig::Polynomial random_poly(std::mt19937_64& rng, const fsig::RingPtr& ring, unsigned terms, unsigned maxdeg);

/// Random homogeneous polynomial of degree deg (possibly zero).
fsig::Polynomial random_homogeneous(std::mt19937_64& rng, const fsig::RingPtr& ring, unsigned terms, unsigned deg);

/// Builds x^e for an exponent vector in the ring.
fsig::Polynomial monomial(const fsig::RingPtr& ring, const Exps& e, fsig::Coeff c = 1);

/// Random t = a/d with d <= 12 and 0 <= t <= 1.
fsig::Rational small_t(std::mt19937_64& rng);

/// Constructor-built system from small principal or monomial ideals, at most
/// one level of product. Sized so that b_3 stays cheap at p = 5.
fsig::FGradedSystem random_system(std::mt19937_64& rng, const fsig::RingPtr& r, int depth = 0);

/// Random system in the text grammar, so it can be re-parsed in another ring.
std::string random_system_text(std::mt19937_64& rng, const fsig::RingPtr& r);

}  // namespace oracle
