#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fsig/bigint.hpp"

namespace fsig::newton {

/// Hard cap on the ambient dimension for exact volumes.
inline constexpr std::size_t kMaxDimension = 6;

using LatticePoint = std::vector<BigInt>;
using Point = std::vector<Rational>;

LatticePoint lattice_point(std::initializer_list<long> coords);

/// <normal, u> >= offset
struct Halfspace {
  std::vector<BigInt> normal;
  Rational offset;

  bool operator==(const Halfspace&) const = default;
};

/// conv(generators) + nonnegative orthant. `facets` lists the
/// non-coordinate facets: primitive nonnegative integer normals, positive
/// offsets, each tight at some generator. The coordinate halfspaces u_i >= 0
/// are implicit.
struct NewtonPolyhedron {
  std::size_t n = 0;
  std::vector<LatticePoint> generators;  ///< minimal generators only
  std::vector<Halfspace> facets;
};

/// t P cap [0,1]^n, its vertices, and a star triangulation from centroids of
/// a full flag of faces. Each simplex lists n + 1 points.
struct ClippedPolytope {
  std::size_t n = 0;
  std::vector<Halfspace> halfspaces;  ///< in rational form: normal may be scaled
  std::vector<std::vector<Rational>> normals;
  std::vector<Rational> offsets;
  std::vector<Point> vertices;
  std::vector<std::vector<Point>> simplices;
  Rational volume;
};

/// Throws std::invalid_argument on an empty list, negative entries, or
/// mismatched dimensions.
NewtonPolyhedron newton_polyhedron(const std::vector<LatticePoint>& exponents);

/// Vertex enumeration plus triangulation of t P cap [0,1]^n. Lower-dimensional
/// intersections come back with no simplices and volume 0.
ClippedPolytope clip(const NewtonPolyhedron& poly, const Rational& t);

/// Exact Euclidean volume of t P cap [0,1]^n.
Rational clip_and_volume(const NewtonPolyhedron& poly, const Rational& t);

/// #{u in Z^n : 0 <= u_i <= q, u in t q P}.
BigInt lattice_count(const NewtonPolyhedron& poly, const Rational& t, std::uint64_t q);

/// s(S, a^t) for the monomial ideal a with the given exponent vectors.
Rational monomial_signature(const std::vector<LatticePoint>& exponents, const Rational& t);

/// x^u in the integral closure of a^lambda, i.e. u in lambda P_a.
bool closure_membership(const LatticePoint& u, const std::vector<LatticePoint>& exponents,
                        const Rational& lambda);

/// Determinant of a square rational matrix (exact).
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace fsig::newton
