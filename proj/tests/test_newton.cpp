#include <random>

#include "doctest.h"
#include "fsig/newton.hpp"
#include "fsig/signature.hpp"
#include "fsig/systems.hpp"
#include "oracles.hpp"

using namespace fsig;
using namespace fsig::newton;

namespace {

std::vector<LatticePoint> pts(std::initializer_list<std::initializer_list<long>> list) {
  std::vector<LatticePoint> out;
  for (const auto& l : list) out.push_back(lattice_point(l));
  return out;
}

Rational branch_formula(const Rational& t) {
  if (t <= Rational(1, 3)) return 1 - 3 * t * t;
  if (t <= Rational(1, 2)) return Rational(4, 3) - 2 * t;
  if (t <= Rational(5, 6)) return Rational(25, 12) - 5 * t + 3 * t * t;
  return 0;
}

const std::vector<std::vector<LatticePoint>>& corpus2() {
  static const std::vector<std::vector<LatticePoint>> c{
      pts({{3, 0}, {0, 2}}), pts({{1, 0}, {0, 1}}), pts({{2, 0}, {1, 1}, {0, 2}}), pts({{4, 0}, {1, 1}, {0, 3}}),
      pts({{5, 1}, {2, 2}, {0, 7}}), pts({{1, 1}}), pts({{2, 3}, {3, 0}}), pts({{6, 0}, {2, 1}, {0, 4}, {1, 2}})};
  return c;
}

}  // namespace

TEST_SUITE("newton") {

TEST_CASE("facet examples") {
  const auto p = newton_polyhedron(pts({{3, 0}, {0, 2}}));
  REQUIRE(p.facets.size() == 1);
  CHECK(p.facets[0].normal == std::vector<BigInt>{2, 3});
  CHECK(p.facets[0].offset == 6);
  const auto m = newton_polyhedron(pts({{1, 0}, {0, 1}}));
  REQUIRE(m.facets.size() == 1);
  CHECK(m.facets[0].normal == std::vector<BigInt>{1, 1});
  CHECK(m.facets[0].offset == 1);
  const auto s = newton_polyhedron(pts({{2, 0}, {1, 1}, {0, 2}}));
  REQUIRE(s.facets.size() == 1);
  CHECK(s.facets[0].normal == std::vector<BigInt>{1, 1});
  CHECK(s.facets[0].offset == 2);
  CHECK_THROWS_AS(newton_polyhedron({}), std::invalid_argument);
  CHECK_THROWS_AS(newton_polyhedron(pts({{1, 0, 0, 0, 0, 0, 0}})), std::invalid_argument);
}

TEST_CASE("every facet is tight at a generator") {
  for (const auto& a : corpus2()) {
    const auto p = newton_polyhedron(a);
    for (const auto& f : p.facets) {
      bool tight = false;
      for (const auto& u : p.generators) {
        Rational v = 0;
        for (std::size_t i = 0; i < u.size(); ++i) v += Rational(f.normal[i] * u[i]);
        CHECK(v >= f.offset);
        tight = tight || v == f.offset;
      }
      CHECK(tight);
    }
  }
}

TEST_CASE("volume examples") {
  const auto p = newton_polyhedron(pts({{3, 0}, {0, 2}}));
  CHECK(clip_and_volume(p, Rational(1, 4)) == Rational(13, 16));
  CHECK(clip_and_volume(p, Rational(3, 5)) == Rational(49, 300));
  CHECK(monomial_signature(pts({{3, 0}, {0, 2}}), Rational(2, 5)) == Rational(8, 15));
  CHECK(monomial_signature(pts({{3, 0}, {0, 2}}), Rational(5, 6)) == 0);
  CHECK(monomial_signature(pts({{1, 0}, {0, 1}}), 1) == Rational(1, 2));
  // cube minus the corner simplex u+v+w < 1
  CHECK(monomial_signature(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1) == Rational(5, 6));
  for (const auto& a : corpus2()) CHECK(clip_and_volume(newton_polyhedron(a), 0) == 1);
}

TEST_CASE("lattice count examples") {
  const auto p = newton_polyhedron(pts({{3, 0}, {0, 2}}));
  CHECK(lattice_count(p, Rational(1, 2), 3) == 7);
  CHECK(lattice_count(p, Rational(1, 2), 9) == 37);
  for (const auto& a : corpus2()) {
    CHECK(lattice_count(newton_polyhedron(a), 0, 5) == 36);
  }
}

TEST_CASE("lattice counts match enumeration") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> ex(0, 4);
  std::uniform_int_distribution<long> num(0, 12);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + i % 2;
    std::vector<LatticePoint> a;
    for (int k = 0; k < 3; ++k) {
      LatticePoint u;
      for (std::size_t j = 0; j < n; ++j) u.emplace_back(ex(rng));
      a.push_back(u);
    }
    const auto p = newton_polyhedron(a);
    const Rational t = canonical(Rational(num(rng), 12));
    for (std::uint64_t q : {1u, 3u, 4u}) CHECK(lattice_count(p, t, q) == oracle::brute_lattice_count(p, t, q));
  }
}

TEST_CASE("closure membership examples") {
  const auto a = pts({{3, 0}, {0, 2}});
  CHECK(closure_membership(lattice_point({2, 1}), a, 1));
  CHECK_FALSE(closure_membership(lattice_point({1, 1}), a, 1));
  for (const auto& g : a) CHECK(closure_membership(g, a, 1));
  CHECK(closure_membership(lattice_point({3, 2}), a, 2));
  CHECK_FALSE(closure_membership(lattice_point({3, 1}), a, 2));
}

TEST_CASE("triangulated area equals the shoelace area") {
  for (const auto& a : corpus2()) {
    const auto p = newton_polyhedron(a);
    for (int k = 0; k <= 24; ++k) {
      const Rational t = canonical(Rational(k, 12));
      const ClippedPolytope c = clip(p, t);
      CHECK(c.volume == oracle::shoelace(c.vertices));
    }
  }
}

TEST_CASE("three-branch formula at t = k/60") {
  const auto a = pts({{3, 0}, {0, 2}});
  for (int k = 0; k <= 50; ++k) {
    const Rational t = canonical(Rational(k, 60));
    CHECK_MESSAGE(monomial_signature(a, t) == branch_formula(t), "t = " << to_string(t));
  }
}

TEST_CASE("volume is non-increasing in t and vanishes past the corner") {
  for (const auto& a : corpus2()) {
    const auto p = newton_polyhedron(a);
    Rational prev = 2;
    for (int k = 0; k <= 40; ++k) {
      const Rational v = clip_and_volume(p, Rational(k, 10));
      CHECK(v <= prev);
      prev = v;
    }
    // (1,...,1) is on the boundary of tP at t* = min over facets of sum(w) / b
    Rational tstar = -1;
    for (const auto& f : p.facets) {
      BigInt s = 0;
      for (const auto& w : f.normal) s += w;
      const Rational tf = Rational(s) / f.offset;
      if (tstar < 0 || tf < tstar) tstar = tf;
    }
    if (tstar > 0) {
      CHECK(clip_and_volume(p, tstar) == 0);
      CHECK(clip_and_volume(p, tstar + Rational(1, 7)) == 0);
    }
  }
}

TEST_CASE("three dimensional volumes") {
  // cube minus the corner simplex u+v+w < 1/2
  CHECK(monomial_signature(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Rational(1, 2)) == Rational(47, 48));
  // product ideal: volume of {u >= t} x {v >= t} x [0,1]
  CHECK(monomial_signature(pts({{1, 1, 0}}), Rational(1, 3)) == Rational(4, 9));
  // 4 dimensions: (1 - t)^4 for the principal x y z w
  CHECK(monomial_signature(pts({{1, 1, 1, 1}}), Rational(1, 2)) == Rational(1, 16));
}

TEST_CASE("lattice counts converge to the volume") {
  const auto a = pts({{3, 0}, {0, 2}});
  const auto p = newton_polyhedron(a);
  std::vector<std::vector<Rational>> errs;
  for (int k = 0; k <= 20; ++k) {
    const Rational t = canonical(Rational(k, 20));
    const Rational vol = clip_and_volume(p, t);
    std::vector<Rational> err;
    for (unsigned e = 1; e <= 4; ++e) {
      const BigInt q = ipow(BigInt(3), e);
      const Rational ratio = Rational(lattice_count(p, t, q.get_ui())) / Rational(q * q);
      err.push_back(abs(ratio - vol) * Rational(q));
    }
    errs.push_back(std::move(err));
  }
  // C calibrated once at e = 1 over the t grid bounds every later scaled error
  Rational c = 0;
  for (const auto& err : errs) c = std::max(c, err[0]);
  for (const auto& err : errs)
    for (std::size_t i = 1; i < err.size(); ++i) CHECK(err[i] <= c);
}

TEST_CASE("general path approaches the exact monomial value") {
  auto r = make_ring(3, {"x", "y"});
  const auto sys = parse_system("pair{a=[x^3, y^2], t=2/5}", r);
  const SplittingReport rep = signature_sequence(sys, 5);
  REQUIRE(rep.rows.size() == 5);
  const Rational exact = monomial_signature(pts({{3, 0}, {0, 2}}), Rational(2, 5));
  CHECK(abs(rep.rows.back().s - exact) <= rep.error_envelope);
  CHECK(abs(rep.rows.back().s - exact) < abs(rep.rows.front().s - exact));
}

}
