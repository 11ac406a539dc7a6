#include <random>

#include "doctest.h"
#include "fsig/errors.hpp"
#include "fsig/groebner.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fsig;
using testing_support::I;
using testing_support::P;

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& ring = f.ring();
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  const auto& F = ring->field();
  const Polynomial a = f.times(l / f.leading_monomial(), F.inv(f.leading_coeff()));
  const Polynomial b = g.times(l / g.leading_monomial(), F.inv(g.leading_coeff()));
  return a - b;
}

std::vector<Polynomial> random_gens(std::mt19937_64& rng, const RingPtr& r, unsigned maxdeg) {
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<Polynomial> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.push_back(oracle::random_poly(rng, r, 3, maxdeg));
  return gens;
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("basis examples") {
  auto lex = make_ring(3, {"x", "y", "z"}, TermOrder::lex());
  const GroebnerBasis g = buchberger(lex, {P(lex, "x-y"), P(lex, "y-z")});
  CHECK(g.elements() == std::vector<Polynomial>{P(lex, "y-z"), P(lex, "x-z")});
  for (const auto& f : {P(lex, "x-y"), P(lex, "y-z")}) CHECK(g.contains(f));

  auto r = make_ring(3, {"x", "y"});
  CHECK(buchberger(r, {P(r, "x^3"), P(r, "y^2")}).elements() == std::vector<Polynomial>{P(r, "y^2"), P(r, "x^3")});
  CHECK(buchberger(r, {P(r, "2*x^2 + y")}).elements() == std::vector<Polynomial>{P(r, "x^2 + 2*y")});
}

TEST_CASE("normal form examples") {
  auto r = make_ring(3, {"x", "y"});
  const GroebnerBasis g = buchberger(r, {P(r, "x^2 - y")});
  CHECK(g.normal_form(P(r, "x^2")) == P(r, "y"));
  CHECK(g.normal_form(P(r, "x^4 - y^2")).is_zero());
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const Polynomial f = oracle::random_poly(rng, r, 5, 5);
    CHECK(g.normal_form(g.normal_form(f)) == g.normal_form(f));
  }
}

TEST_CASE("membership examples") {
  auto r = make_ring(3, {"x"});
  CHECK(ideal_membership(P(r, "x^2"), I(r, {"x"})));
  auto r3 = make_ring(3, {"x", "y", "z"});
  const Polynomial h = P(r3, "x^2 - y^2*z");
  CHECK_FALSE(ideal_membership(h.pow(2), I(r3, {"x^3", "y^3", "z^3"})));
  auto r2 = make_ring(2, {"x", "y", "z"});
  CHECK(ideal_membership(P(r2, "x^2 - y^2*z"), I(r2, {"x^2", "y^2", "z^2"})));
}

TEST_CASE("quotient length examples") {
  auto r = make_ring(3, {"x", "y"});
  CHECK(*quotient_length(I(r, {"x^2", "x*y", "y^3"})) == 4);
  CHECK(oracle::count_standard_monomials({{2, 0}, {1, 1}, {0, 3}}, 2, 8) == 4);
  for (int q : {1, 3, 9}) {
    const std::string xq = "x^" + std::to_string(q), yq = "y^" + std::to_string(q);
    CHECK(*quotient_length(I(r, {xq, yq})) == q * q);
  }
  CHECK_FALSE(quotient_length(I(r, {"x"})).has_value());
  CHECK(*quotient_length(Ideal::unit(r)) == 0);
}

TEST_CASE("krull dimension examples") {
  auto r = make_ring(3, {"x", "y"});
  CHECK(krull_dimension(I(r, {"x*y"})) == 1);
  auto r3 = make_ring(3, {"x", "y", "z"});
  CHECK(krull_dimension(I(r3, {"x^2 - y^2*z"})) == 2);
  CHECK(krull_dimension(Ideal::zero(r3)) == 3);
  CHECK_THROWS_AS(krull_dimension(Ideal::unit(r3)), std::invalid_argument);
}

TEST_CASE("S-polynomials of reduced bases reduce to zero") {
  std::mt19937_64 rng(22);
  int cases = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (const auto& names : {std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x", "y", "z"}}) {
      auto r = make_ring(p, names);
      for (int i = 0; i < 20; ++i, ++cases) {
        const GroebnerBasis g = buchberger(r, random_gens(rng, r, 3));
        const auto& el = g.elements();
        for (std::size_t a = 0; a < el.size(); ++a) {
          CHECK(el[a].leading_coeff() == 1);
          for (std::size_t b = a + 1; b < el.size(); ++b) {
            CHECK(reduce_by(s_polynomial(el[a], el[b]), el).is_zero());
          }
        }
      }
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("membership matches the Macaulay matrix oracle") {
  std::mt19937_64 rng(23);
  int cases = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int i = 0; i < 15; ++i, ++cases) {
      // homogeneous: the oracle at degree deg f is exact in both directions
      std::vector<Polynomial> gens;
      for (unsigned d : {1u, 2u}) gens.push_back(oracle::random_homogeneous(rng, r, 2, d));
      const Polynomial f = oracle::random_homogeneous(rng, r, 3, 3);
      const Ideal ideal(r, gens);
      CHECK(ideal_membership(f, ideal) == oracle::macaulay_member(f, ideal.generators(), 3));
    }
    auto r2 = make_ring(p, {"x", "y"});
    for (int i = 0; i < 20; ++i, ++cases) {
      // constructed members of inhomogeneous ideals
      const auto gens = random_gens(rng, r2, 2);
      Polynomial f = Polynomial::constant(r2, 0);
      for (const auto& g : gens) f = f + oracle::random_poly(rng, r2, 2, 2) * g;
      CHECK(oracle::macaulay_member(f, gens, 4));
      CHECK(ideal_membership(f, Ideal(r2, gens)));
      // a random element: oracle membership at degree 4 implies membership
      const Polynomial g = oracle::random_poly(rng, r2, 3, 4);
      if (oracle::macaulay_member(g, gens, 4)) CHECK(ideal_membership(g, Ideal(r2, gens)));
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("quotient length matches the truncated Macaulay corank") {
  std::mt19937_64 rng(24);
  int cases = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (const auto& names : {std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x", "y", "z"}}) {
      auto r = make_ring(p, names);
      const std::uint32_t q = names.size() == 2 ? 4 : 3;
      for (int i = 0; i < 20; ++i, ++cases) {
        std::vector<Polynomial> gens = random_gens(rng, r, 3);
        for (std::size_t v = 0; v < names.size(); ++v) {
          Monomial m = Monomial::from_exponents(std::vector<Monomial::Exponent>(names.size(), 0));
          m.set(v, q);
          gens.push_back(Polynomial::monomial(r, m));
        }
        const auto len = quotient_length(Ideal(r, gens));
        REQUIRE(len.has_value());
        CHECK(*len == oracle::box_quotient_length(gens, q));
      }
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("dimension does not grow when generators are added") {
  std::mt19937_64 rng(25);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int i = 0; i < 35; ++i) {
      std::vector<Polynomial> gens;
      std::size_t last = 3;
      for (int k = 0; k < 3; ++k) {
        gens.push_back(oracle::random_poly(rng, r, 2, 3));
        const Ideal ideal(r, gens);
        if (ideal.is_unit()) break;
        const std::size_t d = krull_dimension(ideal);
        CHECK(d <= last);
        last = d;
      }
    }
  }
}

TEST_CASE("resource caps throw instead of truncating") {
  auto r = make_ring(3, {"x", "y", "z"});
  GroebnerLimits tight;
  tight.max_pairs = 1;
  CHECK_THROWS_AS(buchberger(r, {P(r, "x^2 + y*z"), P(r, "y^2 + x*z"), P(r, "z^2 + x*y")}, tight), ResourceLimit);
}

}
