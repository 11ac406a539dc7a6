#include "fsig/ideals.hpp"

#include <algorithm>
#include <stdexcept>

#include "fsig/errors.hpp"

namespace fsig {
namespace {

void push_unique(std::vector<Polynomial>& gens, Polynomial f) {
  if (f.is_zero()) return;
  f = f.monic();
  if (std::find(gens.begin(), gens.end(), f) == gens.end()) gens.push_back(std::move(f));
}

// Monomial ideal generators with redundant (divisible) ones removed.
std::vector<Polynomial> minimize_monomial(const RingPtr& ring, std::vector<Monomial> ms) {
  const TermOrder& order = ring->order();
  std::sort(ms.begin(), ms.end(), [&order](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.compare(a, b) < 0;
  });
  std::vector<Monomial> keep;
  for (const auto& m : ms) {
    if (std::none_of(keep.begin(), keep.end(), [&m](const Monomial& k) { return k.divides(m); })) {
      keep.push_back(m);
    }
  }
  std::vector<Polynomial> out;
  for (const auto& m : keep) out.push_back(Polynomial::monomial(ring, m));
  return out;
}

}  // namespace

Ideal bracket_power(const Ideal& ideal, unsigned e) {
  if (e == 0) throw std::invalid_argument("bracket power exponent must be positive");
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius_power(e));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& ideal, std::uint64_t n) {
  const RingPtr& ring = ideal.ring();
  if (n == 0) return Ideal::unit(ring);
  if (ideal.is_zero()) return Ideal::zero(ring);
  if (ideal.is_principal()) return Ideal(ring, {ideal.generators()[0].pow(n)});
  if (ideal.is_monomial()) {
    // n-fold products of monomial generators, minimized as we go
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.leading_monomial());
    std::vector<Polynomial> base = minimize_monomial(ring, gens);
    std::vector<Monomial> cur{Monomial(ring->nvars())};
    for (std::uint64_t k = 0; k < n; ++k) {
      std::vector<Monomial> next;
      for (const auto& a : cur) {
        for (const auto& b : base) next.push_back(a * b.leading_monomial());
      }
      std::vector<Polynomial> mins = minimize_monomial(ring, std::move(next));
      cur.clear();
      for (const auto& p : mins) cur.push_back(p.leading_monomial());
    }
    return Ideal(ring, minimize_monomial(ring, cur));
  }
  // Multisets of generators of size n; each product computed from cached powers.
  const auto& g = ideal.generators();
  const std::size_t r = g.size();
  std::vector<std::vector<Polynomial>> powers(r);
  for (std::size_t i = 0; i < r; ++i) {
    powers[i].push_back(Polynomial::constant(ring, 1));
    for (std::uint64_t k = 1; k <= n; ++k) powers[i].push_back(powers[i].back() * g[i]);
  }
  std::vector<Polynomial> out;
  std::vector<std::uint64_t> exps(r, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left, const Polynomial& acc) -> void {
    if (i + 1 == r) {
      push_unique(out, acc * powers[i][left]);
      return;
    }
    for (std::uint64_t k = 0; k <= left; ++k) self(self, i + 1, left - k, acc * powers[i][k]);
  };
  rec(rec, 0, n, Polynomial::constant(ring, 1));
  return Ideal(ring, std::move(out));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) push_unique(gens, f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<Monomial> gens;
    for (const auto& f : a.generators()) {
      for (const auto& g : b.generators()) {
        gens.push_back(Monomial::lcm(f.leading_monomial(), g.leading_monomial()));
      }
    }
    return Ideal(ring, minimize_monomial(ring, gens));
  }
  return intersection_by_elimination(a, b);
}

Ideal intersection_by_elimination(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (ring->nvars() >= kMaxVariables) {
    throw std::invalid_argument("intersection needs a free variable slot for elimination");
  }
  // t first, eliminated by a block order; the inner order matches the ring's.
  std::vector<std::string> names{"_t"};
  for (const auto& n : ring->names()) names.push_back(n);
  const TermOrder::Kind inner =
      ring->order().kind == TermOrder::Kind::block ? ring->order().inner : ring->order().kind;
  RingPtr ext = make_ring(ring->characteristic(), names, TermOrder::block(1, inner));
  std::vector<std::size_t> shift(ring->nvars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.remapped(ext, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.remapped(ext, shift));
  const GroebnerBasis gb = buchberger(ext, gens);

  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool has_t = false;
    for (const auto& term : g.terms()) {
      if (term.monomial[0] != 0) {
        has_t = true;
        break;
      }
    }
    if (has_t) continue;
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      Monomial m(ring->nvars());
      for (std::size_t i = 0; i < ring->nvars(); ++i) m.set(i, term.monomial[i + 1]);
      terms.push_back(Term{m, term.coeff});
    }
    out.push_back(Polynomial(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(out));
}

Ideal colon_by_elimination(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  require_same_ring(ideal.ring(), f.ring());
  const Ideal meet = intersection_by_elimination(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = g.exact_divide(f);
    if (!q) throw InternalError("colon: element of I cap <f> not divisible by f: " + g.to_string());
    gens.push_back(std::move(*q));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  require_same_ring(ideal.ring(), f.ring());
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero()) return Ideal::zero(ring);
  if (f.is_constant()) return ideal;
  if (ideal.is_principal()) {
    // S is a domain: (<g> : <f>) = <g/f> whenever f | g.
    if (auto q = ideal.generators()[0].exact_divide(f)) return Ideal(ring, {*q});
  }
  // (I : f) only depends on f modulo I
  const Polynomial r = ideal.groebner().normal_form(f);
  if (r.is_zero()) return Ideal::unit(ring);
  if (r != f) return colon(ideal, r);
  if (ideal.is_monomial() && f.is_monomial()) {
    const Monomial& m = f.leading_monomial();
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
      const Monomial& u = g.leading_monomial();
      gens.push_back(u / Monomial::gcd(u, m));
    }
    return Ideal(ring, minimize_monomial(ring, gens));
  }
  return colon_by_elimination(ideal, f);
}

Ideal colon(const Ideal& ideal, const Ideal& divisor) {
  require_same_ring(ideal.ring(), divisor.ring());
  if (divisor.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& f : divisor.generators()) {
    Ideal c = colon(ideal, f);
    acc = acc ? intersection(*acc, c) : c;
  }
  return *acc;
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.groebner() == b.groebner();
}

}  // namespace fsig
