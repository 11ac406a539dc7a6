#include "fsig/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>

#include "fsig/errors.hpp"

namespace fsig {
namespace {

std::mutex g_limits_mutex;
GroebnerLimits g_limits;

struct Divisor {
  const Polynomial* poly;
  Monomial lm;
  std::uint32_t mask;
};

std::vector<Divisor> make_divisors(const std::vector<const Polynomial*>& polys) {
  std::vector<Divisor> out;
  out.reserve(polys.size());
  for (const Polynomial* p : polys) {
    if (p->is_zero()) continue;
    out.push_back({p, p->leading_monomial(), p->leading_monomial().support_mask()});
  }
  return out;
}

const Divisor* find_divisor(const std::vector<Divisor>& divs, const Monomial& m) {
  const std::uint32_t mask = m.support_mask();
  for (const auto& d : divs) {
    if ((d.mask & ~mask) == 0 && d.lm.divides(m)) return &d;
  }
  return nullptr;
}

// Full reduction; divisors need not be monic.
Polynomial reduce_full(const Polynomial& f, const std::vector<Divisor>& divs) {
  const Ring& ring = *f.ring();
  const auto& field = ring.field();
  std::vector<Term> work = f.terms();
  std::vector<Term> rem;
  std::size_t i = 0;
  while (i < work.size()) {
    const Term t = work[i];
    const Divisor* d = find_divisor(divs, t.monomial);
    if (d == nullptr) {
      rem.push_back(t);
      ++i;
      continue;
    }
    const Coeff lc = d->poly->leading_coeff();
    const Coeff c = lc == 1 ? t.coeff : field.mul(t.coeff, field.inv(lc));
    const Monomial shift = t.monomial / d->lm;
    work = detail::merge_scaled(ring.order(), field, work, i + 1, d->poly->terms(), 1,
                                shift.is_one() ? nullptr : &shift, field.neg(c));
    i = 0;
  }
  return Polynomial::from_sorted(f.ring(), std::move(rem));
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
  // f, g monic
  const Monomial mf = lcm / f.leading_monomial();
  const Monomial mg = lcm / g.leading_monomial();
  const auto& field = f.ring()->field();
  const Ring& ring = *f.ring();
  // drop the cancelling leading terms
  std::vector<Term> a;
  a.reserve(f.size());
  for (std::size_t k = 1; k < f.size(); ++k) a.push_back(Term{f.terms()[k].monomial * mf, f.terms()[k].coeff});
  return Polynomial::from_sorted(
      f.ring(), detail::merge_scaled(ring.order(), field, a, 0, g.terms(), 1,
                                     mg.is_one() ? nullptr : &mg, field.neg(1)));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(const RingPtr& ring, const GroebnerLimits& limits, GroebnerStats* stats)
      : ring_(ring), order_(ring->order()), limits_(limits), stats_(stats) {}

  GroebnerBasis run(const std::vector<Polynomial>& gens) {
    for (const auto& f : gens) {
      require_same_ring(ring_, f.ring());
      Polynomial h = reduce_full(f, current_divisors());
      if (!h.is_zero()) insert(h.monic());
    }
    while (!pairs_.empty()) {
      if (++processed_ > limits_.max_pairs) {
        throw ResourceLimit("Groebner basis: pair limit of " + std::to_string(limits_.max_pairs) +
                            " exceeded");
      }
      const Pair pr = pop_min();
      Polynomial s = spoly(polys_[pr.i], polys_[pr.j], pr.lcm);
      Polynomial h = reduce_full(s, current_divisors());
      if (h.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      insert(h.monic());
    }
    if (stats_) stats_->pairs_processed += processed_;
    return finish();
  }

 private:
  std::vector<Divisor> current_divisors() const {
    std::vector<const Polynomial*> ptrs;
    for (std::size_t k : basis_) ptrs.push_back(&polys_[k]);
    return make_divisors(ptrs);
  }

  Pair pop_min() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const int c = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
      if (c < 0) best = k;
    }
    Pair out = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return out;
  }

  // Gebauer-Moeller update with h appended to polys_.
  void insert(Polynomial h) {
    if (polys_.size() >= limits_.max_basis) {
      throw ResourceLimit("Groebner basis: basis size limit of " + std::to_string(limits_.max_basis) +
                          " exceeded");
    }
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<std::size_t> c = basis_;
    std::vector<Monomial> c_lcm;
    c_lcm.reserve(c.size());
    for (std::size_t g : c) c_lcm.push_back(Monomial::lcm(lh, polys_[g].leading_monomial()));

    std::vector<std::size_t> d;
    std::vector<Monomial> d_lcm;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Monomial& l1 = c_lcm[k];
      bool keep = Monomial::coprime(lh, polys_[c[k]].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < c.size() && keep; ++r) {
          if (c_lcm[r].divides(l1)) keep = false;
        }
        for (std::size_t r = 0; r < d.size() && keep; ++r) {
          if (d_lcm[r].divides(l1)) keep = false;
        }
      }
      if (keep) {
        d.push_back(c[k]);
        d_lcm.push_back(l1);
      }
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (auto& pr : pairs_) {
      const bool drop = lh.divides(pr.lcm) &&
                        !(Monomial::lcm(polys_[pr.i].leading_monomial(), lh) == pr.lcm) &&
                        !(Monomial::lcm(polys_[pr.j].leading_monomial(), lh) == pr.lcm);
      if (!drop) kept.push_back(std::move(pr));
    }
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (!Monomial::coprime(lh, polys_[d[k]].leading_monomial())) {
        kept.push_back(Pair{d[k], hi, d_lcm[k]});
      }
    }
    pairs_ = std::move(kept);

    std::vector<std::size_t> next;
    for (std::size_t g : basis_) {
      if (!lh.divides(polys_[g].leading_monomial())) next.push_back(g);
    }
    next.push_back(hi);
    basis_ = std::move(next);
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> minimal;
    for (std::size_t a : basis_) {
      bool redundant = false;
      for (std::size_t b : basis_) {
        if (a == b) continue;
        const Monomial& la = polys_[a].leading_monomial();
        const Monomial& lb = polys_[b].leading_monomial();
        if (lb.divides(la) && (!(la == lb) || b < a)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(polys_[a]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t r = 0; r < minimal.size(); ++r) {
        if (r != k) others.push_back(&minimal[r]);
      }
      const Polynomial& g = minimal[k];
      Polynomial tail = Polynomial::from_sorted(
          g.ring(), std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
      Polynomial rt = reduce_full(tail, make_divisors(others));
      std::vector<Term> terms;
      terms.reserve(rt.size() + 1);
      terms.push_back(g.leading_term());
      terms.insert(terms.end(), rt.terms().begin(), rt.terms().end());
      reduced.push_back(Polynomial::from_sorted(g.ring(), std::move(terms)));
    }
    std::sort(reduced.begin(), reduced.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis(ring_, std::move(reduced), true);
  }

  RingPtr ring_;
  TermOrder order_;
  GroebnerLimits limits_;
  GroebnerStats* stats_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
};

}  // namespace

GroebnerLimits default_groebner_limits() {
  std::lock_guard lock(g_limits_mutex);
  return g_limits;
}

void set_default_groebner_limits(const GroebnerLimits& limits) {
  std::lock_guard lock(g_limits_mutex);
  g_limits = limits;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced)
    : ring_(std::move(ring)), elements_(std::move(elements)), reduced_(reduced) {}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : elements_) ptrs.push_back(&g);
  return reduce_full(f, make_divisors(ptrs));
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
  return same_ring(ring_, other.ring_) && elements_ == other.elements_;
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         const GroebnerLimits& limits, GroebnerStats* stats) {
  return Engine(ring, limits, stats).run(gens);
}

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : divisors) ptrs.push_back(&g);
  return reduce_full(f, make_divisors(ptrs));
}

struct Ideal::Cache {
  std::mutex mutex;
  std::optional<GroebnerBasis> gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

const GroebnerBasis& Ideal::groebner() const { return groebner(default_groebner_limits()); }

const GroebnerBasis& Ideal::groebner(const GroebnerLimits& limits) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->gb) cache_->gb = buchberger(ring_, generators_, limits);
  return *cache_->gb;
}

bool Ideal::has_cached_groebner() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->gb.has_value();
}

bool Ideal::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  if (f.is_zero()) return true;
  return groebner().contains(f);
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

std::string Ideal::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k > 0) out += ", ";
    out += generators_[k].to_string();
  }
  return out + "]";
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

std::optional<BigInt> quotient_length(const Ideal& ideal) {
  if (ideal.is_zero()) {
    if (ideal.ring()->nvars() == 0) return BigInt(1);
    return std::nullopt;
  }
  return quotient_length(ideal.groebner());
}

std::optional<BigInt> quotient_length(const GroebnerBasis& gb) {
  if (gb.is_unit()) return BigInt(0);
  const std::size_t n = gb.ring()->nvars();
  const auto lms = gb.leading_monomials();
  std::vector<Monomial::Exponent> bound(n, 0);
  for (const auto& m : lms) {
    const auto mask = m.support_mask();
    if (mask != 0 && (mask & (mask - 1)) == 0) {
      std::size_t i = static_cast<std::size_t>(__builtin_ctz(mask));
      if (bound[i] == 0 || m[i] < bound[i]) bound[i] = m[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] == 0) return std::nullopt;
  }
  std::vector<Divisor> divs;
  for (const auto& m : lms) divs.push_back({nullptr, m, m.support_mask()});
  // Standard monomials form an order ideal: extend one variable at a time and
  // stop as soon as the partial monomial (rest zero) is a leading-term multiple.
  std::uint64_t count = 0;
  Monomial cur(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (Monomial::Exponent e = 0; e < bound[i]; ++e) {
      cur.set(i, e);
      if (find_divisor(divs, cur) != nullptr) break;
      self(self, i + 1);
    }
    cur.set(i, 0);
  };
  rec(rec, 0);
  return BigInt(static_cast<unsigned long>(count));
}

std::size_t krull_dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  if (ideal.is_zero()) return n;
  const GroebnerBasis& gb = ideal.groebner();
  if (gb.is_unit()) throw std::invalid_argument("Krull dimension of the unit ideal is undefined");
  std::vector<std::uint32_t> masks;
  for (const auto& m : gb.leading_monomials()) masks.push_back(m.support_mask());
  std::size_t best = 0;
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  for (std::uint32_t u = 0; u <= full; ++u) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(u));
    if (size <= best) continue;
    const bool independent =
        std::none_of(masks.begin(), masks.end(), [u](std::uint32_t m) { return (m & ~u) == 0; });
    if (independent) best = size;
    if (u == full) break;
  }
  return best;
}

}  // namespace fsig
