#include "fsig/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fsig/errors.hpp"

namespace fsig {
namespace {

void sort_desc(const TermOrder& order, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& field = ring_->field();
  for (auto& t : terms) {
    if (t.monomial.size() != ring_->nvars()) throw std::invalid_argument("monomial arity mismatch");
    t.coeff %= field.characteristic();
  }
  sort_desc(ring_->order(), terms);
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = field.add(terms_.back().coeff, t.coeff);
    } else {
      if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
      terms_.push_back(t);
    }
  }
  if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  const Coeff v = ring->field().reduce(c);
  Monomial one(ring->nvars());
  if (v == 0) return Polynomial(std::move(ring));
  return from_sorted(std::move(ring), {Term{one, v}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  c %= ring->characteristic();
  if (c == 0) return Polynomial(std::move(ring));
  return from_sorted(std::move(ring), {Term{m, c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return monomial(std::move(ring), m, 1);
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

namespace detail {

std::vector<Term> merge_scaled(const TermOrder& order, const PrimeField& field,
                        const std::vector<Term>& a, std::size_t a_start, const std::vector<Term>& b,
                        std::size_t b_start, const Monomial* shift, Coeff c) {
  std::vector<Term> out;
  out.reserve(a.size() - a_start + b.size() - b_start);
  std::size_t i = a_start, j = b_start;
  auto shifted = [&](std::size_t k) {
    return Term{shift ? b[k].monomial * *shift : b[k].monomial, field.mul(c, b[k].coeff)};
  };
  std::optional<Term> bj;
  if (j < b.size()) bj = shifted(j);
  while (i < a.size() && bj) {
    const int cmp = order.compare(a[i].monomial, bj->monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      if (bj->coeff != 0) out.push_back(*bj);
      ++j;
      bj = j < b.size() ? std::optional<Term>(shifted(j)) : std::nullopt;
    } else {
      const Coeff s = field.add(a[i].coeff, bj->coeff);
      if (s != 0) out.push_back(Term{a[i].monomial, s});
      ++i;
      ++j;
      bj = j < b.size() ? std::optional<Term>(shifted(j)) : std::nullopt;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (bj) {
    if (bj->coeff != 0) out.push_back(*bj);
    ++j;
    bj = j < b.size() ? std::optional<Term>(shifted(j)) : std::nullopt;
  }
  return out;
}

}  // namespace detail

using detail::merge_scaled;

Polynomial add_scaled_shift(const Polynomial& f, const Polynomial& g, const Monomial& m, Coeff c) {
  const Ring& r = *f.ring();
  return Polynomial::from_sorted(f.ring(), merge_scaled(r.order(), r.field(), f.terms(), 0, g.terms(), 0,
                                                 m.is_one() ? nullptr : &m, c));
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  return from_sorted(ring_, merge_scaled(ring_->order(), ring_->field(), terms_, 0, g.terms_, 0, nullptr, 1));
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  const Coeff minus_one = ring_->field().neg(1);
  return from_sorted(ring_,
                     merge_scaled(ring_->order(), ring_->field(), terms_, 0, g.terms_, 0, nullptr, minus_one));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::scaled(Coeff c) const {
  const auto& field = ring_->field();
  c %= field.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field.mul(t.coeff, c);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  const auto& field = ring_->field();
  c %= field.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.monomial * m, field.mul(t.coeff, c)});
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const Polynomial& small = size() <= g.size() ? *this : g;
  const Polynomial& large = size() <= g.size() ? g : *this;
  if (small.size() == 1) return large.times(small.terms_[0].monomial, small.terms_[0].coeff);
  const auto& field = ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(small.size() * large.size());
  for (const auto& a : small.terms_) {
    for (const auto& b : large.terms_) {
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, 0);
      it->second = field.add(it->second, field.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, c});
  }
  sort_desc(ring_->order(), out);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  if (e == 0) throw std::invalid_argument("Frobenius exponent must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > UINT32_MAX) throw std::overflow_error("p^e exceeds exponent range");
    q *= ring_->characteristic();
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.monomial.scaled(q), t.coeff});
  // Scaling all exponents by a common factor preserves every admissible order.
  return from_sorted(ring_, std::move(out));
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& field = ring_->field();
  const Coeff inv_lc = field.inv(g.leading_coeff());
  std::vector<Term> quotient;
  Polynomial rem = *this;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!g.leading_monomial().divides(lt.monomial)) return std::nullopt;
    const Monomial m = lt.monomial / g.leading_monomial();
    const Coeff c = field.mul(lt.coeff, inv_lc);
    quotient.push_back(Term{m, c});
    rem = add_scaled_shift(rem, g, m, field.neg(c));
  }
  return from_sorted(ring_, std::move(quotient));
}

Polynomial Polynomial::truncated_below(std::uint64_t bound) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    bool keep = true;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] >= bound) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(t);
  }
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (target->nvars() != ring_->nvars() || target->characteristic() != ring_->characteristic()) {
    throw RingMismatch("in_ring: incompatible target ring");
  }
  return Polynomial(std::move(target), terms_);
}

Polynomial Polynomial::remapped(RingPtr target, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->nvars() || target->characteristic() != ring_->characteristic()) {
    throw RingMismatch("remapped: incompatible target ring");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    out.push_back(Term{m, t.coeff});
  }
  return Polynomial(std::move(target), std::move(out));
}

bool Polynomial::operator==(const Polynomial& g) const {
  return same_ring(ring_, g.ring_) && terms_ == g.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->names();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    if (k > 0) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff) + "*" + mono;
    }
  }
  return out;
}

}  // namespace fsig
