#include "fsig/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fsig/errors.hpp"

namespace fsig {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
  size_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<Exponent> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (Exponent v : exps) set(i++, v);
}

Monomial Monomial::from_exponents(const std::vector<Exponent>& exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

void Monomial::set(std::size_t i, Exponent v) {
  degree_ = degree_ - e_[i] + v;
  e_[i] = v;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    const std::uint64_t s = std::uint64_t{e_[i]} + other.e_[i];
    if (s > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<Exponent>(s);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    const std::uint64_t s = std::uint64_t{e_[i]} * k;
    if (k != 0 && s / k != e_[i]) throw std::overflow_error("monomial exponent overflow");
    if (s > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<Exponent>(s);
    r.degree_ += s;
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) r.e_[i] = e_[i] - other.e_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) r.set(i, std::max(a.e_[i], b.e_[i]));
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) r.set(i, std::min(a.e_[i], b.e_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  return (a.support_mask() & b.support_mask()) == 0;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (e_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

int cmp_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
              TermOrder::Kind kind) {
  if (kind == TermOrder::Kind::lex) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::string kind_name(TermOrder::Kind k) {
  switch (k) {
    case TermOrder::Kind::degrevlex:
      return "degrevlex";
    case TermOrder::Kind::lex:
      return "lex";
    case TermOrder::Kind::block:
      return "block";
  }
  return "?";
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind) {
    case Kind::degrevlex: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    case Kind::lex:
      return cmp_range(a, b, 0, n, Kind::lex);
    case Kind::block: {
      const std::size_t k = std::min(block_size, n);
      if (int c = cmp_range(a, b, 0, k, inner); c != 0) return c;
      return cmp_range(a, b, k, n, inner);
    }
  }
  return 0;
}

std::string TermOrder::name() const {
  if (kind == Kind::block) {
    return "block(" + std::to_string(block_size) + "," + kind_name(inner) + ")";
  }
  return kind_name(kind);
}

Ring::Ring(std::uint64_t p, std::vector<std::string> names, TermOrder order)
    : field_(p), names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
  if (order_.kind == TermOrder::Kind::block && order_.inner == TermOrder::Kind::block) {
    throw std::invalid_argument("block order needs a non-block inner order");
  }
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr make_ring(std::uint64_t p, std::vector<std::string> names, TermOrder order) {
  return std::make_shared<const Ring>(p, std::move(names), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("operands belong to different rings");
}

}  // namespace fsig
