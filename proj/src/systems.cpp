#include "fsig/systems.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fsig/errors.hpp"
#include "fsig/ideals.hpp"

namespace fsig {

Exponent::Exponent(Rational t) : t_(std::move(t)) {
  t_.canonicalize();
  if (t_ < 0) throw std::invalid_argument("exponent t must be nonnegative");
}

BigInt Exponent::exact_at(std::uint32_t p, unsigned e, CeilingConvention c) const {
  BigInt q = ipow(p, e);
  if (c == CeilingConvention::p_minus_one) q -= 1;
  return ceil(Rational(t_ * Rational(q)));
}

std::uint64_t Exponent::at(std::uint32_t p, unsigned e, CeilingConvention c) const {
  const BigInt v = exact_at(p, e, c);
  if (!v.fits_ulong_p()) throw std::overflow_error("ideal power exponent exceeds 64 bits");
  return v.get_ui();
}

struct FGradedSystem::Impl {
  Kind kind;
  RingPtr ring;
  std::optional<Ideal> ideal;  // J or a
  std::optional<Exponent> t;
  CeilingConvention convention = CeilingConvention::p_minus_one;
  std::vector<FGradedSystem> factors;
  std::vector<Ideal> levels;

  std::mutex mutex;
  std::map<unsigned, std::shared_ptr<const Ideal>> memo;
};

namespace {

std::string rational_text(const Rational& r) { return to_string(r); }

}  // namespace

FGradedSystem FGradedSystem::quotient(Ideal j) {
  if (j.is_zero()) throw std::invalid_argument("quotient system needs a nonzero ideal J");
  if (j.is_unit()) throw std::invalid_argument("quotient system needs a proper ideal J");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::quotient;
  impl->ring = j.ring();
  impl->ideal = std::move(j);
  return FGradedSystem(std::move(impl));
}

FGradedSystem FGradedSystem::pair(Ideal a, Rational t, CeilingConvention convention) {
  if (a.is_zero()) throw std::invalid_argument("pair system needs a nonzero ideal a");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::pair;
  impl->ring = a.ring();
  impl->t = Exponent(std::move(t));
  impl->ideal = std::move(a);
  impl->convention = convention;
  return FGradedSystem(std::move(impl));
}

FGradedSystem FGradedSystem::product(std::vector<FGradedSystem> factors) {
  if (factors.empty()) throw std::invalid_argument("product system needs at least one factor");
  for (const auto& f : factors) require_same_ring(factors.front().ring(), f.ring());
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::product;
  impl->ring = factors.front().ring();
  impl->factors = std::move(factors);
  return FGradedSystem(std::move(impl));
}

FGradedSystem FGradedSystem::explicit_sequence(RingPtr ring, std::vector<Ideal> levels) {
  for (const auto& l : levels) require_same_ring(ring, l.ring());
  if (std::all_of(levels.begin(), levels.end(), [](const Ideal& i) { return i.is_zero(); })) {
    throw std::invalid_argument("some b_e must be nonzero");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::explicit_sequence;
  impl->ring = std::move(ring);
  impl->levels = std::move(levels);
  return FGradedSystem(std::move(impl));
}

FGradedSystem::Kind FGradedSystem::kind() const { return impl_->kind; }
const RingPtr& FGradedSystem::ring() const { return impl_->ring; }

const Ideal& FGradedSystem::quotient_ideal() const {
  if (impl_->kind != Kind::quotient) throw std::logic_error("not a quotient system");
  return *impl_->ideal;
}
const Ideal& FGradedSystem::pair_ideal() const {
  if (impl_->kind != Kind::pair) throw std::logic_error("not a pair system");
  return *impl_->ideal;
}
const Exponent& FGradedSystem::pair_exponent() const {
  if (impl_->kind != Kind::pair) throw std::logic_error("not a pair system");
  return *impl_->t;
}
CeilingConvention FGradedSystem::convention() const { return impl_->convention; }
const std::vector<FGradedSystem>& FGradedSystem::factors() const { return impl_->factors; }

const Ideal& FGradedSystem::b(unsigned e) const {
  {
    std::lock_guard lock(impl_->mutex);
    if (auto it = impl_->memo.find(e); it != impl_->memo.end()) return *it->second;
  }
  // Computed outside the lock; a racing duplicate yields an equal ideal and
  // the first stored value wins.
  std::shared_ptr<const Ideal> value;
  const RingPtr& ring = impl_->ring;
  if (e == 0) {
    value = std::make_shared<const Ideal>(Ideal::unit(ring));
  } else {
    switch (impl_->kind) {
      case Kind::quotient: {
        const Ideal& j = *impl_->ideal;
        value = std::make_shared<const Ideal>(colon(bracket_power(j, e), j));
        break;
      }
      case Kind::pair: {
        const auto k = impl_->t->at(ring->characteristic(), e, impl_->convention);
        value = std::make_shared<const Ideal>(ideal_power(*impl_->ideal, k));
        break;
      }
      case Kind::product: {
        Ideal acc = impl_->factors.front().b(e);
        for (std::size_t i = 1; i < impl_->factors.size(); ++i) {
          acc = ideal_product(acc, impl_->factors[i].b(e));
        }
        value = std::make_shared<const Ideal>(std::move(acc));
        break;
      }
      case Kind::explicit_sequence:
        if (e > impl_->levels.size()) {
          throw std::out_of_range("explicit system defines b_e only up to e = " +
                                  std::to_string(impl_->levels.size()));
        }
        value = std::make_shared<const Ideal>(impl_->levels[e - 1]);
        break;
    }
  }
  std::lock_guard lock(impl_->mutex);
  auto [it, inserted] = impl_->memo.emplace(e, std::move(value));
  return *it->second;
}

std::size_t FGradedSystem::normalization_dimension() const {
  switch (impl_->kind) {
    case Kind::quotient:
      return krull_dimension(*impl_->ideal);
    case Kind::pair:
    case Kind::explicit_sequence:
      return impl_->ring->nvars();
    case Kind::product: {
      std::size_t d = impl_->ring->nvars();
      for (const auto& f : impl_->factors) d = std::min(d, f.normalization_dimension());
      return d;
    }
  }
  return impl_->ring->nvars();
}

Ideal FGradedSystem::defining_ideal() const {
  switch (impl_->kind) {
    case Kind::quotient:
      return *impl_->ideal;
    case Kind::product: {
      Ideal acc = Ideal::zero(impl_->ring);
      for (const auto& f : impl_->factors) acc = ideal_sum(acc, f.defining_ideal());
      return acc;
    }
    default:
      return Ideal::zero(impl_->ring);
  }
}

std::string FGradedSystem::describe() const {
  switch (impl_->kind) {
    case Kind::quotient:
      return "quotient{J=" + impl_->ideal->to_string() + "}";
    case Kind::pair: {
      std::string s = "pair{a=" + impl_->ideal->to_string() + ", t=" + rational_text(impl_->t->value());
      if (impl_->convention == CeilingConvention::p_power) s += ", ceiling=pe";
      return s + "}";
    }
    case Kind::product: {
      std::string s = "product[";
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        if (i > 0) s += ", ";
        s += impl_->factors[i].describe();
      }
      return s + "]";
    }
    case Kind::explicit_sequence: {
      std::string s = "explicit[";
      for (std::size_t i = 0; i < impl_->levels.size(); ++i) {
        if (i > 0) s += ", ";
        s += impl_->levels[i].to_string();
      }
      return s + "]";
    }
  }
  return "?";
}

namespace {

class SystemParser {
 public:
  SystemParser(std::string_view text, const RingPtr& ring, CeilingConvention convention,
               std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), convention_(convention), line_(line), offset_(offset) {}

  FGradedSystem parse() {
    FGradedSystem sys = system();
    skip_ws();
    if (pos_ < text_.size()) fail("trailing text after system expression");
    return sys;
  }

 private:
  FGradedSystem system() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string kw = ident();
    if (kw == "quotient") {
      expect('{');
      expect_key("J");
      expect('=');
      std::vector<Polynomial> gens = poly_list();
      expect('}');
      Ideal j(ring_, std::move(gens));
      if (j.is_zero()) fail_at(start, "quotient system: J is the zero ideal");
      try {
        return FGradedSystem::quotient(std::move(j));
      } catch (const std::invalid_argument& err) {
        fail_at(start, err.what());
      }
    }
    if (kw == "pair") {
      expect('{');
      expect_key("a");
      expect('=');
      std::vector<Polynomial> gens = poly_list();
      expect(',');
      expect_key("t");
      expect('=');
      skip_ws();
      const std::size_t tpos = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '/' || text_[pos_] == '-' || text_[pos_] == '+' ||
                                     text_[pos_] == ' ')) {
        ++pos_;
      }
      Rational t;
      try {
        t = parse_rational(text_.substr(tpos, pos_ - tpos));
      } catch (const std::invalid_argument& err) {
        fail_at(tpos, err.what());
      }
      if (t < 0) fail_at(tpos, "t must be nonnegative");
      expect('}');
      Ideal a(ring_, std::move(gens));
      if (a.is_zero()) fail_at(start, "pair system: a is the zero ideal");
      return FGradedSystem::pair(std::move(a), t, convention_);
    }
    if (kw == "product") {
      expect('[');
      std::vector<FGradedSystem> factors{system()};
      for (;;) {
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          factors.push_back(system());
          continue;
        }
        break;
      }
      expect(']');
      return FGradedSystem::product(std::move(factors));
    }
    fail_at(start, kw.empty() ? "expected system expression" : "unknown system kind '" + kw + "'");
  }

  std::vector<Polynomial> poly_list() {
    expect('[');
    std::vector<Polynomial> out;
    for (;;) {
      skip_ws();
      const std::size_t start = pos_;
      int depth = 0;
      while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == ']')) break;
        ++pos_;
      }
      if (pos_ >= text_.size()) fail("unterminated generator list");
      std::string_view piece = text_.substr(start, pos_ - start);
      while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
      if (piece.empty()) {
        if (text_[pos_] == ']' && out.empty()) {
          ++pos_;
          return out;
        }
        fail_at(start, "empty generator");
      }
      out.push_back(parse_polynomial(piece, ring_, line_, offset_ + start));
      const char c = text_[pos_++];
      if (c == ']') return out;
    }
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_key(const std::string& key) {
    const std::size_t start = pos_;
    const std::string got = ident();
    if (got != key) fail_at(start, "expected '" + key + "'");
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(what, line_, offset_ + pos + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  CeilingConvention convention_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

FGradedSystem parse_system(std::string_view text, const RingPtr& ring, CeilingConvention convention,
                           std::size_t line, std::size_t column_offset) {
  return SystemParser(text, ring, convention, line, column_offset).parse();
}

GradedCheck verify_graded(const FGradedSystem& sys, unsigned emax) {
  if (emax < 2) throw std::invalid_argument("verify_graded needs emax >= 2");
  for (unsigned total = 2; total <= emax; ++total) {
    for (unsigned e = 1; e < total; ++e) {
      const unsigned l = total - e;
      const Ideal lifted = bracket_power(sys.b(e), l);
      const Ideal& bl = sys.b(l);
      const Ideal& target = sys.b(total);
      for (const auto& f : lifted.generators()) {
        for (const auto& g : bl.generators()) {
          Polynomial prod = f * g;
          if (!target.contains(prod)) return GradedCheck{false, e, l, std::move(prod)};
        }
      }
    }
  }
  return GradedCheck{};
}

}  // namespace fsig
