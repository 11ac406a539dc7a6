#include "fsig/signature.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fsig/errors.hpp"
#include "fsig/ideals.hpp"

namespace fsig {
namespace {

std::uint64_t power_u64(std::uint64_t base, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > UINT32_MAX / base) throw std::overflow_error("p^e exceeds the exponent range");
    q *= base;
  }
  return q;
}

// Solves the square system m x = rhs exactly; m must be invertible.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw InternalError("singular tail-fit system");
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

Ideal splitting_ideal(const FGradedSystem& sys, unsigned e) {
  if (e == 0) throw std::invalid_argument("splitting ideal needs e >= 1");
  const Ideal frob = bracket_power(Ideal::maximal(sys.ring()), e);
  const Ideal& b = sys.b(e);
  if (b.is_zero()) return Ideal::unit(sys.ring());
  return colon(frob, b);
}

BigInt splitting_number_groebner(const FGradedSystem& sys, unsigned e) {
  const auto len = quotient_length(splitting_ideal(sys, e));
  // I_e contains n^[p^e], so the quotient is always finite.
  if (!len) throw InternalError("splitting ideal is not primary to the origin");
  return *len;
}

BigInt splitting_number_linear(const FGradedSystem& sys, unsigned e, linalg::RankStrategy strategy) {
  if (e == 0) throw std::invalid_argument("splitting number needs e >= 1");
  const RingPtr& ring = sys.ring();
  const std::size_t n = ring->nvars();
  const std::uint64_t q = power_u64(ring->characteristic(), e);
  std::uint64_t basis = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (basis > kMaxLinearBasis / q) {
      throw ResourceLimit("linear method: box basis p^(e n) exceeds " + std::to_string(kMaxLinearBasis));
    }
    basis *= q;
  }
  // Generators of b_e modulo n^[q], as (mixed-radix offset, exponents, coeff).
  struct Entry {
    std::uint64_t offset;
    std::vector<std::uint32_t> exps;
    Coeff coeff;
  };
  std::vector<std::vector<Entry>> gens;
  for (const auto& f : sys.b(e).generators()) {
    const Polynomial r = f.truncated_below(q);
    if (r.is_zero()) continue;
    std::vector<Entry> entries;
    for (const auto& t : r.terms()) {
      Entry en{0, t.monomial.exponents(), t.coeff};
      std::uint64_t off = 0;
      for (std::size_t i = n; i-- > 0;) off = off * q + en.exps[i];
      en.offset = off;
      entries.push_back(std::move(en));
    }
    gens.push_back(std::move(entries));
  }
  if (gens.empty()) return BigInt(0);

  std::vector<linalg::SparseRow> rows;
  std::vector<std::uint32_t> g(n, 0);
  for (std::uint64_t idx = 0; idx < basis; ++idx) {
    linalg::SparseRow row;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (const auto& en : gens[j]) {
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i) {
          if (g[i] + en.exps[i] >= q) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        // no carries: offsets add
        row.cols.push_back(j * basis + idx + en.offset);
        row.vals.push_back(en.coeff);
      }
    }
    if (!row.empty()) {
      // Columns within a generator block follow term order, not index order.
      std::vector<std::size_t> perm(row.cols.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::sort(perm.begin(), perm.end(), [&row](std::size_t a, std::size_t b) { return row.cols[a] < row.cols[b]; });
      linalg::SparseRow sorted;
      for (auto k : perm) {
        sorted.cols.push_back(row.cols[k]);
        sorted.vals.push_back(row.vals[k]);
      }
      rows.push_back(std::move(sorted));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (++g[i] < q) break;
      g[i] = 0;
    }
  }
  return BigInt(static_cast<unsigned long>(linalg::rank_mod_p(rows, ring->field(), strategy)));
}

BigInt splitting_number(const FGradedSystem& sys, unsigned e, Method method) {
  switch (method) {
    case Method::groebner:
      return splitting_number_groebner(sys, e);
    case Method::linear:
      return splitting_number_linear(sys, e);
    case Method::both: {
      BigInt lin = splitting_number_linear(sys, e);
      BigInt gb = splitting_number_groebner(sys, e);
      if (lin != gb) {
        throw InternalError("splitting number disagreement at e=" + std::to_string(e) +
                            ": linear " + lin.get_str() + " vs groebner " + gb.get_str());
      }
      return lin;
    }
  }
  return BigInt(0);
}

TailFit fit_tail(const std::vector<Rational>& raw, std::uint32_t p) {
  std::vector<Rational> values;
  for (const auto& v : raw) values.push_back(canonical(v));
  if (values.empty()) return TailFit{Rational(0), Rational(1)};
  const std::size_t big_e = values.size();
  if (big_e == 1) return TailFit{values[0], Rational(1)};
  const std::size_t k = std::min<std::size_t>(3, big_e);
  std::vector<std::vector<Rational>> m;
  std::vector<Rational> rhs;
  for (std::size_t e = big_e - k + 1; e <= big_e; ++e) {
    const Rational x(BigInt(1), ipow(p, e));
    std::vector<Rational> row{Rational(1), x};
    if (k == 3) row.push_back(x * x);
    m.push_back(std::move(row));
    rhs.push_back(values[e - 1]);
  }
  const auto sol = solve(std::move(m), std::move(rhs));
  Rational env = abs(sol[1]) / Rational(ipow(p, big_e));
  env.canonicalize();
  return TailFit{sol[0], env};
}

SemigroupData semigroup_data(const std::vector<ReportRow>& rows) {
  SemigroupData out;
  std::uint64_t g = 0;
  for (const auto& r : rows) {
    if (r.a != 0) {
      out.gamma.push_back(r.e);
      g = std::gcd(g, static_cast<std::uint64_t>(r.e));
    }
  }
  if (!out.gamma.empty()) out.index = g;
  return out;
}

SemigroupData semigroup_data(const SplittingReport& report) { return semigroup_data(report.rows); }

SplittingReport signature_sequence(const FGradedSystem& sys, unsigned emax, const SignatureOptions& options) {
  if (emax == 0) throw std::invalid_argument("emax must be at least 1");
  SplittingReport report;
  const RingPtr& ring = sys.ring();
  report.p = ring->characteristic();
  report.vars = ring->names();
  report.system = sys.describe();
  report.d = options.d_override ? *options.d_override : sys.normalization_dimension();
  std::vector<Rational> svals;
  for (unsigned e = 1; e <= emax; ++e) {
    BigInt a;
    try {
      a = splitting_number(sys, e, options.method);
    } catch (const ResourceLimit& err) {
      report.partial = true;
      report.notes.push_back("stopped at e=" + std::to_string(e) + ": " + err.what());
      break;
    } catch (const std::overflow_error& err) {
      report.partial = true;
      report.notes.push_back("stopped at e=" + std::to_string(e) + ": " + err.what());
      break;
    }
    Rational s(a, ipow(report.p, static_cast<std::uint64_t>(e) * report.d));
    s.canonicalize();
    svals.push_back(s);
    report.rows.push_back(ReportRow{e, std::move(a), std::move(s)});
  }
  const TailFit fit = fit_tail(svals, report.p);
  report.estimate = fit.estimate;
  report.error_envelope = fit.envelope;
  report.semigroup = semigroup_data(report.rows);
  report.f_pure = !report.semigroup.gamma.empty();
  return report;
}

FPurity is_f_pure(const FGradedSystem& sys, unsigned emax, Method method) {
  FPurity out;
  for (unsigned e = 1; e <= emax; ++e) {
    out.checked_up_to = e;
    if (splitting_number(sys, e, method) != 0) {
      out.f_pure = true;
      out.witness = e;
      return out;
    }
  }
  return out;
}

CompatibilityResult compatibility_check(const FGradedSystem& sys, const Ideal& c, unsigned emax) {
  require_same_ring(sys.ring(), c.ring());
  CompatibilityResult out;
  if (c.is_zero()) {
    out.steps.push_back({0, true, "zero ideal: compatible vacuously (skipped)"});
    return out;
  }
  for (unsigned e = 1; e <= emax; ++e) {
    const Ideal target = colon(bracket_power(c, e), c);
    const Ideal& b = sys.b(e);
    CompatibilityStep step{e, true, "b_" + std::to_string(e) + " is contained in (C^[p^e] : C)"};
    for (const auto& g : b.generators()) {
      if (!target.contains(g)) {
        step.ok = false;
        step.note = "generator " + g.to_string() + " of b_" + std::to_string(e) +
                    " is not in (C^[p^e] : C)";
        break;
      }
    }
    out.steps.push_back(step);
    if (!step.ok) {
      out.compatible = false;
      return out;
    }
  }
  return out;
}

PrimeCandidate splitting_prime_candidate(const FGradedSystem& sys, unsigned emax,
                                         const CandidateOptions& options) {
  PrimeCandidate out;
  const FPurity fp = is_f_pure(sys, emax, options.method);
  if (!fp.f_pure) {
    out.diagnostics.push_back("not F-pure up to e=" + std::to_string(emax));
    return out;
  }
  const RingPtr& ring = sys.ring();
  const Ideal ie = splitting_ideal(sys, emax);
  const GroebnerBasis& gb = ie.groebner();
  const BigInt q = ipow(ring->characteristic(), emax);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    const BigInt deg(static_cast<unsigned long>(g.total_degree()));
    const bool keep = options.degree_threshold ? deg < BigInt(static_cast<unsigned long>(*options.degree_threshold))
                                               : 2 * deg < q;
    if (keep) {
      kept.push_back(g);
    } else {
      out.diagnostics.push_back("dropped " + g.to_string() + " (degree " + deg.get_str() + ")");
    }
  }
  Ideal c(ring, std::move(kept));
  if (!c.is_zero() && c.is_unit()) {
    out.diagnostics.push_back("low-degree part is the unit ideal");
    return out;
  }
  out.compatibility = compatibility_check(sys, c, emax);
  if (!out.compatibility.compatible) {
    out.diagnostics.push_back("candidate " + c.to_string() + " failed the compatibility check");
    return out;
  }
  out.ideal = std::move(c);
  return out;
}

RatioResult splitting_ratio(const FGradedSystem& sys, const SplittingReport& report, const Ideal& candidate) {
  const Ideal cj = ideal_sum(candidate, sys.defining_ideal());
  RatioResult out;
  if (cj.is_zero()) {
    out.d = sys.ring()->nvars();
  } else {
    if (cj.is_unit()) throw Infeasible("candidate plus defining ideal is the unit ideal");
    out.d = krull_dimension(cj);
  }
  std::vector<Rational> vals;
  for (const auto& row : report.rows) {
    Rational r(row.a, ipow(report.p, static_cast<std::uint64_t>(row.e) * out.d));
    r.canonicalize();
    if (row.a != 0 && (r <= 0 || r > 1)) {
      throw Infeasible("ratio r_" + std::to_string(row.e) + " = " + to_string(r) +
                       " leaves (0, 1]; the candidate is not the splitting prime");
    }
    vals.push_back(r);
    out.rows.push_back(RatioRow{row.e, std::move(r)});
  }
  const TailFit fit = fit_tail(vals, report.p);
  out.estimate = fit.estimate;
  out.envelope = fit.envelope;
  return out;
}

RatioResult splitting_ratio(const FGradedSystem& sys, unsigned emax, const CandidateOptions& options) {
  const SplittingReport report = signature_sequence(sys, emax, {options.method, std::nullopt});
  const PrimeCandidate cand = splitting_prime_candidate(sys, emax, options);
  if (!cand.ideal) {
    std::string why = "no splitting prime candidate";
    for (const auto& d : cand.diagnostics) why += "; " + d;
    throw Infeasible(why);
  }
  return splitting_ratio(sys, report, *cand.ideal);
}

}  // namespace fsig
