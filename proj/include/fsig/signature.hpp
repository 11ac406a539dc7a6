#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsig/bigint.hpp"
#include "fsig/linalg.hpp"
#include "fsig/systems.hpp"

namespace fsig {

/// Algorithm for a_e. `both` runs the two and throws InternalError on any
/// disagreement.
enum class Method { groebner, linear, both };

/// Largest box basis (p^(e n) monomials) the linear method will build.
inline constexpr std::uint64_t kMaxLinearBasis = std::uint64_t{1} << 24;

/// I_e = (n^[p^e] : b_e) with n the ideal of the variables.
Ideal splitting_ideal(const FGradedSystem& sys, unsigned e);

/// a_e = length S / I_e.
BigInt splitting_number(const FGradedSystem& sys, unsigned e, Method method = Method::linear);

/// Groebner route: standard monomials of I_e.
BigInt splitting_number_groebner(const FGradedSystem& sys, unsigned e);

/// Linear route: rank over F_p of g -> (g f_j mod n^[p^e])_j on the span of
/// monomials with every exponent below p^e, f_j generating b_e.
BigInt splitting_number_linear(const FGradedSystem& sys, unsigned e,
                               linalg::RankStrategy strategy = linalg::RankStrategy::automatic);

/// Estimate of the limit of a sequence converging like c p^-e, fitted from
/// the last rows: three rows solve v_e = s + c p^-e + c2 p^-2e exactly, two
/// rows drop c2, one row returns the value itself.
struct TailFit {
  Rational estimate;
  Rational envelope;  ///< |c| / p^E; 1 when only one row exists
};
TailFit fit_tail(const std::vector<Rational>& values, std::uint32_t p);

struct SemigroupData {
  std::vector<unsigned> gamma;         ///< e <= emax with a_e != 0
  std::optional<std::uint64_t> index;  ///< gcd of gamma; absent when gamma is empty
};

struct CompatibilityStep {
  unsigned e = 0;
  bool ok = true;
  std::string note;
};

struct CompatibilityResult {
  bool compatible = true;
  std::vector<CompatibilityStep> steps;
};

struct PrimeCandidate {
  std::optional<Ideal> ideal;
  std::vector<std::string> diagnostics;
  CompatibilityResult compatibility;
};

struct RatioRow {
  unsigned e = 0;
  Rational r;
};

struct RatioResult {
  std::size_t d = 0;  ///< dim S/(C + J)
  std::vector<RatioRow> rows;
  Rational estimate;
  Rational envelope;
};

struct ReportRow {
  unsigned e = 0;
  BigInt a;
  Rational s;
};

struct SplittingReport {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::string system;
  std::size_t d = 0;
  std::vector<ReportRow> rows;
  Rational estimate;
  Rational error_envelope;
  SemigroupData semigroup;
  bool f_pure = false;
  std::optional<PrimeCandidate> prime;
  std::optional<RatioResult> ratio;
  bool partial = false;
  std::vector<std::string> notes;
};

struct SignatureOptions {
  Method method = Method::linear;
  std::optional<std::size_t> d_override;
};

/// Rows e = 1..emax with s_e = a_e / p^(e d). If a ResourceLimit stops the
/// run, the rows completed so far are kept and the report is marked partial.
SplittingReport signature_sequence(const FGradedSystem& sys, unsigned emax,
                                   const SignatureOptions& options = {});

struct FPurity {
  bool f_pure = false;
  std::optional<unsigned> witness;  ///< smallest e with a_e != 0
  unsigned checked_up_to = 0;
};

/// Sound when true; "not F-pure up to emax" when false.
FPurity is_f_pure(const FGradedSystem& sys, unsigned emax, Method method = Method::linear);

SemigroupData semigroup_data(const SplittingReport& report);
SemigroupData semigroup_data(const std::vector<ReportRow>& rows);

/// b_e in (C^[p^e] : C) for 1 <= e <= emax. The zero ideal passes vacuously.
CompatibilityResult compatibility_check(const FGradedSystem& sys, const Ideal& c, unsigned emax);

struct CandidateOptions {
  /// Keep basis elements of total degree below this; default p^emax / 2.
  std::optional<std::uint64_t> degree_threshold;
  Method method = Method::linear;
};

/// Low-degree part of the reduced basis of I_emax, returned only when proper
/// and compatible through emax. Neither primality nor maximality is certified.
PrimeCandidate splitting_prime_candidate(const FGradedSystem& sys, unsigned emax,
                                         const CandidateOptions& options = {});

/// r_e = a_e / p^(e d') with d' = dim S/(C + J). Throws Infeasible when the
/// candidate is absent or some observed r_e leaves (0, 1].
RatioResult splitting_ratio(const FGradedSystem& sys, const SplittingReport& report, const Ideal& candidate);
RatioResult splitting_ratio(const FGradedSystem& sys, unsigned emax, const CandidateOptions& options = {});

}  // namespace fsig
