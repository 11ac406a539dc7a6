#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsig/bigint.hpp"
#include "fsig/ring.hpp"
#include "fsig/signature.hpp"
#include "fsig/systems.hpp"

namespace fsig {

enum class Mode { signature, ratio, prime, fpure, monomial };

std::string mode_name(Mode m);

/// start:step:end, inclusive of end when it lands on the grid.
struct TSweep {
  Rational start;
  Rational step;
  Rational end;

  std::vector<Rational> values() const;
};

struct Problem {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  TermOrder order;
  RingPtr ring;
  std::string system_text;
  std::optional<FGradedSystem> system;
  Mode mode = Mode::signature;
  unsigned emax = 3;
  std::optional<Rational> t;  ///< monomial mode: overrides the pair's t
  std::optional<TSweep> t_sweep;
  std::optional<std::uint64_t> threshold_deg;
  CeilingConvention ceiling = CeilingConvention::p_minus_one;
};

/// Line-oriented "key = value" file with '#' comments. A system value may
/// continue over following lines until its brackets balance. Syntax and
/// semantic errors throw ParseError tagged with line and column.
Problem parse_problem_file(std::string_view text);

struct RunOptions {
  std::optional<unsigned> emax;
  std::optional<std::uint64_t> threshold_deg;
  Method method = Method::linear;
};

struct MonomialRow {
  Rational t;
  Rational value;
};

struct RunResult {
  Mode mode = Mode::signature;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  unsigned emax = 0;
  std::optional<SplittingReport> report;
  std::optional<unsigned> f_pure_witness;
  std::vector<MonomialRow> monomial;  ///< monomial mode
  std::optional<std::string> infeasible;
  bool resource_limited = false;

  /// 0 ok, 2 infeasible, 3 resource cap.
  int exit_code() const;
};

RunResult run(const Problem& problem, const RunOptions& options = {});

}  // namespace fsig
