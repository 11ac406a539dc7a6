#pragma once

#include <string>

#include "fsig/problem.hpp"

namespace fsig {

enum class ReportFormat { table, json };

/// Deterministic text for a run: aligned e | a_e | s_e table with exact
/// fractions and 6-place decimals, or one JSON object. Monomial runs print
/// CSV rows t,exact,decimal in table format.
std::string emit_report(const RunResult& result, ReportFormat format);

}  // namespace fsig
