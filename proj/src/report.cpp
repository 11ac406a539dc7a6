#include "fsig/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace fsig {
namespace {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits go out as JSON numbers, larger ones as strings.
Json big(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(to_string(v));
}

std::string fraction_with_decimal(const Rational& r) { return to_string(r) + " ≈ " + to_decimal(r, 6); }

std::vector<std::string> candidate_generators(const Ideal& c) {
  std::vector<std::string> out;
  const auto& gens = c.groebner().elements();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) out.push_back(it->to_string());
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// UTF-8 aware width for alignment; the only non-ASCII glyph is the approx sign.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > display_width(s) ? width - display_width(s) : 0, ' ');
}

std::string table_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));
  }
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      if (c) line += " | ";
      line += c + 1 == rows[i].size() ? rows[i][c] : pad(rows[i][c], width[c]);
    }
    out += line + "\n";
    if (i == 0) {
      std::string rule;
      for (std::size_t c = 0; c < width.size(); ++c) {
        if (c) rule += "-+-";
        rule += std::string(width[c], '-');
      }
      out += rule + "\n";
    }
  }
  return out;
}

std::string monomial_csv(const RunResult& r) {
  std::string out = "t,exact,decimal\n";
  for (const auto& row : r.monomial) {
    out += to_string(row.t) + "," + to_string(row.value) + "," + to_decimal(row.value, 6) + "\n";
  }
  return out;
}

std::string emit_table(const RunResult& r) {
  std::ostringstream os;
  os << "p = " << r.p << "\n";
  os << "vars = " << join(r.vars, ", ") << "\n";
  os << "mode = " << mode_name(r.mode) << "\n";
  if (r.mode == Mode::monomial) {
    os << "\n" << monomial_csv(r);
    return os.str();
  }
  const SplittingReport& rep = *r.report;
  os << "system = " << rep.system << "\n";
  os << "d = " << rep.d << "\n\n";

  std::vector<std::vector<std::string>> rows{{"e", "a_e", "s_e"}};
  for (const auto& row : rep.rows) {
    rows.push_back({std::to_string(row.e), to_string(row.a), fraction_with_decimal(row.s)});
  }
  os << table_rows(rows) << "\n";

  if (!rep.rows.empty()) {
    os << "estimate = " << fraction_with_decimal(rep.estimate) << "\n";
    os << "error envelope = " << fraction_with_decimal(rep.error_envelope) << "\n";
  }
  std::vector<std::string> gamma;
  for (auto e : rep.semigroup.gamma) gamma.push_back(std::to_string(e));
  os << "gamma = {" << join(gamma, ", ") << "}\n";
  os << "index = " << (rep.semigroup.index ? std::to_string(*rep.semigroup.index) : "undefined") << "\n";
  if (rep.f_pure) {
    os << "F-pure: yes (witness e = " << *r.f_pure_witness << ")\n";
  } else {
    os << "F-pure: not F-pure up to emax = " << rep.rows.size() << "\n";
  }

  if (rep.prime) {
    os << "\n";
    if (rep.prime->ideal) {
      os << "prime candidate = [" << join(candidate_generators(*rep.prime->ideal), ", ") << "]\n";
    } else {
      os << "prime candidate: none\n";
    }
    for (const auto& step : rep.prime->compatibility.steps) {
      os << "  compatibility e = " << step.e << ": " << (step.ok ? "ok" : "fails");
      if (!step.note.empty()) os << " (" << step.note << ")";
      os << "\n";
    }
    for (const auto& d : rep.prime->diagnostics) os << "  " << d << "\n";
  }
  if (rep.ratio) {
    os << "\nd' = " << rep.ratio->d << "\n\n";
    std::vector<std::vector<std::string>> rrows{{"e", "r_e"}};
    for (const auto& row : rep.ratio->rows) rrows.push_back({std::to_string(row.e), fraction_with_decimal(row.r)});
    os << table_rows(rrows) << "\n";
    os << "ratio estimate = " << fraction_with_decimal(rep.ratio->estimate) << "\n";
    os << "ratio envelope = " << fraction_with_decimal(rep.ratio->envelope) << "\n";
  }
  for (const auto& note : rep.notes) os << "note: " << note << "\n";
  if (r.infeasible) os << "infeasible: " << *r.infeasible << "\n";
  if (rep.partial) os << "partial: stopped after e = " << rep.rows.size() << "\n";
  return os.str();
}

std::string emit_json(const RunResult& r) {
  Json j;
  j["p"] = r.p;
  j["vars"] = r.vars;
  j["mode"] = mode_name(r.mode);
  if (r.mode == Mode::monomial) {
    j["d"] = r.vars.size();
    j["rows"] = Json::array();
    const Rational first = r.monomial.empty() ? Rational(0) : r.monomial.front().value;
    j["estimate_num"] = big(first.get_num());
    j["estimate_den"] = big(first.get_den());
    j["error_envelope"] = "0";
    j["gamma"] = Json::array();
    j["index"] = nullptr;
    j["f_pure"] = nullptr;
    Json exact = Json::array();
    for (const auto& row : r.monomial) {
      exact.push_back({{"t", to_string(row.t)}, {"value", to_string(row.value)}, {"decimal", to_decimal(row.value, 6)}});
    }
    j["exact"] = std::move(exact);
    j["partial"] = false;
    return j.dump(2) + "\n";
  }
  const SplittingReport& rep = *r.report;
  j["d"] = rep.d;
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back({{"e", row.e},
                    {"a_e", big(row.a)},
                    {"s_e_num", big(row.s.get_num())},
                    {"s_e_den", big(row.s.get_den())}});
  }
  j["rows"] = std::move(rows);
  j["estimate_num"] = big(rep.estimate.get_num());
  j["estimate_den"] = big(rep.estimate.get_den());
  j["error_envelope"] = to_string(rep.error_envelope);
  j["gamma"] = rep.semigroup.gamma;
  j["index"] = rep.semigroup.index ? Json(*rep.semigroup.index) : Json(nullptr);
  j["f_pure"] = rep.f_pure;
  if (rep.prime) {
    j["prime_candidate"] = rep.prime->ideal ? Json(candidate_generators(*rep.prime->ideal)) : Json(nullptr);
    Json steps = Json::array();
    for (const auto& step : rep.prime->compatibility.steps) steps.push_back({{"e", step.e}, {"ok", step.ok}});
    j["compatibility"] = std::move(steps);
  }
  if (rep.ratio) {
    j["ratio_d"] = rep.ratio->d;
    Json rr = Json::array();
    for (const auto& row : rep.ratio->rows) {
      rr.push_back({{"e", row.e}, {"r_e_num", big(row.r.get_num())}, {"r_e_den", big(row.r.get_den())}});
    }
    j["ratio_rows"] = std::move(rr);
    j["ratio_estimate"] = to_string(rep.ratio->estimate);
    j["ratio_envelope"] = to_string(rep.ratio->envelope);
  }
  if (r.infeasible) j["infeasible"] = *r.infeasible;
  j["partial"] = rep.partial;
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const RunResult& result, ReportFormat format) {
  return format == ReportFormat::json ? emit_json(result) : emit_table(result);
}

}  // namespace fsig
