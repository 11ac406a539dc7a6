#include "fsig/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

#include "fsig/errors.hpp"
#include "fsig/newton.hpp"
#include "fsig/prime_field.hpp"

namespace fsig {
namespace {

// A stretch of the joined system text and where it came from.
struct Segment {
  std::size_t offset;  // in the joined text
  std::size_t line;
  std::size_t column;  // 0-based column of the first character
};

struct Entry {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;  // 0-based column of the value
  std::vector<Segment> segments;
};

std::string_view strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::size_t leading_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int bracket_balance(std::string_view s) {
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
  }
  return depth;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::uint64_t parse_uint(const Entry& e, const std::string& key) {
  std::uint64_t v = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(key + " must be a nonnegative integer", e.line, e.column + 1);
  }
  return v;
}

Rational parse_rat(std::string_view text, std::size_t line, std::size_t column, const std::string& what) {
  std::string_view t = trim_right(text.substr(leading_space(text)));
  try {
    return parse_rational(t);
  } catch (const std::invalid_argument&) {
    throw ParseError(what + " must be a rational number n or n/d", line, column + leading_space(text) + 1);
  }
}

std::map<std::string, Entry> read_entries(std::string_view text, std::size_t& last_line) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  last_line = lines.size();

  std::map<std::string, Entry> entries;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view raw = strip_comment(lines[i]);
    const std::size_t lead = leading_space(raw);
    if (lead == raw.size()) continue;
    const std::size_t line_no = i + 1;
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, lead + 1);
    const std::string key(trim_right(raw.substr(lead, eq - lead)));
    if (!is_identifier(key)) throw ParseError("malformed key", line_no, lead + 1);
    if (entries.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, lead + 1);

    Entry entry;
    entry.line = line_no;
    std::string_view rest = raw.substr(eq + 1);
    entry.column = eq + 1 + leading_space(rest);
    rest = trim_right(rest.substr(leading_space(rest)));
    if (rest.empty()) throw ParseError("missing value for '" + key + "'", line_no, entry.column + 1);
    entry.value = std::string(rest);
    entry.segments.push_back({0, line_no, entry.column});

    if (key == "system") {
      int depth = bracket_balance(rest);
      while (depth > 0) {
        if (++i >= lines.size()) {
          throw ParseError("unterminated system expression", line_no, entry.column + 1);
        }
        const std::string_view more = strip_comment(lines[i]);
        const std::size_t ml = leading_space(more);
        const std::string_view body = trim_right(more.substr(std::min(ml, more.size())));
        if (body.empty()) continue;
        entry.value += ' ';
        entry.segments.push_back({entry.value.size(), i + 1, ml});
        entry.value += body;
        depth += bracket_balance(body);
      }
    }
    entries.emplace(key, std::move(entry));
  }
  return entries;
}

FGradedSystem parse_system_entry(const Entry& e, const RingPtr& ring, CeilingConvention conv) {
  try {
    return parse_system(e.value, ring, conv, 1, 0);
  } catch (const ParseError& err) {
    const std::size_t idx = err.column() == 0 ? 0 : err.column() - 1;
    const Segment* seg = &e.segments.front();
    for (const auto& s : e.segments) {
      if (s.offset <= idx) seg = &s;
    }
    throw ParseError(err.message(), seg->line, seg->column + (idx - seg->offset) + 1);
  }
}

}  // namespace

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::signature: return "signature";
    case Mode::ratio: return "ratio";
    case Mode::prime: return "prime";
    case Mode::fpure: return "fpure";
    case Mode::monomial: return "monomial";
  }
  return "?";
}

std::vector<Rational> TSweep::values() const {
  std::vector<Rational> out;
  for (Rational t = start; t <= end; t += step) out.push_back(t);
  return out;
}

Problem parse_problem_file(std::string_view text) {
  std::size_t last_line = 0;
  auto entries = read_entries(text, last_line);
  static const char* const known[] = {"p", "vars", "order", "system", "mode", "emax",
                                      "t", "t_sweep", "ceiling", "threshold_deg"};
  for (const auto& [key, e] : entries) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError("unknown key '" + key + "'", e.line, 1);
    }
  }
  for (const char* required : {"p", "vars", "system", "mode"}) {
    if (!entries.count(required)) throw ParseError(std::string("missing '") + required + "'", last_line, 1);
  }

  Problem prob;
  {
    const Entry& e = entries.at("p");
    const std::uint64_t p = parse_uint(e, "p");
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
      throw ParseError("p = " + e.value + " is not prime", e.line, e.column + 1);
    }
    prob.p = static_cast<std::uint32_t>(p);
  }
  {
    const Entry& e = entries.at("vars");
    std::size_t pos = 0;
    for (;;) {
      const auto comma = e.value.find(',', pos);
      const std::string_view piece =
          std::string_view(e.value).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const std::size_t lead = leading_space(piece);
      const std::string name(trim_right(piece.substr(lead)));
      if (!is_identifier(name)) throw ParseError("malformed variable name", e.line, e.column + pos + lead + 1);
      if (std::find(prob.vars.begin(), prob.vars.end(), name) != prob.vars.end()) {
        throw ParseError("duplicate variable '" + name + "'", e.line, e.column + pos + lead + 1);
      }
      prob.vars.push_back(name);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (prob.vars.size() > kMaxUserVariables) {
      throw ParseError("at most " + std::to_string(kMaxUserVariables) + " variables are supported", e.line,
                       e.column + 1);
    }
  }
  if (entries.count("order")) {
    const Entry& e = entries.at("order");
    if (e.value == "degrevlex") {
      prob.order = TermOrder::degrevlex();
    } else if (e.value == "lex") {
      prob.order = TermOrder::lex();
    } else {
      throw ParseError("order must be degrevlex or lex", e.line, e.column + 1);
    }
  }
  if (entries.count("ceiling")) {
    const Entry& e = entries.at("ceiling");
    if (e.value == "pminusone") {
      prob.ceiling = CeilingConvention::p_minus_one;
    } else if (e.value == "pe") {
      prob.ceiling = CeilingConvention::p_power;
    } else {
      throw ParseError("ceiling must be pminusone or pe", e.line, e.column + 1);
    }
  }
  {
    const Entry& e = entries.at("mode");
    const Mode modes[] = {Mode::signature, Mode::ratio, Mode::prime, Mode::fpure, Mode::monomial};
    bool found = false;
    for (Mode m : modes) {
      if (mode_name(m) == e.value) {
        prob.mode = m;
        found = true;
      }
    }
    if (!found) throw ParseError("mode must be signature, ratio, prime, fpure, or monomial", e.line, e.column + 1);
  }
  if (entries.count("emax")) {
    const Entry& e = entries.at("emax");
    const std::uint64_t v = parse_uint(e, "emax");
    if (v < 1 || v > 64) throw ParseError("emax must be between 1 and 64", e.line, e.column + 1);
    prob.emax = static_cast<unsigned>(v);
  }
  if (entries.count("threshold_deg")) prob.threshold_deg = parse_uint(entries.at("threshold_deg"), "threshold_deg");
  if (entries.count("t")) {
    const Entry& e = entries.at("t");
    prob.t = parse_rat(e.value, e.line, e.column, "t");
    if (*prob.t < 0) throw ParseError("t must be nonnegative", e.line, e.column + 1);
  }
  if (entries.count("t_sweep")) {
    const Entry& e = entries.at("t_sweep");
    if (prob.mode != Mode::monomial) throw ParseError("t_sweep is only allowed in monomial mode", e.line, 1);
    const auto c1 = e.value.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : e.value.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("t_sweep must be start:step:end", e.line, e.column + 1);
    const std::string_view v = e.value;
    TSweep sweep{parse_rat(v.substr(0, c1), e.line, e.column, "t_sweep start"),
                 parse_rat(v.substr(c1 + 1, c2 - c1 - 1), e.line, e.column + c1 + 1, "t_sweep step"),
                 parse_rat(v.substr(c2 + 1), e.line, e.column + c2 + 1, "t_sweep end")};
    if (sweep.start < 0) throw ParseError("t_sweep start must be nonnegative", e.line, e.column + 1);
    if (sweep.step <= 0) throw ParseError("t_sweep step must be positive", e.line, e.column + c1 + 2);
    if (sweep.end < sweep.start) throw ParseError("t_sweep end precedes start", e.line, e.column + c2 + 2);
    prob.t_sweep = sweep;
  }

  prob.ring = make_ring(prob.p, prob.vars, prob.order);
  const Entry& sys = entries.at("system");
  prob.system_text = sys.value;
  prob.system = parse_system_entry(sys, prob.ring, prob.ceiling);
  if (prob.mode == Mode::monomial) {
    if (prob.system->kind() != FGradedSystem::Kind::pair || !prob.system->pair_ideal().is_monomial()) {
      throw ParseError("monomial mode needs a single pair system with monomial generators", sys.line,
                       sys.column + 1);
    }
    for (const auto& g : prob.system->pair_ideal().generators()) {
      if (g.terms().size() != 1) {
        throw ParseError("monomial mode needs monomial generators, got " + g.to_string(), sys.line,
                         sys.column + 1);
      }
    }
    if (prob.vars.size() > newton::kMaxDimension) {
      throw ParseError("monomial mode supports at most " + std::to_string(newton::kMaxDimension) + " variables",
                       entries.at("vars").line, entries.at("vars").column + 1);
    }
  } else if (entries.count("t")) {
    throw ParseError("t is only allowed in monomial mode", entries.at("t").line, 1);
  }
  return prob;
}

int RunResult::exit_code() const {
  if (infeasible) return 2;
  if (resource_limited || (report && report->partial)) return 3;
  return 0;
}

RunResult run(const Problem& problem, const RunOptions& options) {
  if (!problem.system) throw std::invalid_argument("problem has no system");
  const FGradedSystem& sys = *problem.system;
  RunResult out;
  out.mode = problem.mode;
  out.p = problem.p;
  out.vars = problem.vars;
  out.emax = options.emax.value_or(problem.emax);
  if (out.emax < 1) throw std::invalid_argument("emax must be at least 1");

  if (problem.mode == Mode::monomial) {
    std::vector<newton::LatticePoint> exps;
    for (const auto& g : sys.pair_ideal().generators()) {
      const Monomial& m = g.leading_monomial();
      newton::LatticePoint u;
      for (std::size_t i = 0; i < problem.vars.size(); ++i) u.emplace_back(static_cast<unsigned long>(m[i]));
      exps.push_back(std::move(u));
    }
    const newton::NewtonPolyhedron poly = newton::newton_polyhedron(exps);
    std::vector<Rational> ts;
    if (problem.t_sweep) {
      ts = problem.t_sweep->values();
    } else {
      ts.push_back(problem.t.value_or(sys.pair_exponent().value()));
    }
    for (const auto& t : ts) out.monomial.push_back({t, newton::clip_and_volume(poly, t)});
    return out;
  }

  SignatureOptions sig;
  sig.method = options.method;
  out.report = signature_sequence(sys, out.emax, sig);
  SplittingReport& rep = *out.report;
  if (!rep.semigroup.gamma.empty()) out.f_pure_witness = rep.semigroup.gamma.front();
  if (rep.partial) return out;

  CandidateOptions cand;
  cand.method = options.method;
  cand.degree_threshold = options.threshold_deg ? options.threshold_deg : problem.threshold_deg;
  try {
    if (problem.mode == Mode::prime) {
      rep.prime = splitting_prime_candidate(sys, out.emax, cand);
    } else if (problem.mode == Mode::ratio) {
      if (!rep.f_pure) {
        out.infeasible = "not F-pure up to emax = " + std::to_string(out.emax) +
                         "; the splitting ratio needs an F-pure input";
        return out;
      }
      rep.prime = splitting_prime_candidate(sys, out.emax, cand);
      if (!rep.prime->ideal) {
        out.infeasible = "no proper compatible splitting prime candidate";
        return out;
      }
      rep.ratio = splitting_ratio(sys, rep, *rep.prime->ideal);
    }
  } catch (const Infeasible& err) {
    out.infeasible = err.what();
  } catch (const ResourceLimit& err) {
    out.resource_limited = true;
    rep.partial = true;
    rep.notes.push_back(err.what());
  } catch (const std::overflow_error& err) {
    out.resource_limited = true;
    rep.partial = true;
    rep.notes.push_back(err.what());
  }
  return out;
}

}  // namespace fsig
