#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>

#include "doctest.h"
#include "fsig/errors.hpp"
#include "fsig/ideals.hpp"
#include "fsig/problem.hpp"
#include "fsig/report.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace fsig;

namespace {

const char* kWhitney = R"(# Whitney umbrella
p = 3
vars = x, y, z
system = quotient { J = [x^2 - y^2*z] }
mode = ratio
emax = 2
)";

struct Invocation {
  int status = -1;
  std::string out;
};

Invocation run_cli(const std::string& args) {
  Invocation inv;
  const std::string cmd = std::string(FSIG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) inv.out.append(buf, n);
  const int raw = pclose(pipe);
  inv.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return inv;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("fsig_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string problem(const std::string& name) { return std::string(FSIG_PROBLEMS_DIR) + "/" + name; }

std::string squash(const std::string& s) { return std::regex_replace(s, std::regex(" +"), " "); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("problem file parsing") {
  const Problem w = parse_problem_file(kWhitney);
  CHECK(w.p == 3);
  CHECK(w.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(w.mode == Mode::ratio);
  CHECK(w.emax == 2);
  REQUIRE(w.system.has_value());
  CHECK(w.system->kind() == FGradedSystem::Kind::quotient);
  CHECK(ideal_equals(w.system->quotient_ideal(), testing_support::I(w.ring, {"x^2 - y^2*z"})));

  const Problem m = parse_problem_file("p = 3\nvars = x, y\nsystem = pair{a=[x^3, y^2], t = 2/5}\nmode = monomial\n");
  CHECK(m.system->pair_exponent().value() == Rational(2, 5));
  const Problem t = parse_problem_file("p=3\nvars=x,y\nsystem=pair{a=[x^3,y^2],t=1}\nmode=monomial\nt = 2/5\n");
  CHECK(*t.t == Rational(2, 5));
}

TEST_CASE("problem file errors") {
  auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_problem_file(text);
    } catch (const ParseError& err) {
      return {err.line(), err.column()};
    }
    return {0, 0};
  };
  try {
    parse_problem_file("p = 4\nvars = x\nsystem = quotient{J=[x]}\nmode = signature\n");
    FAIL("p = 4 accepted");
  } catch (const ParseError& err) {
    CHECK(std::string(err.what()).find("not prime") != std::string::npos);
    CHECK(err.line() == 1);
  }
  CHECK(error_at("p = 3\nvars = x, y\nsystem = product [\n  pair { a = [x], t = 1/2 },\n  pair { a = [w], t = 1/2 }\n]\nmode = signature\n") ==
        std::pair<std::size_t, std::size_t>{5, 15});
  CHECK(error_at("p = 3\nvars = x\nsystem = quotient{J=[0]}\nmode = signature\n").first == 3);
  CHECK(error_at("p = 3\nvars = x\nsystem = pair{a=[x], t=-1}\nmode = signature\n").first == 3);
  CHECK(error_at("p = 3\nvars = x\nsystem = pair{a=[x], t=1}\nmode = banana\n").first == 4);
  CHECK(error_at("p = 3\nvars = x\nmode = signature\n").first != 0);
  CHECK(error_at("p = 3\nvars = x, x\nsystem = pair{a=[x], t=1}\nmode = signature\n").first == 2);
  CHECK(error_at("p = 3\nvars = x, y\nsystem = pair{a=[x+y], t=1}\nmode = monomial\n").first == 3);
  CHECK(error_at("p = 3\nvars = x\nsystem = pair{a=[x], t=1}\nmode = signature\nemax = 0\n").first == 5);
  CHECK(error_at("p = 3\nvars = x\nsystem = quotient{J=[x]\nmode = signature\n").first != 0);
  CHECK(error_at("p = 3\ncolour = red\nvars = x\nsystem = pair{a=[x], t=1}\nmode = signature\n").first == 2);
}

TEST_CASE("sweep values") {
  const TSweep s{0, Rational(1, 4), 1};
  CHECK(s.values() == std::vector<Rational>{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1});
}

TEST_CASE("run dispatch") {
  const RunResult w = run(parse_problem_file(kWhitney));
  REQUIRE(w.report.has_value());
  REQUIRE(w.report->prime.has_value());
  REQUIRE(w.report->prime->ideal.has_value());
  CHECK(ideal_equals(*w.report->prime->ideal, testing_support::I(w.report->prime->ideal->ring(), {"x", "y"})));
  REQUIRE(w.report->ratio.has_value());
  CHECK(w.report->ratio->rows[0].r == Rational(2, 3));
  CHECK(w.report->ratio->rows[1].r == Rational(5, 9));
  CHECK(w.exit_code() == 0);

  const RunResult m =
      run(parse_problem_file("p = 3\nvars = x, y\nsystem = pair{a=[x^3, y^2], t = 1/4}\nmode = monomial\n"));
  REQUIRE(m.monomial.size() == 1);
  CHECK(m.monomial[0].value == Rational(13, 16));

  const RunResult f = run(parse_problem_file("p = 2\nvars = x,y,z\nsystem = quotient{J=[x^2-y^2*z]}\nmode = fpure\nemax = 3\n"));
  CHECK_FALSE(f.report->f_pure);
  CHECK(emit_report(f, ReportFormat::table).find("not F-pure up to emax = 3") != std::string::npos);

  RunOptions capped;
  capped.emax = 1;
  CHECK(run(parse_problem_file(kWhitney), capped).report->rows.size() == 1);
}

TEST_CASE("table rows") {
  const std::string out = emit_report(run(parse_problem_file(
                                          "p = 3\nvars = x, y\nsystem = product[pair{a=[x], t=1/2}, pair{a=[y], t=1/2}]\n"
                                          "mode = signature\nemax = 2\n")),
                                      ReportFormat::table);
  CHECK(squash(out).find("\n1 | 4 | 4/9 ≈ 0.444444\n") != std::string::npos);
  CHECK(squash(out).find("\n2 | 25 | 25/81 ≈ 0.308642\n") != std::string::npos);
}

TEST_CASE("json schema") {
  using nlohmann::json;
  for (const char* file : {"snc.fsig", "whitney.fsig", "whitney_p2.fsig", "cusp.fsig", "monomial.fsig", "regular.fsig"}) {
    const Invocation inv = run_cli("--json --emax 2 " + problem(file));
    CHECK(inv.status == 0);
    const json j = json::parse(inv.out);
    for (const char* key : {"p", "vars", "mode", "d", "rows", "estimate_num", "estimate_den", "error_envelope",
                            "gamma", "index", "f_pure", "partial"}) {
      CHECK_MESSAGE(j.contains(key), file << " lacks " << key);
    }
    CHECK(j["partial"] == false);
    for (const auto& row : j["rows"]) {
      for (const char* key : {"e", "a_e", "s_e_num", "s_e_den"}) CHECK(row.contains(key));
    }
    if (j["mode"] == "ratio") {
      CHECK(j.contains("prime_candidate"));
      CHECK(j.contains("ratio_rows"));
    }
    if (j["mode"] == "monomial") CHECK(j.contains("exact"));
  }
}

TEST_CASE("partial runs are marked") {
  RunResult r = run(parse_problem_file(kWhitney));
  r.report->partial = true;
  const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::json));
  CHECK(j["partial"] == true);
  CHECK(r.exit_code() == 3);
}

TEST_CASE("output is deterministic") {
  for (const char* file : {"whitney.fsig", "snc.fsig", "monomial.fsig"}) {
    const Invocation a = run_cli("--json " + problem(file));
    const Invocation b = run_cli("--json " + problem(file));
    CHECK(a.out == b.out);
    const Invocation c = run_cli(problem(file));
    const Invocation d = run_cli(problem(file));
    CHECK(c.out == d.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli(problem("whitney_p2.fsig")).status == 0);
  const std::string ratio_p2 =
      write_temp("ratio_p2.fsig", "p = 2\nvars = x, y, z\nsystem = quotient{J=[x^2 - y^2*z]}\nmode = ratio\nemax = 3\n");
  CHECK(run_cli(ratio_p2).status == 2);
  const std::string bad = write_temp("bad.fsig", "p = 4\nvars = x\nsystem = quotient{J=[x]}\nmode = signature\n");
  CHECK(run_cli(bad).status == 1);
  CHECK(run_cli("/nonexistent/problem.fsig").status == 1);
  CHECK(run_cli("--method fastest " + problem("snc.fsig")).status == 1);
  CHECK(run_cli("--method both " + problem("snc.fsig")).status == 0);
  CHECK(run_cli("--method groebner --emax 2 " + problem("whitney.fsig")).status == 0);
}

TEST_CASE("monomial csv") {
  const Invocation inv = run_cli(problem("monomial.fsig"));
  CHECK(inv.out.find("t,exact,decimal\n") != std::string::npos);
  CHECK(inv.out.find("\n1/4,13/16,0.812500\n") != std::string::npos);
  CHECK(inv.out.find("\n2/5,8/15,0.533333\n") != std::string::npos);
}

}
