#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fsig/errors.hpp"
#include "fsig/problem.hpp"
#include "fsig/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"F-splitting numbers, F-signatures, splitting primes and ratios over prime fields"};
  std::string path;
  bool json = false;
  std::optional<unsigned> emax;
  std::optional<std::uint64_t> threshold;
  std::string method = "linear";
  app.add_option("file", path, "problem file")->required();
  app.add_flag("--json", json, "emit JSON instead of a table");
  app.add_option("--emax", emax, "largest e to compute")->check(CLI::Range(1u, 64u));
  app.add_option("--threshold-deg", threshold, "degree threshold for prime candidate extraction");
  app.add_option("--method", method, "algorithm for a_e")->check(CLI::IsMember({"groebner", "linear", "both"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "fsig: cannot open " << path << "\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  fsig::RunOptions options;
  options.emax = emax;
  options.threshold_deg = threshold;
  options.method = method == "groebner" ? fsig::Method::groebner
                   : method == "both"   ? fsig::Method::both
                                        : fsig::Method::linear;
  try {
    const fsig::Problem problem = fsig::parse_problem_file(buf.str());
    const fsig::RunResult result = fsig::run(problem, options);
    std::cout << fsig::emit_report(result, json ? fsig::ReportFormat::json : fsig::ReportFormat::table);
    if (result.infeasible) std::cerr << "fsig: infeasible: " << *result.infeasible << "\n";
    if (result.exit_code() == 3) std::cerr << "fsig: resource cap reached; report is partial\n";
    return result.exit_code();
  } catch (const fsig::ParseError& err) {
    std::cerr << path << ": " << err.what() << "\n";
    return 1;
  } catch (const fsig::Infeasible& err) {
    std::cerr << "fsig: infeasible: " << err.what() << "\n";
    return 2;
  } catch (const fsig::ResourceLimit& err) {
    std::cerr << "fsig: resource cap: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "fsig: " << err.what() << "\n";
    return 1;
  }
}
