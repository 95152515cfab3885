// monideal: command-line front end for the monomial ideal library.
//
//   monideal classify "x^3, x^2*y^8, x*y^15, y^21" --json
//   monideal scan --n 4 --emax 8 --only-witnesses --out scan.json

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "monideal/cli/run.hpp"

namespace {

struct Shared {
  bool json = false;
  std::string out;
  std::string ideal;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace monideal;
  CLI::App app{"Monomial ideals in two variables: closures, m-fullness, normality and Rees algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "monideal 1.0");

  cli::Options opts;
  Shared shared;
  auto common = [&](CLI::App* sub, bool takes_ideal) {
    if (takes_ideal) sub->add_option("ideal", shared.ideal, "generators, e.g. \"x^3, x^2*y, y^4\"")->required();
    sub->add_flag("--json", shared.json, "print the report as JSON");
    sub->add_option("--out", shared.out, "also write the JSON report to this file");
    sub->add_option("--power-bound", opts.power_bound, "powers checked by the redundant normality test")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--wbox", opts.wbox, "integer rounding box side")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", opts.seed, "reduction probe seed")->capture_default_str();
    sub->add_option("--trials", opts.trials, "reduction probe trials")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--max-basis", opts.max_basis, "Groebner basis size ceiling")->capture_default_str();
    sub->add_option("--max-degree", opts.max_degree, "Groebner basis degree ceiling")->capture_default_str();
    sub->add_option("--jmax", opts.jmax, "largest power in the fiber Hilbert function")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_flag("--skip-groebner", opts.skip_groebner, "do not compute the Rees defining ideal");
  };

  const std::vector<std::pair<std::string, std::string>> commands{
      {"closure", "integral closure and m-full closure"},
      {"mfull", "m-fullness verdict and tight factorization"},
      {"normal", "normality with the necessary and sufficient condition suites"},
      {"rees", "syzygies, Jacobian dual, Rees defining ideal, fiber and reduction number"},
      {"pick", "Pick's formula on the staircase region and its triangles"},
      {"irp", "integer rounding property on a box"},
      {"classify", "every analysis on one ideal"},
  };
  for (const auto& [name, help] : commands) common(app.add_subcommand(name, help), true);
  auto* scan = app.add_subcommand("scan", "classify every staircase in a bounded family");
  common(scan, false);
  scan->add_option("--n", opts.scan_n, "largest number of generators")->capture_default_str()->check(CLI::Range(2, 64));
  scan->add_option("--emax", opts.scan_emax, "largest exponent")->capture_default_str()->check(CLI::Range(1, 64));
  scan->add_option("--threads", opts.threads, "worker threads (0: all cores)")->capture_default_str();
  scan->add_flag("--only-witnesses", opts.only_witnesses, "keep only ideals passing the necessary tests but not normal");
  scan->add_flag("--rees", opts.scan_rees, "include the Rees analysis in every report");

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto outcome = cli::run(command, shared.ideal, opts);
    const std::string json = outcome.report.dump(2) + "\n";
    std::cout << (shared.json ? json : cli::render_text(outcome.report));
    if (!shared.out.empty()) {
      std::ofstream f(shared.out);
      if (!f) throw Error("cannot write " + shared.out);
      f << json;
    }
    return outcome.exit_code;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return cli::kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kError;
  }
}
