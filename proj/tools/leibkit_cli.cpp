#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "leibkit/format.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

struct GuardOptions {
  long long max_enum = 10000000;
  bool force = false;
  int workers = 1;
};

void add_guard_options(CLI::App* cmd, GuardOptions& opts) {
  cmd->add_option("--max-enum", opts.max_enum,
                  "Abort exhaustive sweeps beyond this many subspaces")
      ->envname("LEIBKIT_MAX_ENUM");
  cmd->add_flag("--force", opts.force, "Ignore the enumeration budget");
  cmd->add_option("--workers", opts.workers, "Worker threads for sweeps")
      ->check(CLI::Range(1, 256));
}

leib::EnumerationGuard make_guard(const GuardOptions& opts) {
  leib::EnumerationGuard g;
  g.max_subspaces = opts.max_enum;
  g.force = opts.force;
  g.workers = opts.workers;
  return g;
}

int cmd_validate(const std::string& path) {
  try {
    leib::parse_algebra_file(path, false);
  } catch (const leib::LeibnizViolationError& e) {
    std::cout << "invalid: defining identity fails at basis triple (" << e.i
              << "," << e.j << "," << e.k << ")\n";
    return kExitSemantic;
  } catch (const leib::FormatError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const leib::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << "ok\n";
  return kExitOk;
}

int cmd_report(const std::string& path, bool json, bool unchecked,
               const GuardOptions& guard_opts) {
  leib::LeibnizAlgebra a = leib::parse_algebra_file(path, unchecked);
  leib::StructureReport rep = leib::structure_report(a, make_guard(guard_opts));
  std::cout << (json ? leib::report_json(rep) : leib::report_text(rep));
  return kExitOk;
}

int cmd_check(const std::string& path, const std::string& name, bool json,
              bool unchecked, const GuardOptions& guard_opts) {
  leib::LeibnizAlgebra a = leib::parse_algebra_file(path, unchecked);
  leib::EnumerationGuard guard = make_guard(guard_opts);
  std::vector<leib::CheckResult> results;
  if (name == "all") {
    results = leib::run_all_checks(a, guard);
  } else {
    auto r = leib::run_check(name, a, guard);
    if (!r) {
      std::cerr << "unknown check '" << name << "'; valid names:";
      for (const auto& n : leib::check_names()) std::cerr << " " << n;
      std::cerr << " all\n";
      return kExitUsage;
    }
    results.push_back(*r);
  }
  std::cout << (json ? leib::check_results_json(results)
                     : leib::check_results_text(results));
  for (const auto& r : results) {
    if (r.status == leib::CheckStatus::Fail) return kExitSemantic;
  }
  return kExitOk;
}

leib::LeibnizAlgebra build_example(const std::string& name, long long p) {
  using namespace leib;
  FieldSpec f = (p == 0) ? FieldSpec::rationals() : FieldSpec::gf(p);
  if (name == "heisenberg") return heisenberg_example(p);
  if (name == "counter") return counterexample(p);
  if (name == "sl2") return sl2(f);
  if (name == "type2") return type2(make_type2_spec(f, 1, 1, {1}, Type2Spec::RightMode::Negate), f);
  Matrix act(f, 2, 2);
  act.at(0, 0) = Scalar::one(f);
  act.at(1, 1) = Scalar::of(f, -1);
  Type1Spec spec{2, {act}};
  if (name == "type1") return type1(spec);
  // typestar
  Subspace a1 = Subspace::span(f, 3, {unit_vec(f, 3, 0)});
  Subspace a2 = Subspace::span(f, 3, {unit_vec(f, 3, 1)});
  return type_star(spec, a1, a2);
}

int cmd_example(const std::string& name, long long p, const std::string& out) {
  leib::LeibnizAlgebra a = build_example(name, p);
  std::string text = leib::emit_algebra(a);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << out << "\n";
      return kExitUsage;
    }
    os << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant toolkit for Leibniz algebras"};
  app.require_subcommand(1);

  GuardOptions guard_opts;
  bool json = false, unchecked = false;
  std::uint64_t seed = 0x5e1b;  // accepted for heuristic reproducibility
  std::string path, check_name = "all", example_name, out_path;
  long long p = 2;

  auto* validate = app.add_subcommand("validate", "Parse a file and verify the defining identity");
  validate->add_option("path", path)->required();

  auto* report = app.add_subcommand("report", "Print the full invariant profile of an algebra");
  report->add_option("path", path)->required();
  report->add_flag("--json", json, "Machine-readable output");
  report->add_flag("--unchecked", unchecked, "Skip identity validation on parse");
  report->add_option("--seed", seed, "Seed for randomized heuristics");
  add_guard_options(report, guard_opts);

  auto* check = app.add_subcommand("check", "Run structural checks against an algebra");
  check->add_option("name", check_name)->required();
  check->add_option("path", path)->required();
  check->add_flag("--json", json, "Machine-readable output");
  check->add_flag("--unchecked", unchecked, "Skip identity validation on parse");
  check->add_option("--seed", seed, "Seed for randomized heuristics");
  add_guard_options(check, guard_opts);

  auto* example = app.add_subcommand("example", "Write a built-in algebra as a file");
  example->add_option("name", example_name)
      ->required()
      ->check(CLI::IsMember({"heisenberg", "counter", "sl2", "type1", "type2", "typestar"}));
  example->add_option("--p", p, "Prime modulus; 0 selects the rationals");
  example->add_option("-o,--output", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (report->parsed()) return cmd_report(path, json, unchecked, guard_opts);
    if (check->parsed()) return cmd_check(path, check_name, json, unchecked, guard_opts);
    return cmd_example(example_name, p, out_path);
  } catch (const leib::FormatError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const leib::LeibnizViolationError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const leib::ResourceGuardError& e) {
    std::cerr << "enumeration budget exceeded: " << e.what() << "\n"
              << "raise --max-enum or pass --force\n";
    return kExitSemantic;
  } catch (const leib::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
