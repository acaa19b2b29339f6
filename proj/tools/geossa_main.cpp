// Command-line front end: run experiment grids, rebuild report tables,
// verify the RNG against its golden file, list the available problems.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geossa/experiment.hpp"

namespace {

using namespace geossa;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_run(const std::string& config_path, const CLI::App& sub, std::size_t n,
            std::size_t iterations, std::size_t repetitions, std::uint64_t seed,
            std::string output_dir, int workers, std::string telemetry,
            std::string reference, bool resume) {
  ExperimentConfig cfg;
  try {
    cfg = parse_config_file(config_path);
    if (sub.count("--n")) cfg.n = n;
    if (sub.count("--iterations")) cfg.iterations = iterations;
    if (sub.count("--repetitions")) cfg.repetitions = repetitions;
    if (sub.count("--seed")) cfg.base_seed = seed;
    if (sub.count("--output-dir")) cfg.output_dir = output_dir;
    if (sub.count("--workers")) cfg.workers = workers;
    if (sub.count("--reference")) cfg.reference = reference;
    if (sub.count("--telemetry")) {
      if (telemetry == "None") cfg.telemetry = TelemetryLevel::None;
      else if (telemetry == "Curve") cfg.telemetry = TelemetryLevel::Curve;
      else if (telemetry == "CurveAndDiversity") cfg.telemetry = TelemetryLevel::CurveAndDiversity;
      else if (telemetry == "Full") cfg.telemetry = TelemetryLevel::Full;
      else throw ConfigError("--telemetry must be None, Curve, CurveAndDiversity or Full");
    }
    if (const char* env = std::getenv("GEOSSA_OUTPUT_DIR")) cfg.output_dir = env;
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const auto outcome = run_grid(cfg, resume);
  std::cout << "grid complete: " << outcome.records.size() << " runs ("
            << outcome.skipped << " resumed), " << outcome.failures.size()
            << " failures -> " << cfg.output_dir << '\n';
  for (const auto& f : outcome.failures) std::cerr << "  " << f << '\n';
  return outcome.failures.empty() ? 0 : 1;
}

int cmd_report(const std::string& results_dir, const std::string& reference) {
  try {
    const auto matrix = load_run_matrix(results_dir + "/runs.csv");
    emit_reports(matrix, reference, results_dir);
    std::cout << "reports written to " << results_dir << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_verify_rng(const std::string& reference_path) {
  RngStream uniform_stream(42, 0);
  RngStream normal_stream(42, 0);
  std::ostringstream produced;
  produced << "kind,index,value\n";
  for (int i = 0; i < 10; ++i)
    produced << "uniform," << i << ',' << fmt17(uniform_stream.uniform01()) << '\n';
  for (int i = 0; i < 10; ++i)
    produced << "normal," << i << ',' << fmt17(normal_stream.standard_normal()) << '\n';

  std::cout << produced.str();
  std::ifstream golden(reference_path);
  if (!golden) {
    std::cerr << "error: cannot open reference file " << reference_path << '\n';
    return 1;
  }
  std::stringstream expected;
  expected << golden.rdbuf();
  if (expected.str() != produced.str()) {
    std::cerr << "RNG MISMATCH against " << reference_path << '\n';
    return 1;
  }
  std::cout << "rng matches " << reference_path << '\n';
  return 0;
}

int cmd_list_problems() {
  std::cout << "benchmark functions (id, name, dim, bounds, best value):\n";
  for (const auto& spec : all_benchmark_specs())
    std::cout << "  F" << static_cast<int>(spec.id) << "  " << spec.name << "  dim="
              << spec.dim << "  [" << spec.lower << ", " << spec.upper << "]  best="
              << spec.best_value << '\n';
  std::cout << "engineering problems (use eng:<id>):\n";
  for (const auto id : {EngineeringId::CB, EngineeringId::PL, EngineeringId::RN,
                        EngineeringId::IRS})
    std::cout << "  " << engineering_name(id) << "  dim=" << engineering_dim(id) << '\n';
  std::cout << "uav path planning: uav:<terrain file> (see data/terrain_default.txt)\n";
  std::cout << "algorithm presets: SSA, GeoSSA, GeoSSA1, GeoSSA2, GeoSSA3\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparrow-search optimization experiment runner"};
  app.require_subcommand(1);

  std::string config_path, results_dir, reference = "GeoSSA";
  std::string output_dir, telemetry;
  std::string rng_reference = "data/rng_reference.csv";
  std::size_t n = 30, iterations = 500, repetitions = 30;
  std::uint64_t seed = 42;
  int workers = 0;
  bool resume = false;

  auto* run = app.add_subcommand("run", "execute an experiment grid from a config file");
  run->add_option("config", config_path, "config file")->required();
  run->add_option("--n", n, "population size override");
  run->add_option("-T,--iterations", iterations, "iteration budget override");
  run->add_option("--repetitions", repetitions, "repetition count override");
  run->add_option("--seed", seed, "base seed override");
  run->add_option("--output-dir", output_dir, "output directory override");
  run->add_option("--workers", workers, "worker thread count (0 = all cores)");
  run->add_option("--telemetry", telemetry, "None|Curve|CurveAndDiversity|Full");
  run->add_option("--reference", reference, "reference algorithm for reports");
  run->add_flag("--resume", resume, "skip runs already present in runs.csv");

  auto* report = app.add_subcommand("report", "rebuild report tables from runs.csv");
  report->add_option("results_dir", results_dir, "directory holding runs.csv")->required();
  report->add_option("--reference", reference, "reference algorithm")->required();

  auto* verify = app.add_subcommand("verify-rng", "check the RNG against its golden file");
  verify->add_option("--reference-file", rng_reference, "golden draw file");

  app.add_subcommand("list-problems", "list available problems and presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(config_path, *run, n, iterations, repetitions, seed, output_dir,
                     workers, telemetry, reference, resume);
    if (report->parsed()) return cmd_report(results_dir, reference);
    if (verify->parsed()) return cmd_verify_rng(rng_reference);
    return cmd_list_problems();
  } catch (const geossa::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
