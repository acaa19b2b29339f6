#include "geossa/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace geossa {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_position(const std::vector<double>& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ';';
    out += fmt17(x[i]);
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

[[noreturn]] void config_fail(std::size_t line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double parse_real(const std::string& v, std::size_t line, const std::string& key) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    config_fail(line, "key '" + key + "' expects a number, got '" + v + "'");
  }
}

std::uint64_t parse_u64(const std::string& v, std::size_t line, const std::string& key) {
  try {
    std::size_t used = 0;
    const auto d = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    config_fail(line, "key '" + key + "' expects a nonnegative integer, got '" + v + "'");
  }
}

std::size_t parse_count(const std::string& v, std::size_t line, const std::string& key,
                        std::size_t minimum) {
  const auto u = parse_u64(v, line, key);
  if (u < minimum)
    config_fail(line, "key '" + key + "' must be >= " + std::to_string(minimum));
  return static_cast<std::size_t>(u);
}

}  // namespace

ProblemRef ProblemRef::parse(const std::string& token) {
  ProblemRef ref;
  if (auto id = benchmark_from_name(token)) {
    ref.kind = Kind::Benchmark;
    ref.benchmark = *id;
    ref.label = token;
    return ref;
  }
  if (token.rfind("uav:", 0) == 0) {
    ref.kind = Kind::Uav;
    ref.terrain_path = token.substr(4);
    if (ref.terrain_path.empty()) throw ConfigError("uav problem needs a terrain path");
    ref.label = "uav_" + fs::path(ref.terrain_path).stem().string();
    return ref;
  }
  if (token.rfind("eng:", 0) == 0) {
    const auto name = token.substr(4);
    if (auto id = engineering_from_name(name)) {
      ref.kind = Kind::Engineering;
      ref.engineering = *id;
      ref.label = name;
      return ref;
    }
    throw ConfigError("unknown engineering problem '" + name + "'");
  }
  throw ConfigError("unknown problem '" + token +
                    "' (expected F1..F23, uav:<terrain file> or eng:{CB,PL,RN,IRS})");
}

SsaParams ExperimentConfig::ssa_params() const {
  SsaParams p;
  p.n = n;
  p.iterations = iterations;
  p.pd_fraction = pd_fraction;
  p.sd_fraction = sd_fraction;
  p.safety_threshold = safety_threshold;
  p.epsilon = epsilon;
  p.seed = base_seed;
  return p;
}

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw ConfigError("config: no algorithms listed");
  if (problems.empty()) throw ConfigError("config: no problems listed");
  for (const auto& a : algorithms)
    if (!StrategyToggles::by_name(a))
      throw ConfigError("config: unknown algorithm preset '" + a + "'");
  if (repetitions < 1) throw ConfigError("config: repetitions must be >= 1");
  {
    std::set<std::string> labels;
    for (const auto& p : problems)
      if (!labels.insert(p.label).second)
        throw ConfigError("config: duplicate problem label '" + p.label + "'");
  }
  if (!reference.empty() &&
      std::find(algorithms.begin(), algorithms.end(), reference) == algorithms.end())
    throw ConfigError("config: reference '" + reference + "' is not in the algorithm list");
  try {
    ssa_params().validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string raw;
  std::size_t line_no = 0;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) config_fail(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) config_fail(line_no, "expected 'key = value'");
    if (!seen.insert(key).second) config_fail(line_no, "duplicate key '" + key + "'");

    if (key == "algorithms") {
      cfg.algorithms = split(value, ',');
      for (const auto& a : cfg.algorithms)
        if (!StrategyToggles::by_name(a))
          config_fail(line_no, "unknown algorithm preset '" + a + "'");
    } else if (key == "problems") {
      for (const auto& token : split(value, ',')) {
        try {
          cfg.problems.push_back(ProblemRef::parse(token));
        } catch (const ConfigError& e) {
          config_fail(line_no, e.what());
        }
      }
    } else if (key == "n") {
      cfg.n = parse_count(value, line_no, key, 2);
    } else if (key == "T" || key == "iterations") {
      cfg.iterations = static_cast<std::size_t>(parse_u64(value, line_no, key));
    } else if (key == "repetitions") {
      cfg.repetitions = parse_count(value, line_no, key, 1);
    } else if (key == "pd_fraction") {
      cfg.pd_fraction = parse_real(value, line_no, key);
    } else if (key == "sd_fraction") {
      cfg.sd_fraction = parse_real(value, line_no, key);
    } else if (key == "st") {
      cfg.safety_threshold = parse_real(value, line_no, key);
    } else if (key == "epsilon") {
      cfg.epsilon = parse_real(value, line_no, key);
    } else if (key == "base_seed") {
      cfg.base_seed = parse_u64(value, line_no, key);
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else if (key == "telemetry") {
      if (value == "None") cfg.telemetry = TelemetryLevel::None;
      else if (value == "Curve") cfg.telemetry = TelemetryLevel::Curve;
      else if (value == "CurveAndDiversity") cfg.telemetry = TelemetryLevel::CurveAndDiversity;
      else if (value == "Full") cfg.telemetry = TelemetryLevel::Full;
      else config_fail(line_no, "telemetry must be None, Curve, CurveAndDiversity or Full");
    } else if (key == "workers") {
      cfg.workers = static_cast<int>(parse_u64(value, line_no, key));
    } else if (key == "reference") {
      cfg.reference = value;
    } else if (key == "uav_interior") {
      cfg.uav_interior = parse_count(value, line_no, key, 1);
    } else if (key == "penalty_coeff") {
      cfg.engineering.penalty_coeff = parse_real(value, line_no, key);
    } else if (key == "equality_coeff") {
      cfg.engineering.equality_coeff = parse_real(value, line_no, key);
    } else if (key == "pl_theta") {
      cfg.engineering.theta = parse_real(value, line_no, key);
    } else {
      config_fail(line_no, "unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return parse_config(in);
}

std::uint64_t derive_stream_id(const std::string& algorithm, const std::string& problem,
                               std::size_t repetition) {
  return fnv1a64("run|" + algorithm + "|" + problem + "|" + std::to_string(repetition));
}

ObjectiveProblem instantiate_problem(const ProblemRef& ref, const ExperimentConfig& cfg) {
  switch (ref.kind) {
    case ProblemRef::Kind::Benchmark:
      return make_benchmark_problem(ref.benchmark);
    case ProblemRef::Kind::Uav: {
      auto problem = make_uav_problem(Terrain::load_file(ref.terrain_path), CostWeights{},
                                      cfg.uav_interior);
      problem.name = ref.label;
      return problem;
    }
    case ProblemRef::Kind::Engineering:
      return make_engineering_problem(ref.engineering, cfg.engineering);
  }
  throw std::logic_error("instantiate_problem: unreachable");
}

namespace {

struct TaskKey {
  std::size_t algorithm, problem, repetition;
};

void write_convergence_csv(const fs::path& path, const RunResult& result,
                           TelemetryLevel level) {
  std::ofstream out(path);
  out << kConvergenceHeader << '\n';
  for (const auto& row : result.curve) {
    out << row.t << ',' << fmt17(row.best_fitness) << ',';
    if (level != TelemetryLevel::Curve)
      out << fmt17(row.diversity) << ',' << fmt17(row.exploration_pct);
    else
      out << ',';
    out << '\n';
  }
}

void write_history_csv(const fs::path& path, const RunResult& result) {
  std::ofstream out(path);
  out << "t,member";
  const std::size_t dim =
      result.curve.empty() || result.curve.front().snapshot.empty()
          ? 0
          : result.curve.front().snapshot.front().size();
  for (std::size_t j = 0; j < dim; ++j) out << ",x" << j;
  out << '\n';
  for (const auto& row : result.curve)
    for (std::size_t m = 0; m < row.snapshot.size(); ++m) {
      out << row.t << ',' << m;
      for (double v : row.snapshot[m]) out << ',' << fmt17(v);
      out << '\n';
    }
}

std::string record_to_csv_row(const RunRecord& r) {
  std::string row = r.algorithm + ',' + r.problem + ',' + std::to_string(r.repetition) +
                    ',' + std::to_string(r.seed) + ',' + std::to_string(r.stream_id) + ',' +
                    fmt17(r.best_fitness) + ',' + std::to_string(r.evaluations) + ',' +
                    join_position(r.best_position);
  return row;
}

std::vector<RunRecord> load_records(const fs::path& runs_csv) {
  std::vector<RunRecord> records;
  std::ifstream in(runs_csv);
  if (!in) return records;
  std::string line;
  if (!std::getline(in, line)) return records;
  if (trim(line) != kRunsHeader)
    throw std::runtime_error("runs.csv: unexpected header (schema changed?)");
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::stringstream ss(line);
    std::string field;
    RunRecord r;
    std::getline(ss, r.algorithm, ',');
    std::getline(ss, r.problem, ',');
    std::getline(ss, field, ',');
    r.repetition = std::stoull(field);
    std::getline(ss, field, ',');
    r.seed = std::stoull(field);
    std::getline(ss, field, ',');
    r.stream_id = std::stoull(field);
    std::getline(ss, field, ',');
    r.best_fitness = std::stod(field);
    std::getline(ss, field, ',');
    r.evaluations = std::stoull(field);
    if (std::getline(ss, field, ',')) {
      std::stringstream ps(field);
      std::string coord;
      while (std::getline(ps, coord, ';'))
        if (!coord.empty()) r.best_position.push_back(std::stod(coord));
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace

GridOutcome run_grid(const ExperimentConfig& cfg, bool resume) {
  cfg.validate();
  const fs::path out_dir(cfg.output_dir);
  fs::create_directories(out_dir);
  const bool telemetry_on = cfg.telemetry != TelemetryLevel::None;
  if (telemetry_on) fs::create_directories(out_dir / "convergence");
  if (cfg.telemetry == TelemetryLevel::Full) fs::create_directories(out_dir / "history");

  GridOutcome outcome;
  outcome.matrix.algorithms = cfg.algorithms;
  for (const auto& p : cfg.problems) outcome.matrix.problems.push_back(p.label);
  outcome.matrix.repetitions = cfg.repetitions;
  outcome.matrix.resize();
  for (auto& v : outcome.matrix.values) v = std::numeric_limits<double>::quiet_NaN();

  // Resumable records from a previous partial grid.
  std::map<std::string, RunRecord> done;
  if (resume) {
    for (auto& r : load_records(out_dir / "runs.csv")) {
      const std::string key = r.algorithm + '|' + r.problem + '|' + std::to_string(r.repetition);
      done.emplace(key, std::move(r));
    }
  }

  // Problems are instantiated once and shared; evaluations are reentrant.
  std::vector<ObjectiveProblem> problems;
  problems.reserve(cfg.problems.size());
  for (const auto& ref : cfg.problems) problems.push_back(instantiate_problem(ref, cfg));

  std::vector<TaskKey> tasks;
  const std::size_t total =
      cfg.algorithms.size() * cfg.problems.size() * cfg.repetitions;
  tasks.reserve(total);
  outcome.records.resize(total);
  std::vector<double> wall_times(total, 0.0);
  std::vector<std::string> errors(total);

  auto flat_index = [&](const TaskKey& k) {
    return (k.algorithm * cfg.problems.size() + k.problem) * cfg.repetitions + k.repetition;
  };

  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a)
    for (std::size_t p = 0; p < cfg.problems.size(); ++p)
      for (std::size_t r = 0; r < cfg.repetitions; ++r) tasks.push_back({a, p, r});

  const int requested = cfg.workers;
  const int threads = requested > 0 ? requested : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t ti = 0; ti < static_cast<std::ptrdiff_t>(tasks.size()); ++ti) {
    const TaskKey key = tasks[ti];
    const std::size_t slot = flat_index(key);
    const auto& algorithm = cfg.algorithms[key.algorithm];
    const auto& problem_label = outcome.matrix.problems[key.problem];

    RunRecord record;
    record.algorithm = algorithm;
    record.problem = problem_label;
    record.repetition = key.repetition;
    record.seed = cfg.base_seed;
    record.stream_id = derive_stream_id(algorithm, problem_label, key.repetition);
    record.best_fitness = std::numeric_limits<double>::quiet_NaN();

    const std::string done_key =
        algorithm + '|' + problem_label + '|' + std::to_string(key.repetition);
    if (const auto it = done.find(done_key); it != done.end()) {
      outcome.records[slot] = it->second;
      continue;
    }

    try {
      const auto toggles = *StrategyToggles::by_name(algorithm);
      RngStream stream(cfg.base_seed, record.stream_id);
      const auto t0 = std::chrono::steady_clock::now();
      const RunResult result =
          run_optimizer(problems[key.problem], cfg.ssa_params(), toggles, stream,
                        cfg.telemetry == TelemetryLevel::Full);
      record.wall_time_sec =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      record.best_fitness = result.best_fitness;
      record.best_position = result.best_position;
      record.evaluations = result.evaluations;
      wall_times[slot] = record.wall_time_sec;

      if (telemetry_on) {
        const std::string stem =
            algorithm + "_" + problem_label + "_" + std::to_string(key.repetition);
        write_convergence_csv(out_dir / "convergence" / (stem + ".csv"), result,
                              cfg.telemetry);
        if (cfg.telemetry == TelemetryLevel::Full)
          write_history_csv(out_dir / "history" / (stem + ".csv"), result);
      }
    } catch (const std::exception& e) {
      errors[slot] = "run " + done_key + " failed: " + e.what();
    }
    outcome.records[slot] = std::move(record);
  }

  std::size_t resumed = 0;
  for (const auto& r : outcome.records)
    if (done.count(r.algorithm + '|' + r.problem + '|' + std::to_string(r.repetition)))
      ++resumed;
  outcome.skipped = resume ? resumed : 0;

  for (auto& e : errors)
    if (!e.empty()) outcome.failures.push_back(std::move(e));

  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a)
    for (std::size_t p = 0; p < cfg.problems.size(); ++p)
      for (std::size_t r = 0; r < cfg.repetitions; ++r)
        outcome.matrix.at(a, p, r) =
            outcome.records[flat_index({a, p, r})].best_fitness;

  // runs.csv: deterministic content, stable order. Failed runs are left out
  // so a --resume pass retries them.
  {
    std::ofstream out(out_dir / "runs.csv");
    out << kRunsHeader << '\n';
    for (const auto& r : outcome.records)
      if (!std::isnan(r.best_fitness)) out << record_to_csv_row(r) << '\n';
  }

  // metadata.json: config echo, code version, stream-id audit, timings.
  {
    json meta;
    meta["schema_version"] = kSchemaVersion;
    meta["code_version"] = GEOSSA_VERSION;
    meta["benchmark_constants_fnv1a64"] = benchmark_constants_checksum();
    json jcfg;
    jcfg["algorithms"] = cfg.algorithms;
    {
      std::vector<std::string> labels;
      for (const auto& p : cfg.problems) labels.push_back(p.label);
      jcfg["problems"] = labels;
    }
    jcfg["n"] = cfg.n;
    jcfg["iterations"] = cfg.iterations;
    jcfg["repetitions"] = cfg.repetitions;
    jcfg["pd_fraction"] = cfg.pd_fraction;
    jcfg["sd_fraction"] = cfg.sd_fraction;
    jcfg["st"] = cfg.safety_threshold;
    jcfg["base_seed"] = cfg.base_seed;
    jcfg["uav_interior"] = cfg.uav_interior;
    jcfg["penalty_coeff"] = cfg.engineering.penalty_coeff;
    jcfg["equality_coeff"] = cfg.engineering.equality_coeff;
    jcfg["pl_theta"] = cfg.engineering.theta;
    meta["config"] = jcfg;
    json streams = json::array();
    for (const auto& r : outcome.records)
      streams.push_back({{"algorithm", r.algorithm},
                         {"problem", r.problem},
                         {"repetition", r.repetition},
                         {"stream_id", r.stream_id}});
    meta["streams"] = streams;
    meta["wall_time_sec"] = wall_times;
    meta["failures"] = outcome.failures;
    std::ofstream out(out_dir / "metadata.json");
    out << meta.dump(2) << '\n';
  }

  if (outcome.failures.empty()) {
    const std::string reference =
        cfg.reference.empty() ? cfg.algorithms.front() : cfg.reference;
    emit_reports(outcome.matrix, reference, cfg.output_dir);
  }
  return outcome;
}

void emit_reports(const RunMatrix& matrix, const std::string& reference_label,
                  const std::string& output_dir) {
  const std::size_t na = matrix.algorithms.size();
  const std::size_t np = matrix.problems.size();

  {
    std::vector<std::string> missing;
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t p = 0; p < np; ++p)
        for (std::size_t r = 0; r < matrix.repetitions; ++r)
          if (std::isnan(matrix.at(a, p, r)))
            missing.push_back(matrix.algorithms[a] + '|' + matrix.problems[p] + '|' +
                              std::to_string(r));
    if (!missing.empty()) {
      std::string msg = "emit_reports: matrix incomplete, missing cells:";
      for (const auto& m : missing) msg += ' ' + m;
      throw std::runtime_error(msg);
    }
  }

  const auto ref_it =
      std::find(matrix.algorithms.begin(), matrix.algorithms.end(), reference_label);
  if (ref_it == matrix.algorithms.end())
    throw std::runtime_error("emit_reports: reference '" + reference_label +
                             "' not present in matrix");
  const std::size_t ref = static_cast<std::size_t>(ref_it - matrix.algorithms.begin());

  const fs::path dir(output_dir);
  fs::create_directories(dir);

  {
    std::ofstream out(dir / "summary_ave_std.csv");
    out << kSummaryHeader << '\n';
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t p = 0; p < np; ++p) {
        const auto ms = ave_std(matrix.samples(a, p));
        out << matrix.algorithms[a] << ',' << matrix.problems[p] << ',' << fmt17(ms.mean)
            << ',' << fmt17(ms.std) << '\n';
      }
  }

  {
    std::ofstream out(dir / "wilcoxon.csv");
    out << kWilcoxonHeader << '\n';
    for (std::size_t a = 0; a < na; ++a) {
      if (a == ref) continue;
      for (std::size_t p = 0; p < np; ++p) {
        const auto w = wilcoxon_signed_rank(matrix.samples(a, p), matrix.samples(ref, p));
        out << matrix.algorithms[a] << ',' << matrix.problems[p] << ','
            << (w.degenerate ? "" : fmt17(w.p_two_sided)) << ',' << fmt17(w.w_plus) << ','
            << w.n_effective << ',' << w.zeros_dropped << ',' << (w.exact ? 1 : 0) << ','
            << (w.degenerate ? 1 : 0) << '\n';
      }
    }
  }

  if (na >= 2 && matrix.repetitions >= 2) {
    const auto fr = friedman_ranks(matrix);
    std::ofstream out(dir / "friedman.csv");
    out << "problem";
    for (const auto& a : matrix.algorithms) out << ',' << a;
    out << '\n';
    for (std::size_t p = 0; p < np; ++p) {
      out << matrix.problems[p];
      for (std::size_t a = 0; a < na; ++a) out << ',' << fmt17(fr.per_problem_ranks[p][a]);
      out << '\n';
    }
    out << "AFV";
    for (std::size_t a = 0; a < na; ++a) out << ',' << fmt17(fr.afv[a]);
    out << '\n';
    out << "Rank";
    for (std::size_t a = 0; a < na; ++a) {
      std::size_t rank = 1;
      for (std::size_t b = 0; b < na; ++b)
        if (fr.afv[b] < fr.afv[a]) ++rank;
      out << ',' << rank;
    }
    out << '\n';
  }

  {
    const auto wtl = win_tie_loss(matrix, ref, 0.05);
    std::ofstream out(dir / "wtl_oe.csv");
    out << kWtlHeader << '\n';
    for (std::size_t a = 0; a < na; ++a) {
      if (a == ref) {
        out << matrix.algorithms[a] << ",-,-,-,-\n";
        continue;
      }
      const auto& w = wtl[a];
      char oe[32];
      std::snprintf(oe, sizeof oe, "%.2f", overall_effectiveness(w, np));
      out << matrix.algorithms[a] << ',' << w.wins << ',' << w.ties << ',' << w.losses
          << ',' << oe << '\n';
    }
  }
}

RunMatrix load_run_matrix(const std::string& runs_csv_path) {
  const auto records = load_records(runs_csv_path);
  if (records.empty()) throw std::runtime_error("no records in " + runs_csv_path);
  RunMatrix matrix;
  std::size_t max_rep = 0;
  for (const auto& r : records) {
    if (std::find(matrix.algorithms.begin(), matrix.algorithms.end(), r.algorithm) ==
        matrix.algorithms.end())
      matrix.algorithms.push_back(r.algorithm);
    if (std::find(matrix.problems.begin(), matrix.problems.end(), r.problem) ==
        matrix.problems.end())
      matrix.problems.push_back(r.problem);
    max_rep = std::max(max_rep, r.repetition);
  }
  matrix.repetitions = max_rep + 1;
  matrix.resize();
  for (auto& v : matrix.values) v = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : records) {
    const auto a = static_cast<std::size_t>(
        std::find(matrix.algorithms.begin(), matrix.algorithms.end(), r.algorithm) -
        matrix.algorithms.begin());
    const auto p = static_cast<std::size_t>(
        std::find(matrix.problems.begin(), matrix.problems.end(), r.problem) -
        matrix.problems.begin());
    matrix.at(a, p, r.repetition) = r.best_fitness;
  }
  return matrix;
}

}  // namespace geossa
