#include "geossa/benchmarks.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace geossa {

namespace {

using std::numbers::pi;

constexpr std::array<BenchmarkSpec, kBenchmarkCount> kSpecs{{
    {BenchmarkId::F1, "Sphere", 30, -100.0, 100.0, 0.0, BenchmarkCategory::Unimodal},
    {BenchmarkId::F2, "Schwefel 2.22", 30, -10.0, 10.0, 0.0, BenchmarkCategory::Unimodal},
    {BenchmarkId::F3, "Schwefel 1.2", 30, -100.0, 100.0, 0.0, BenchmarkCategory::Unimodal},
    {BenchmarkId::F4, "Schwefel 2.21", 30, -100.0, 100.0, 0.0, BenchmarkCategory::Unimodal},
    {BenchmarkId::F5, "Rosenbrock", 30, -30.0, 30.0, 0.0, BenchmarkCategory::Unimodal},
    {BenchmarkId::F6, "Step", 30, -100.0, 100.0, 0.0, BenchmarkCategory::Unimodal},
    {BenchmarkId::F7, "Quartic with noise", 30, -1.28, 1.28, 0.0, BenchmarkCategory::Unimodal},
    {BenchmarkId::F8, "Generalized Schwefel", 30, -500.0, 500.0, -12569.5, BenchmarkCategory::Multimodal},
    {BenchmarkId::F9, "Rastrigin", 30, -5.12, 5.12, 0.0, BenchmarkCategory::Multimodal},
    {BenchmarkId::F10, "Ackley", 30, -32.0, 32.0, 0.0, BenchmarkCategory::Multimodal},
    {BenchmarkId::F11, "Griewank", 30, -600.0, 600.0, 0.0, BenchmarkCategory::Multimodal},
    {BenchmarkId::F12, "Penalized 1", 30, -50.0, 50.0, 0.0, BenchmarkCategory::Multimodal},
    {BenchmarkId::F13, "Penalized 2", 30, -50.0, 50.0, 0.0, BenchmarkCategory::Multimodal},
    {BenchmarkId::F14, "Shekel's Foxholes", 2, -65.536, 65.536, 0.998, BenchmarkCategory::Multimodal},
    {BenchmarkId::F15, "Kowalik", 4, -5.0, 5.0, 0.0003075, BenchmarkCategory::Composition},
    {BenchmarkId::F16, "Six-Hump Camel-Back", 2, -5.0, 5.0, -1.0316, BenchmarkCategory::Composition},
    {BenchmarkId::F17, "Branin", 2, -5.0, 15.0, 0.398, BenchmarkCategory::Composition},
    {BenchmarkId::F18, "Goldstein-Price", 2, -2.0, 2.0, 3.0, BenchmarkCategory::Composition},
    {BenchmarkId::F19, "Hartman 3", 3, 0.0, 1.0, -3.8628, BenchmarkCategory::Composition},
    {BenchmarkId::F20, "Hartman 6", 6, 0.0, 1.0, -3.32, BenchmarkCategory::Composition},
    {BenchmarkId::F21, "Shekel 5", 4, 0.0, 10.0, -10.1532, BenchmarkCategory::Composition},
    {BenchmarkId::F22, "Shekel 7", 4, 0.0, 10.0, -10.4029, BenchmarkCategory::Composition},
    {BenchmarkId::F23, "Shekel 10", 4, 0.0, 10.0, -10.5364, BenchmarkCategory::Composition},
}};

CoefficientTables make_tables() {
  CoefficientTables t{};
  constexpr std::array<double, 5> base{-32.0, -16.0, 0.0, 16.0, 32.0};
  for (std::size_t j = 0; j < 25; ++j) {
    t.foxholes_a[0][j] = base[j % 5];
    t.foxholes_a[1][j] = base[j / 5];
  }
  t.kowalik_a = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                 0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
  constexpr std::array<double, 11> kowalik_b_inv{0.25, 0.5, 1.0, 2.0, 4.0, 6.0,
                                                 8.0, 10.0, 12.0, 14.0, 16.0};
  for (std::size_t i = 0; i < 11; ++i) t.kowalik_b[i] = 1.0 / kowalik_b_inv[i];

  t.hartman3_a = {{{3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}}};
  t.hartman3_c = {1.0, 1.2, 3.0, 3.2};
  t.hartman3_p = {{{0.3689, 0.1170, 0.2673},
                   {0.4699, 0.4387, 0.7470},
                   {0.1091, 0.8732, 0.5547},
                   {0.03815, 0.5743, 0.8828}}};

  t.hartman6_a = {{{10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
                   {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
                   {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
                   {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}}};
  t.hartman6_c = {1.0, 1.2, 3.0, 3.2};
  t.hartman6_p = {{{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                   {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                   {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                   {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};

  t.shekel_a = {{{4.0, 4.0, 4.0, 4.0},
                 {1.0, 1.0, 1.0, 1.0},
                 {8.0, 8.0, 8.0, 8.0},
                 {6.0, 6.0, 6.0, 6.0},
                 {3.0, 7.0, 3.0, 7.0},
                 {2.0, 9.0, 2.0, 9.0},
                 {5.0, 5.0, 3.0, 3.0},
                 {8.0, 1.0, 8.0, 1.0},
                 {6.0, 2.0, 6.0, 2.0},
                 {7.0, 3.6, 7.0, 3.6}}};
  t.shekel_c = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
  return t;
}

// Piecewise boundary penalty used inside F12/F13. Zero exactly on [-a, a].
double u_penalty(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

double shekel(std::span<const double> x, std::size_t m) {
  const auto& t = benchmark_coefficients();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double inner = t.shekel_c[i];
    for (std::size_t j = 0; j < 4; ++j) {
      const double d = x[j] - t.shekel_a[i][j];
      inner += d * d;
    }
    sum -= 1.0 / inner;
  }
  return sum;
}

double evaluate_impl(BenchmarkId id, std::span<const double> x, RandomSource* noise) {
  const std::size_t n = x.size();
  switch (id) {
    case BenchmarkId::F1: {
      double s = 0.0;
      for (double v : x) s += v * v;
      return s;
    }
    case BenchmarkId::F2: {
      double sum = 0.0, prod = 1.0;
      for (double v : x) {
        sum += std::abs(v);
        prod *= std::abs(v);
      }
      return sum + prod;
    }
    case BenchmarkId::F3: {
      double s = 0.0, prefix = 0.0;
      for (double v : x) {
        prefix += v;
        s += prefix * prefix;
      }
      return s;
    }
    case BenchmarkId::F4: {
      double m = 0.0;
      for (double v : x) m = std::max(m, std::abs(v));
      return m;
    }
    case BenchmarkId::F5: {
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
      }
      return s;
    }
    case BenchmarkId::F6: {
      double s = 0.0;
      for (double v : x) {
        const double step = std::floor(v + 0.5);
        s += step * step;
      }
      return s;
    }
    case BenchmarkId::F7: {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        s += static_cast<double>(i + 1) * x[i] * x[i] * x[i] * x[i];
      if (noise) s += noise->uniform01();
      return s;
    }
    case BenchmarkId::F8: {
      double s = 0.0;
      for (double v : x) s += -v * std::sin(std::sqrt(std::abs(v)));
      return s;
    }
    case BenchmarkId::F9: {
      double s = 0.0;
      for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
      return s;
    }
    case BenchmarkId::F10: {
      double sq = 0.0, cs = 0.0;
      for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * pi * v);
      }
      const double inv_n = 1.0 / static_cast<double>(n);
      // Evaluated left to right so the exact double floor at the origin is
      // 4.4409e-16, the value the standard suite reports.
      return -20.0 * std::exp(-0.2 * std::sqrt(sq * inv_n)) - std::exp(cs * inv_n) +
             20.0 + std::numbers::e;
    }
    case BenchmarkId::F11: {
      double sum = 0.0, prod = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
      }
      return sum / 4000.0 - prod + 1.0;
    }
    case BenchmarkId::F12: {
      auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
      double s = 10.0 * std::pow(std::sin(pi * y(0)), 2);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = y(i) - 1.0;
        s += d * d * (1.0 + 10.0 * std::pow(std::sin(pi * y(i + 1)), 2));
      }
      const double last = y(n - 1) - 1.0;
      s += last * last;
      s *= pi / static_cast<double>(n);
      for (double v : x) s += u_penalty(v, 10.0, 100.0, 4.0);
      return s;
    }
    case BenchmarkId::F13: {
      double s = std::pow(std::sin(3.0 * pi * x[0]), 2);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = x[i] - 1.0;
        s += d * d * (1.0 + std::pow(std::sin(3.0 * pi * x[i + 1]), 2));
      }
      const double d = x[n - 1] - 1.0;
      s += d * d * (1.0 + std::pow(std::sin(2.0 * pi * x[n - 1]), 2));
      s *= 0.1;
      for (double v : x) s += u_penalty(v, 5.0, 100.0, 4.0);
      return s;
    }
    case BenchmarkId::F14: {
      const auto& t = benchmark_coefficients();
      double s = 1.0 / 500.0;
      for (std::size_t j = 0; j < 25; ++j) {
        double inner = static_cast<double>(j + 1);
        for (std::size_t i = 0; i < 2; ++i)
          inner += std::pow(x[i] - t.foxholes_a[i][j], 6);
        s += 1.0 / inner;
      }
      return 1.0 / s;
    }
    case BenchmarkId::F15: {
      const auto& t = benchmark_coefficients();
      double s = 0.0;
      for (std::size_t i = 0; i < 11; ++i) {
        const double b = t.kowalik_b[i];
        const double r =
            t.kowalik_a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += r * r;
      }
      return s;
    }
    case BenchmarkId::F16: {
      const double a = x[0], b = x[1];
      return 4.0 * a * a - 2.1 * std::pow(a, 4) + std::pow(a, 6) / 3.0 + a * b -
             4.0 * b * b + 4.0 * std::pow(b, 4);
    }
    case BenchmarkId::F17: {
      const double a = x[0], b = x[1];
      const double q = b - 5.1 / (4.0 * pi * pi) * a * a + 5.0 / pi * a - 6.0;
      return q * q + 10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(a) + 10.0;
    }
    case BenchmarkId::F18: {
      const double a = x[0], b = x[1];
      const double t1 = 1.0 + std::pow(a + b + 1.0, 2) *
                                  (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b +
                                   6.0 * a * b + 3.0 * b * b);
      const double t2 = 30.0 + std::pow(2.0 * a - 3.0 * b, 2) *
                                   (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b -
                                    36.0 * a * b + 27.0 * b * b);
      return t1 * t2;
    }
    case BenchmarkId::F19: {
      const auto& t = benchmark_coefficients();
      double s = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        double expo = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
          const double d = x[j] - t.hartman3_p[i][j];
          expo += t.hartman3_a[i][j] * d * d;
        }
        s -= t.hartman3_c[i] * std::exp(-expo);
      }
      return s;
    }
    case BenchmarkId::F20: {
      const auto& t = benchmark_coefficients();
      double s = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        double expo = 0.0;
        for (std::size_t j = 0; j < 6; ++j) {
          const double d = x[j] - t.hartman6_p[i][j];
          expo += t.hartman6_a[i][j] * d * d;
        }
        s -= t.hartman6_c[i] * std::exp(-expo);
      }
      return s;
    }
    case BenchmarkId::F21:
      return shekel(x, 5);
    case BenchmarkId::F22:
      return shekel(x, 7);
    case BenchmarkId::F23:
      return shekel(x, 10);
  }
  throw std::invalid_argument("benchmark_evaluate: unknown function id");
}

}  // namespace

const BenchmarkSpec& benchmark_spec(BenchmarkId id) {
  const auto index = static_cast<std::size_t>(id) - 1;
  if (index >= kBenchmarkCount)
    throw std::invalid_argument("benchmark_spec: unknown function id");
  return kSpecs[index];
}

std::span<const BenchmarkSpec> all_benchmark_specs() { return kSpecs; }

SearchSpace benchmark_space(BenchmarkId id) {
  const auto& spec = benchmark_spec(id);
  return SearchSpace::cube(spec.dim, spec.lower, spec.upper);
}

std::optional<BenchmarkId> benchmark_from_name(std::string_view name) {
  if (name.size() < 2 || name.size() > 3 || name[0] != 'F') return std::nullopt;
  int k = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    k = 10 * k + (c - '0');
  }
  if (k < 1 || static_cast<std::size_t>(k) > kBenchmarkCount) return std::nullopt;
  return static_cast<BenchmarkId>(k);
}

double benchmark_evaluate(BenchmarkId id, std::span<const double> x, RandomSource* noise,
                          bool* out_of_bounds) {
  const auto& spec = benchmark_spec(id);
  if (x.size() != spec.dim)
    throw std::invalid_argument("benchmark_evaluate: dimension mismatch for " +
                                std::string(spec.name));
  if (out_of_bounds) {
    *out_of_bounds = false;
    for (double v : x)
      if (v < spec.lower || v > spec.upper) {
        *out_of_bounds = true;
        break;
      }
  }
  return evaluate_impl(id, x, noise);
}

ObjectiveProblem make_benchmark_problem(BenchmarkId id) {
  ObjectiveProblem problem;
  problem.name = "F" + std::to_string(static_cast<int>(id));
  problem.space = benchmark_space(id);
  problem.eval = [id](std::span<const double> x, RandomSource* noise) {
    return benchmark_evaluate(id, x, noise);
  };
  return problem;
}

const CoefficientTables& benchmark_coefficients() {
  static const CoefficientTables tables = make_tables();
  return tables;
}

namespace {

void write_rows(std::ostream& out, std::string_view table, const double* data,
                std::size_t rows, std::size_t cols) {
  char buf[64];
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", data[i * cols + j]);
      out << table << ',' << i << ',' << j << ',' << buf << '\n';
    }
}

}  // namespace

void write_benchmark_constants_csv(std::ostream& out) {
  const auto& t = benchmark_coefficients();
  out << "table,row,col,value\n";
  write_rows(out, "foxholes_a", t.foxholes_a[0].data(), 2, 25);
  write_rows(out, "kowalik_a", t.kowalik_a.data(), 1, 11);
  write_rows(out, "kowalik_b", t.kowalik_b.data(), 1, 11);
  write_rows(out, "hartman3_a", t.hartman3_a[0].data(), 4, 3);
  write_rows(out, "hartman3_c", t.hartman3_c.data(), 1, 4);
  write_rows(out, "hartman3_p", t.hartman3_p[0].data(), 4, 3);
  write_rows(out, "hartman6_a", t.hartman6_a[0].data(), 4, 6);
  write_rows(out, "hartman6_c", t.hartman6_c.data(), 1, 4);
  write_rows(out, "hartman6_p", t.hartman6_p[0].data(), 4, 6);
  write_rows(out, "shekel_a", t.shekel_a[0].data(), 10, 4);
  write_rows(out, "shekel_c", t.shekel_c.data(), 1, 10);
}

std::uint64_t benchmark_constants_checksum() {
  std::ostringstream oss;
  write_benchmark_constants_csv(oss);
  return fnv1a64(oss.str());
}

}  // namespace geossa
