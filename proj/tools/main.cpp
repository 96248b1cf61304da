// fracdim -- correlation fractal dimension estimation by box-counting.
//
// Subcommands: estimate (fit D2 for a point file), generate (synthetic
// datasets), compare (check fd and ffd agree cell-for-cell), bench (timing
// and work-counter report).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracdim/boxcount.hpp"
#include "fracdim/dataset.hpp"
#include "fracdim/error.hpp"
#include "fracdim/fit.hpp"
#include "fracdim/generators.hpp"
#include "fracdim/grid.hpp"
#include "fracdim/io.hpp"

namespace {

// 0 success, 1 data error, 2 usage error, 3 comparison mismatch
constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct InputOptions {
  std::string path = "-";
  char delimiter = ',';
  bool has_header = false;
};

fracdim::RawDataset read_input(const InputOptions& in) {
  fracdim::IngestOptions opts;
  opts.delimiter = in.delimiter;
  opts.has_header = in.has_header;
  if (in.path == "-") return fracdim::read_points(std::cin, opts);
  std::ifstream file(in.path);
  if (!file) throw fracdim::DomainError("cannot open input file '" + in.path + "'");
  return fracdim::read_points(file, opts);
}

std::string format_sig6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// "auto", "full", or "j_min..j_max"
std::optional<fracdim::FitSpec> parse_fit_spec(const std::string& text) {
  if (text == "auto") return fracdim::FitSpec::auto_range();
  if (text == "full") return fracdim::FitSpec::full_range();
  const auto sep = text.find("..");
  if (sep == std::string::npos) return std::nullopt;
  try {
    std::size_t lo_end = 0, hi_end = 0;
    const int lo = std::stoi(text.substr(0, sep), &lo_end);
    const std::string hi_text = text.substr(sep + 2);
    const int hi = std::stoi(hi_text, &hi_end);
    if (lo_end != sep || hi_end != hi_text.size() || lo < 1 || hi <= lo) return std::nullopt;
    return fracdim::FitSpec::explicit_range({lo, hi});
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void print_estimate(const fracdim::BoxCountPlot& plot, const fracdim::D2Estimate& est) {
  std::printf("%4s  %-12s %20s  %s\n", "j", "r", "S", "log2_S");
  for (std::size_t i = 0; i < plot.records.size(); ++i) {
    const auto& rec = plot.records[i];
    std::printf("%4d  %-12s %20llu  %s\n", rec.level, format_sig6(rec.radius).c_str(),
                static_cast<unsigned long long>(rec.sum_squared),
                format_sig6(est.plot.points[i].y).c_str());
  }
  std::printf("d2 = %s\n", format_sig6(est.d2).c_str());
  std::printf("r_squared = %s\n", format_sig6(est.r_squared).c_str());
  std::printf("fit_range = %d..%d\n", est.range.j_min, est.range.j_max);
  std::printf("algorithm = %s\n", fracdim::to_string(est.algorithm));
  std::printf("n = %zu\n", plot.points);
  std::printf("dim = %d\n", plot.dim);
}

int cmd_estimate(const InputOptions& input, fracdim::Algorithm algo, int levels,
                 const std::string& fit_text, fracdim::NormalizeMode mode,
                 const std::string& plot_out) {
  const auto spec = parse_fit_spec(fit_text);
  if (!spec) {
    std::cerr << "error: --fit must be auto, full, or j_min..j_max\n";
    return kExitUsage;
  }

  const fracdim::RawDataset raw = read_input(input);
  const fracdim::NormalizedDataset data = fracdim::normalize(raw, mode);
  const fracdim::RadiusSchedule schedule(levels, data.dim);
  if (spec->mode == fracdim::FitSpec::Mode::Explicit && spec->range.j_max > levels) {
    std::cerr << "error: --fit range " << spec->range.j_min << ".." << spec->range.j_max
              << " exceeds --levels " << levels << "\n";
    return kExitUsage;
  }

  const fracdim::BoxCountPlot plot =
      algo == fracdim::Algorithm::FD ? fracdim::fd(data, schedule) : fracdim::ffd(data, schedule);
  const fracdim::D2Estimate est = fracdim::fit_d2(plot, *spec);
  print_estimate(plot, est);

  if (!plot_out.empty()) {
    std::ofstream out(plot_out);
    if (!out) throw fracdim::DomainError("cannot open plot output file '" + plot_out + "'");
    fracdim::write_plot(plot, out, fracdim::PlotFormat::Csv, &est);
  }
  return kExitOk;
}

int cmd_generate(fracdim::GeneratorKind kind, std::size_t n, std::optional<int> dim,
                 std::uint64_t seed, const std::string& out_path, char delimiter) {
  int effective_dim = 2;
  switch (kind) {
    case fracdim::GeneratorKind::Sierpinski: effective_dim = 2; break;
    case fracdim::GeneratorKind::Cantor: effective_dim = 1; break;
    default: effective_dim = dim.value_or(2); break;
  }
  if (dim && *dim != effective_dim &&
      (kind == fracdim::GeneratorKind::Sierpinski || kind == fracdim::GeneratorKind::Cantor)) {
    std::cerr << "error: --type " << fracdim::to_string(kind) << " is " << effective_dim
              << "-dimensional; --dim " << *dim << " conflicts\n";
    return kExitUsage;
  }

  const fracdim::RawDataset data = fracdim::generate({kind, n, effective_dim, seed});
  if (out_path.empty() || out_path == "-") {
    fracdim::write_points(data, std::cout, delimiter);
  } else {
    std::ofstream out(out_path);
    if (!out) throw fracdim::DomainError("cannot open output file '" + out_path + "'");
    fracdim::write_points(data, out, delimiter);
  }
  return kExitOk;
}

int cmd_compare(const InputOptions& input, int levels, fracdim::NormalizeMode mode) {
  const fracdim::RawDataset raw = read_input(input);
  const fracdim::NormalizedDataset data = fracdim::normalize(raw, mode);
  const fracdim::RadiusSchedule schedule(levels, data.dim);

  const fracdim::BoxCountPlot a = fracdim::fd(data, schedule);
  const fracdim::BoxCountPlot b = fracdim::ffd(data, schedule);

  std::printf("n = %zu, dim = %d, levels = %d\n", a.points, a.dim, levels);
  for (const auto* plot : {&a, &b}) {
    const auto& c = plot->counters;
    std::printf("%-3s  dataset_scans=%llu  point_cell_updates=%llu  merge_updates=%llu  "
                "updates_per_point=%s\n",
                fracdim::to_string(plot->algorithm),
                static_cast<unsigned long long>(c.dataset_scans),
                static_cast<unsigned long long>(c.point_cell_updates),
                static_cast<unsigned long long>(c.merge_updates),
                format_sig6(static_cast<double>(c.total_updates()) /
                            static_cast<double>(plot->points)).c_str());
  }

  for (int j = 0; j < levels; ++j) {
    if (a.records[j].sum_squared != b.records[j].sum_squared) {
      std::printf("verdict: MISMATCH at level %d (fd S=%llu, ffd S=%llu)\n", a.records[j].level,
                  static_cast<unsigned long long>(a.records[j].sum_squared),
                  static_cast<unsigned long long>(b.records[j].sum_squared));
      return kExitMismatch;
    }
  }
  std::printf("verdict: IDENTICAL across %d levels\n", levels);
  return kExitOk;
}

int cmd_bench(const std::vector<fracdim::Algorithm>& algos, const std::vector<std::size_t>& sizes,
              int dim, const std::vector<int>& levels_list, int reps, std::uint64_t seed,
              const std::string& out_path) {
  std::ostringstream csv;
  csv << "algo,n,dim,levels,rep,wall_ms,point_updates,merge_updates,scans,updates_per_point\n";

  for (const std::size_t n : sizes) {
    // one dataset per size, shared by every algorithm and level count;
    // generated and normalized up front so timing sees no I/O
    const fracdim::NormalizedDataset data =
        fracdim::normalize(fracdim::gen_uniform(n, dim, seed));
    for (const int levels : levels_list) {
      const fracdim::RadiusSchedule schedule(levels, dim);
      for (const fracdim::Algorithm algo : algos) {
        std::vector<double> times;
        times.reserve(static_cast<std::size_t>(reps));
        fracdim::OpCounters counters{};
        for (int rep = 0; rep < reps; ++rep) {
          const auto start = std::chrono::steady_clock::now();
          const fracdim::BoxCountPlot plot = algo == fracdim::Algorithm::FD
                                                 ? fracdim::fd(data, schedule)
                                                 : fracdim::ffd(data, schedule);
          const auto stop = std::chrono::steady_clock::now();
          const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
          times.push_back(ms);
          counters = plot.counters;
          char wall[32];
          std::snprintf(wall, sizeof wall, "%.3f", ms);
          csv << fracdim::to_string(algo) << ',' << n << ',' << dim << ',' << levels << ','
              << rep << ',' << wall << ',' << counters.point_cell_updates << ','
              << counters.merge_updates << ',' << counters.dataset_scans << ','
              << format_sig6(static_cast<double>(counters.total_updates()) /
                             static_cast<double>(n))
              << '\n';
        }
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        std::fprintf(stderr,
                     "algo=%s n=%zu dim=%d levels=%d reps=%d median_ms=%.3f "
                     "updates_per_point=%s\n",
                     fracdim::to_string(algo), n, dim, levels, reps, median,
                     format_sig6(static_cast<double>(counters.total_updates()) /
                                 static_cast<double>(n)).c_str());
      }
    }
  }

  if (out_path.empty() || out_path == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw fracdim::DomainError("cannot open report file '" + out_path + "'");
    out << csv.str();
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"correlation fractal dimension (D2) estimation by box-counting"};
  app.require_subcommand(1);

  const std::map<std::string, fracdim::Algorithm> algo_names{
      {"fd", fracdim::Algorithm::FD}, {"ffd", fracdim::Algorithm::FFD}};
  const std::map<std::string, fracdim::NormalizeMode> normalize_names{
      {"minmax", fracdim::NormalizeMode::MinMax}, {"none", fracdim::NormalizeMode::PassThrough}};
  const std::map<std::string, fracdim::GeneratorKind> kind_names{
      {"sierpinski", fracdim::GeneratorKind::Sierpinski},
      {"uniform", fracdim::GeneratorKind::Uniform},
      {"point-mass", fracdim::GeneratorKind::PointMass},
      {"cantor", fracdim::GeneratorKind::Cantor}};

  // estimate
  auto* est = app.add_subcommand("estimate", "estimate D2 for a point file");
  InputOptions est_in;
  fracdim::Algorithm est_algo = fracdim::Algorithm::FFD;
  int est_levels = 10;
  std::string est_fit = "auto";
  fracdim::NormalizeMode est_norm = fracdim::NormalizeMode::MinMax;
  std::string est_plot_out;
  est->add_option("input", est_in.path, "point file, or - for stdin")->capture_default_str();
  est->add_option("--algo", est_algo, "estimation algorithm")
      ->transform(CLI::CheckedTransformer(algo_names))->capture_default_str();
  est->add_option("--levels", est_levels, "number of grid resolutions")
      ->check(CLI::Range(2, 64))->capture_default_str();
  est->add_option("--fit", est_fit, "regression window: auto, full, or j_min..j_max")
      ->capture_default_str();
  est->add_option("--normalize", est_norm, "minmax rescales per dimension; none requires [0,1]")
      ->transform(CLI::CheckedTransformer(normalize_names))->capture_default_str();
  est->add_option("--delimiter", est_in.delimiter, "field separator")->capture_default_str();
  est->add_flag("--header", est_in.has_header, "skip the first input line");
  est->add_option("--plot-out", est_plot_out, "write the box-count plot (CSV) here");

  // generate
  auto* gen = app.add_subcommand("generate", "write a synthetic dataset");
  fracdim::GeneratorKind gen_kind = fracdim::GeneratorKind::Uniform;
  std::size_t gen_n = 0;
  std::optional<int> gen_dim;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  char gen_delim = ',';
  gen->add_option("--type", gen_kind, "dataset family")
      ->transform(CLI::CheckedTransformer(kind_names))->required();
  gen->add_option("--n", gen_n, "number of points")->check(CLI::PositiveNumber)->required();
  gen->add_option("--dim", gen_dim, "dimension (uniform and point-mass only)")
      ->check(CLI::Range(1, 64));
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_option("--delimiter", gen_delim, "field separator")->capture_default_str();

  // compare
  auto* cmp = app.add_subcommand("compare", "run fd and ffd and require identical S values");
  InputOptions cmp_in;
  int cmp_levels = 10;
  fracdim::NormalizeMode cmp_norm = fracdim::NormalizeMode::MinMax;
  cmp->add_option("input", cmp_in.path, "point file, or - for stdin")->capture_default_str();
  cmp->add_option("--levels", cmp_levels, "number of grid resolutions")
      ->check(CLI::Range(2, 64))->capture_default_str();
  cmp->add_option("--normalize", cmp_norm, "normalization mode")
      ->transform(CLI::CheckedTransformer(normalize_names))->capture_default_str();
  cmp->add_option("--delimiter", cmp_in.delimiter, "field separator")->capture_default_str();
  cmp->add_flag("--header", cmp_in.has_header, "skip the first input line");

  // bench
  auto* bench = app.add_subcommand("bench", "time the kernels on uniform data");
  std::vector<fracdim::Algorithm> bench_algos{fracdim::Algorithm::FD, fracdim::Algorithm::FFD};
  std::vector<std::size_t> bench_sizes;
  int bench_dim = 2;
  std::vector<int> bench_levels{10};
  int bench_reps = 5;
  std::uint64_t bench_seed = 0;
  std::string bench_out;
  bench->add_option("--algos", bench_algos, "algorithms to time")
      ->transform(CLI::CheckedTransformer(algo_names))->delimiter(',');
  bench->add_option("--sizes", bench_sizes, "dataset sizes")
      ->delimiter(',')->required()->check(CLI::PositiveNumber);
  bench->add_option("--dim", bench_dim, "dataset dimension")
      ->check(CLI::Range(1, 32))->capture_default_str();
  bench->add_option("--levels", bench_levels, "grid resolution counts")
      ->delimiter(',')->check(CLI::Range(2, 64));
  bench->add_option("--reps", bench_reps, "repetitions per cell (median reported)")
      ->check(CLI::Range(1, 1000))->capture_default_str();
  bench->add_option("--seed", bench_seed, "dataset seed")->capture_default_str();
  bench->add_option("-o,--output", bench_out, "report CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*est) return cmd_estimate(est_in, est_algo, est_levels, est_fit, est_norm, est_plot_out);
  if (*gen) return cmd_generate(gen_kind, gen_n, gen_dim, gen_seed, gen_out, gen_delim);
  if (*cmp) return cmd_compare(cmp_in, cmp_levels, cmp_norm);
  if (*bench)
    return cmd_bench(bench_algos, bench_sizes, bench_dim, bench_levels, bench_reps, bench_seed,
                     bench_out);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    // parse and domain failures land here; diagnostics only, no stack traces
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
