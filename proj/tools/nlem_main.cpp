// Command-line front end: standalone median solves, image denoising runs,
// convergence traces, and benchmark tables. See README for output grammars.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nlem/admm.hpp"
#include "nlem/csv.hpp"
#include "nlem/irls.hpp"
#include "nlem/nlem.hpp"
#include "nlem/noise.hpp"
#include "nlem/patch.hpp"
#include "nlem/pgm.hpp"
#include "nlem/point_set_io.hpp"
#include "nlem/prox.hpp"
#include "nlem/psnr.hpp"
#include "nlem/types.hpp"

namespace {

struct Config {
  std::string input;
  std::vector<std::string> inputs;  // bench takes several images
  std::string out;
  std::string trace_path;
  std::string solver = "admm";
  std::vector<std::string> methods;
  std::string init;                 // empty -> sigma-dependent default
  std::string range;                // "l:u"; empty -> subcommand default
  std::string pixel;                // "r:c" for per-pixel traces
  bool psnr_mode = false;
  double sigma = 0.0;
  std::vector<double> sigmas;
  long long seed = 0;
  int iters = 4;
  double mu = 1e-3;
  double epsilon = 1e-6;
  int search = 21;
  int patch = 7;
  double h_mult = 10.0;
  int repeat = 1;
  unsigned threads = 0;
};

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::pair<double, double> parse_pair(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw std::invalid_argument(std::string(flag) + " expects the form a:b");
  std::size_t used = 0;
  double first = 0.0;
  double second = 0.0;
  try {
    first = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
    const std::string rest = text.substr(colon + 1);
    second = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) + " expects two numbers a:b");
  }
  return {first, second};
}

nlem::BoxConstraintd parse_range(const std::string& text, const nlem::BoxConstraintd& fallback) {
  if (text.empty()) return fallback;
  const auto [lower, upper] = parse_pair(text, "--range");
  return nlem::BoxConstraintd::interval(lower, upper);
}

nlem::DenoiseSolver solver_from_name(const std::string& name) {
  if (name == "admm") return nlem::DenoiseSolver::Admm;
  if (name == "irls") return nlem::DenoiseSolver::Irls;
  return nlem::DenoiseSolver::NlmOnly;
}

nlem::NlemParams make_params(const Config& cfg, double sigma, const std::string& solver) {
  nlem::NlemParams p;
  p.search = cfg.search;
  p.patch = cfg.patch;
  p.sigma = sigma;
  p.h = cfg.h_mult * std::max(sigma, 1.0);  // keeps h positive at sigma 0
  p.solver = solver_from_name(solver);
  p.solver_iters = cfg.iters;
  p.mu = cfg.mu;
  p.epsilon = cfg.epsilon;
  p.init_mode = cfg.init.empty() ? nlem::default_init_mode(sigma)
                                 : (cfg.init == "noisy" ? nlem::PatchInit::NoisyPatch
                                                        : nlem::PatchInit::NlmPatch);
  p.range = parse_range(cfg.range, nlem::BoxConstraintd::interval(0.0, 255.0));
  p.threads = cfg.threads;
  nlem::validate(p);
  return p;
}

nlem::Image denoise_once(const nlem::Image& noisy, const nlem::NlemParams& params) {
  return params.solver == nlem::DenoiseSolver::NlmOnly ? nlem::nlm_denoise(noisy, params)
                                                       : nlem::nlem_denoise(noisy, params);
}

// --- median ---------------------------------------------------------------

int run_median(const Config& cfg) {
  const nlem::BoxConstraintd box =
      parse_range(cfg.range, nlem::BoxConstraintd::unconstrained());
  if (cfg.iters < 1) throw std::invalid_argument("--iters must be at least 1");

  const nlem::PointSetd ps = nlem::read_point_set_file(cfg.input);

  nlem::SolverResultd result;
  if (cfg.solver == "admm") {
    nlem::AdmmConfigd admm;
    admm.mu = cfg.mu;
    admm.max_iter = cfg.iters;
    admm.record_trace = !cfg.trace_path.empty();
    result = nlem::admm_euclidean_median(ps, box, admm);
  } else {
    nlem::IrlsConfigd irls;
    irls.epsilon = cfg.epsilon;
    irls.max_iter = cfg.iters;
    irls.record_trace = !cfg.trace_path.empty();
    result = nlem::irls_euclidean_median(ps, irls);
    if (box.is_bounded()) {
      // IRLS itself is unconstrained; impose the box on the final point.
      result.minimizer = nlem::project_box(result.minimizer, box);
      result.objective = nlem::em_cost(ps, result.minimizer);
    }
  }

  if (!cfg.trace_path.empty()) nlem::write_trace_csv(result.trace, cfg.trace_path);

  std::string line = "{\"minimizer\":[";
  for (Eigen::Index i = 0; i < result.minimizer.size(); ++i) {
    if (i > 0) line += ',';
    line += fmt(result.minimizer(i));
  }
  line += "],\"objective\":" + fmt(result.objective);
  line += ",\"iterations\":" + std::to_string(result.iterations_run) + "}";
  std::printf("%s\n", line.c_str());
  return 0;
}

// --- denoise ----------------------------------------------------------------

std::string sibling_path(const std::string& out, const char* tag) {
  const std::filesystem::path p(out);
  std::filesystem::path named = p.parent_path();
  named /= p.stem().string() + tag + p.extension().string();
  return named.string();
}

int run_denoise(const Config& cfg) {
  if (cfg.repeat < 1) throw std::invalid_argument("--repeat must be at least 1");
  if (!(cfg.sigma >= 0.0)) throw std::invalid_argument("--sigma must be nonnegative");
  const nlem::NlemParams params = make_params(cfg, cfg.sigma, cfg.solver);

  const nlem::Image clean = nlem::read_pgm(cfg.input);

  double sum_noisy = 0.0;
  double sum_denoised = 0.0;
  for (int r = 0; r < cfg.repeat; ++r) {
    const long long seed = cfg.seed + r;
    const nlem::Image noisy =
        nlem::add_gaussian_noise(clean, cfg.sigma, static_cast<std::uint64_t>(seed));
    const nlem::Image denoised = denoise_once(noisy, params);
    const double psnr_noisy = nlem::psnr(clean, noisy);
    const double psnr_denoised = nlem::psnr(clean, denoised);
    sum_noisy += psnr_noisy;
    sum_denoised += psnr_denoised;
    std::printf("seed=%lld psnr_noisy=%.6f psnr_denoised=%.6f\n", seed, psnr_noisy,
                psnr_denoised);
    if (r == 0) {
      nlem::write_pgm(noisy, sibling_path(cfg.out, "_noisy"), nlem::PgmFormat::P5);
      nlem::write_pgm(denoised, cfg.out, nlem::PgmFormat::P5);
    }
  }
  if (cfg.repeat > 1)
    std::printf("mean psnr_noisy=%.6f psnr_denoised=%.6f\n", sum_noisy / cfg.repeat,
                sum_denoised / cfg.repeat);
  return 0;
}

// --- trace ------------------------------------------------------------------

int run_trace(const Config& cfg) {
  if (cfg.pixel.empty() == !cfg.psnr_mode)
    throw std::invalid_argument("pick exactly one of --pixel r:c and --psnr");
  if (!(cfg.sigma >= 0.0)) throw std::invalid_argument("--sigma must be nonnegative");
  const nlem::NlemParams params = make_params(cfg, cfg.sigma, cfg.solver);

  const nlem::Image clean = nlem::read_pgm(cfg.input);
  const nlem::Image noisy =
      nlem::add_gaussian_noise(clean, cfg.sigma, static_cast<std::uint64_t>(cfg.seed));

  if (cfg.psnr_mode) {
    std::vector<double> quality;
    for (const nlem::Image& frame : nlem::nlem_denoise_snapshots(noisy, params))
      quality.push_back(nlem::psnr(clean, frame));
    nlem::write_psnr_csv(quality, cfg.trace_path);
    return 0;
  }

  if (params.solver == nlem::DenoiseSolver::NlmOnly)
    throw std::invalid_argument("per-pixel traces need --solver admm or irls");

  const auto [row_d, col_d] = parse_pair(cfg.pixel, "--pixel");
  const auto row = static_cast<Eigen::Index>(row_d);
  const auto col = static_cast<Eigen::Index>(col_d);
  if (row != row_d || col != col_d || row < 0 || row >= noisy.rows() || col < 0 ||
      col >= noisy.cols())
    throw std::invalid_argument("--pixel must name a pixel inside the image");

  const nlem::PatchStack stack =
      nlem::build_patch_stack(noisy, row, col, params.search, params.patch, params.h);
  const nlem::PointSetd ps{stack.patches, stack.weights};
  const Eigen::VectorXd init = nlem::initial_patch(stack, params.init_mode);

  nlem::SolverResultd result;
  if (params.solver == nlem::DenoiseSolver::Admm) {
    nlem::AdmmConfigd admm;
    admm.mu = params.mu;
    admm.max_iter = params.solver_iters;
    admm.z_init = init;
    admm.record_trace = true;
    result = nlem::admm_euclidean_median(ps, params.range, admm);
  } else {
    nlem::IrlsConfigd irls;
    irls.epsilon = params.epsilon;
    irls.max_iter = params.solver_iters;
    irls.x_init = init;
    irls.record_trace = true;
    result = nlem::irls_euclidean_median(ps, irls);
  }
  nlem::write_trace_csv(result.trace, cfg.trace_path);
  return 0;
}

// --- bench ------------------------------------------------------------------

int run_bench(const Config& cfg) {
  if (cfg.repeat < 1) throw std::invalid_argument("--repeat must be at least 1");
  if (cfg.sigmas.empty()) throw std::invalid_argument("--sigma is required");
  for (double sigma : cfg.sigmas)
    if (!(sigma >= 0.0)) throw std::invalid_argument("--sigma must be nonnegative");
  const std::vector<std::string> methods =
      cfg.methods.empty() ? std::vector<std::string>{"admm"} : cfg.methods;

  // Validate the whole grid before touching any file.
  for (double sigma : cfg.sigmas)
    for (const std::string& method : methods) make_params(cfg, sigma, method);

  std::vector<nlem::BenchRow> rows;
  for (const std::string& path : cfg.inputs) {
    const nlem::Image clean = nlem::read_pgm(path);
    const std::string name = std::filesystem::path(path).stem().string();
    for (double sigma : cfg.sigmas) {
      std::vector<std::vector<double>> psnrs(methods.size());
      for (int r = 0; r < cfg.repeat; ++r) {
        const nlem::Image noisy = nlem::add_gaussian_noise(
            clean, sigma, static_cast<std::uint64_t>(cfg.seed + r));
        for (std::size_t m = 0; m < methods.size(); ++m) {
          const nlem::NlemParams params = make_params(cfg, sigma, methods[m]);
          psnrs[m].push_back(nlem::psnr(clean, denoise_once(noisy, params)));
        }
      }
      for (std::size_t m = 0; m < methods.size(); ++m) {
        nlem::BenchRow row;
        row.image = name;
        row.sigma = sigma;
        row.method = methods[m];
        row.repeats = cfg.repeat;
        double mean = 0.0;
        for (double v : psnrs[m]) mean += v;
        mean /= cfg.repeat;
        double variance = 0.0;
        if (std::isfinite(mean))
          for (double v : psnrs[m]) variance += (v - mean) * (v - mean);
        row.mean_psnr = mean;
        row.std_psnr = std::sqrt(variance / cfg.repeat);
        rows.push_back(std::move(row));
      }
    }
  }

  const std::string table = nlem::encode_bench_csv(rows);
  if (cfg.out.empty()) {
    std::fputs(table.c_str(), stdout);
  } else {
    nlem::write_bench_csv(rows, cfg.out);
  }
  return 0;
}

void add_noise_flags(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--sigma", cfg.sigma, "noise standard deviation");
  cmd->add_option("--seed", cfg.seed, "noise seed");
}

void add_solver_flags(CLI::App* cmd, Config& cfg, const std::vector<std::string>& solvers) {
  cmd->add_option("--solver", cfg.solver, "solver")->check(CLI::IsMember(solvers));
  cmd->add_option("--iters", cfg.iters, "solver iterations")->check(CLI::PositiveNumber);
  cmd->add_option("--mu", cfg.mu, "ADMM penalty")->check(CLI::PositiveNumber);
  cmd->add_option("--eps", cfg.epsilon, "IRLS smoothing")->check(CLI::PositiveNumber);
}

void add_patch_flags(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--search", cfg.search, "search window side S")->check(CLI::PositiveNumber);
  cmd->add_option("--patch", cfg.patch, "patch side k")->check(CLI::PositiveNumber);
  cmd->add_option("--h-mult", cfg.h_mult, "similarity bandwidth as a multiple of max(sigma,1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--init", cfg.init, "initialization patch (default: noisy for sigma <= 60)")
      ->check(CLI::IsMember({"noisy", "nlm"}));
  cmd->add_option("--range", cfg.range, "dynamic range l:u (default 0:255)");
  cmd->add_option("--threads", cfg.threads, "worker threads, 0 = all cores");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Euclidean medians and non-local patch-based denoising"};
  app.require_subcommand(1);
  Config cfg;

  CLI::App* median = app.add_subcommand("median", "solve a weighted Euclidean median");
  median->add_option("points", cfg.input, "point-set file")->required();
  add_solver_flags(median, cfg, {"admm", "irls"});
  median->add_option("--range", cfg.range, "box constraint l:u (default: unconstrained)");
  median->add_option("--trace", cfg.trace_path, "write per-iteration CSV here");

  CLI::App* denoise = app.add_subcommand("denoise", "add noise to an image and denoise it");
  denoise->add_option("image", cfg.input, "clean PGM image")->required();
  add_noise_flags(denoise, cfg);
  add_solver_flags(denoise, cfg, {"admm", "irls", "nlm"});
  add_patch_flags(denoise, cfg);
  denoise->add_option("--repeat", cfg.repeat, "noise realizations")->check(CLI::PositiveNumber);
  denoise->add_option("--out", cfg.out, "denoised PGM path")->required();

  CLI::App* trace = app.add_subcommand("trace", "per-pixel or per-iteration convergence CSV");
  trace->add_option("image", cfg.input, "clean PGM image")->required();
  add_noise_flags(trace, cfg);
  add_solver_flags(trace, cfg, {"admm", "irls", "nlm"});
  add_patch_flags(trace, cfg);
  trace->add_option("--pixel", cfg.pixel, "trace the solver objective at pixel r:c");
  trace->add_flag("--psnr", cfg.psnr_mode, "trace full-image PSNR per iteration");
  trace->add_option("--trace", cfg.trace_path, "output CSV path")->required();

  CLI::App* bench = app.add_subcommand("bench", "PSNR table over images x sigmas x methods");
  bench->add_option("images", cfg.inputs, "clean PGM images")->required();
  bench->add_option("--sigma", cfg.sigmas, "noise levels")->required();
  bench->add_option("--solver", cfg.methods, "methods (repeatable)")
      ->check(CLI::IsMember({"admm", "irls", "nlm"}));
  bench->add_option("--iters", cfg.iters, "solver iterations")->check(CLI::PositiveNumber);
  bench->add_option("--mu", cfg.mu, "ADMM penalty")->check(CLI::PositiveNumber);
  bench->add_option("--eps", cfg.epsilon, "IRLS smoothing")->check(CLI::PositiveNumber);
  add_patch_flags(bench, cfg);
  bench->add_option("--seed", cfg.seed, "base seed; realization r uses seed + r");
  bench->add_option("--repeat", cfg.repeat, "noise realizations per cell")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", cfg.out, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (median->parsed()) return run_median(cfg);
    if (denoise->parsed()) return run_denoise(cfg);
    if (trace->parsed()) return run_trace(cfg);
    return run_bench(cfg);
  } catch (const nlem::NumericFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const nlem::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
