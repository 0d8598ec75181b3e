// Command-line interface for designing sampling schemes on the sphere and
// running spherical harmonic transforms over them.
//
// Exit codes: 0 success, 1 runtime failure (bad file, singular system,
// dimension mismatch), 2 usage error.

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osht/osht.hpp"

namespace {

// A command-line value that parsed but cannot be acted on (usage, exit 2).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

osht::SamplingScheme design(osht::Placement method, int bandlimit) {
  return method == osht::Placement::elimination
             ? osht::design_elimination(bandlimit)
             : osht::design_ascending(bandlimit);
}

std::vector<osht::Placement> parse_methods(const std::string& text) {
  std::vector<osht::Placement> methods;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string name =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      methods.push_back(osht::placement_from_name(name));
    } catch (const osht::Error& e) {
      throw UsageError(e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (methods.empty()) throw UsageError("no placement methods given");
  return methods;
}

// "8,16" and geometric ranges "start:factor:end" (inclusive), e.g.
// "8:2:64" -> 8,16,32,64.  Mixed lists are allowed.
std::vector<int> parse_bandlimits(const std::string& text) {
  std::vector<int> bandlimits;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? comma : comma - start);

    const auto parse_positive = [&](const std::string& field) {
      if (field.empty()) throw UsageError("empty band-limit field");
      char* end = nullptr;
      const long value = std::strtol(field.c_str(), &end, 10);
      if (end != field.c_str() + field.size() || value < 1) {
        throw UsageError("malformed band-limit \"" + field + "\"");
      }
      return static_cast<int>(value);
    };

    const auto colon1 = item.find(':');
    if (colon1 == std::string::npos) {
      bandlimits.push_back(parse_positive(item));
    } else {
      const auto colon2 = item.find(':', colon1 + 1);
      if (colon2 == std::string::npos) {
        throw UsageError("range must be start:factor:end, got \"" + item +
                         "\"");
      }
      const int first = parse_positive(item.substr(0, colon1));
      const int factor =
          parse_positive(item.substr(colon1 + 1, colon2 - colon1 - 1));
      const int last = parse_positive(item.substr(colon2 + 1));
      if (factor < 2) {
        throw UsageError("range factor must be >= 2 in \"" + item + "\"");
      }
      if (last < first) {
        throw UsageError("range end below start in \"" + item + "\"");
      }
      for (long value = first; value <= last; value *= factor) {
        bandlimits.push_back(static_cast<int>(value));
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (bandlimits.empty()) throw UsageError("no band-limits given");
  return bandlimits;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Spherical harmonic transforms over optimal-dimensionality sampling "
      "schemes (L^2 samples for band-limit L).\n"
      "Set OSHT_THREADS to bound worker threads."};
  app.require_subcommand(1);

  // ---- design
  auto* design_cmd = app.add_subcommand(
      "design", "Design a sampling scheme and write it as JSON");
  int design_bandlimit = 0;
  std::string design_method = "elimination";
  std::string design_output;
  design_cmd->add_option("--bandlimit", design_bandlimit, "Band-limit L (>= 1)")
      ->required();
  design_cmd
      ->add_option("--method", design_method,
                   "Ring placement: elimination | ascending")
      ->capture_default_str();
  design_cmd->add_option("--output", design_output, "Output scheme JSON path")
      ->required();

  // ---- analyze
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Tabulate per-order condition numbers of a scheme");
  std::string analyze_scheme;
  std::string analyze_output = "-";
  analyze_cmd->add_option("--scheme", analyze_scheme, "Scheme JSON path")
      ->required();
  analyze_cmd
      ->add_option("--output", analyze_output,
                   "Output CSV path, or - for stdout")
      ->capture_default_str();

  // ---- forward
  auto* forward_cmd = app.add_subcommand(
      "forward", "Recover harmonic coefficients from a sampled signal");
  std::string forward_scheme, forward_signal, forward_output;
  bool forward_multipass = false;
  int forward_max_passes = 20;
  forward_cmd->add_option("--scheme", forward_scheme, "Scheme JSON path")
      ->required();
  forward_cmd->add_option("--signal", forward_signal, "Signal CSV path")
      ->required();
  forward_cmd->add_option("--output", forward_output, "Output coefficient CSV")
      ->required();
  forward_cmd->add_flag("--multipass", forward_multipass,
                        "Refine with residual passes");
  forward_cmd
      ->add_option("--max-passes", forward_max_passes,
                   "Pass budget for --multipass")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  // ---- inverse
  auto* inverse_cmd = app.add_subcommand(
      "inverse", "Synthesize a sampled signal from harmonic coefficients");
  std::string inverse_scheme, inverse_coeff, inverse_output;
  inverse_cmd->add_option("--scheme", inverse_scheme, "Scheme JSON path")
      ->required();
  inverse_cmd->add_option("--coeff", inverse_coeff, "Coefficient CSV path")
      ->required();
  inverse_cmd->add_option("--output", inverse_output, "Output signal CSV")
      ->required();

  // ---- bench
  auto* bench_cmd = app.add_subcommand(
      "bench", "Run conditioning and accuracy experiments, write CSV datasets");
  std::string bench_bandlimits;
  std::string bench_methods = "elimination";
  int bench_trials = 10;
  std::uint64_t bench_seed = 1;
  bool bench_multipass = false;
  int bench_max_passes = 20;
  std::string bench_outdir;
  bench_cmd
      ->add_option("--bandlimits", bench_bandlimits,
                   "Comma list; start:factor:end is a geometric range "
                   "(8:2:64 -> 8,16,32,64)")
      ->required();
  bench_cmd
      ->add_option("--methods", bench_methods,
                   "Comma list of: elimination, ascending")
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench_trials, "Trials per cell")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "Base RNG seed")
      ->capture_default_str();
  bench_cmd->add_flag("--multipass", bench_multipass,
                      "Measure multi-pass refinement");
  bench_cmd
      ->add_option("--max-passes", bench_max_passes,
                   "Pass budget for --multipass")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--outdir", bench_outdir, "Output directory")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (design_cmd->parsed()) {
      const osht::Placement method = [&] {
        try {
          return osht::placement_from_name(design_method);
        } catch (const osht::Error& e) {
          throw UsageError(e.what());
        }
      }();
      if (design_bandlimit < 1) {
        throw UsageError("band-limit must be >= 1");
      }
      const auto start = std::chrono::steady_clock::now();
      const osht::SamplingScheme scheme = design(method, design_bandlimit);
      const double elapsed = seconds_since(start);
      osht::write_scheme(design_output, scheme);
      const osht::ConditionReport report = osht::condition_report(scheme);
      std::fprintf(stderr, "max kappa: %.6g\n", report.kappa_max);
      std::fprintf(stderr, "design time: %.3f s\n", elapsed);
    } else if (analyze_cmd->parsed()) {
      const osht::SamplingScheme scheme = osht::read_scheme(analyze_scheme);
      osht::ConditioningData data;
      const osht::ConditionReport report = osht::condition_report(scheme);
      for (int m = 0; m < scheme.bandlimit; ++m) {
        data.rows.push_back(
            {scheme.bandlimit, scheme.method, m, report.kappa[m]});
      }
      data.max_rows.push_back(
          {scheme.bandlimit, scheme.method, report.kappa_max});
      const std::string csv = osht::render_cond_csv(data);
      if (analyze_output == "-") {
        std::fwrite(csv.data(), 1, csv.size(), stdout);
      } else {
        osht::write_text(analyze_output, csv);
      }
      std::fprintf(stderr, "max kappa: %.6g\n", report.kappa_max);
    } else if (forward_cmd->parsed()) {
      const osht::SamplingScheme scheme = osht::read_scheme(forward_scheme);
      const osht::SpatialSignal signal = osht::read_signal(forward_signal);
      if (forward_multipass) {
        const osht::MultipassResult result =
            osht::multipass_sht(scheme, signal, forward_max_passes);
        osht::write_coeffs(forward_output, result.coeffs);
        std::fprintf(stderr, "passes: %d\n", result.passes);
        std::string history = "residuals:";
        for (const double r : result.residual_history) {
          history += " " + osht::format_real(r);
        }
        std::fprintf(stderr, "%s\n", history.c_str());
      } else {
        osht::write_coeffs(forward_output, osht::forward_sht(scheme, signal));
      }
    } else if (inverse_cmd->parsed()) {
      const osht::SamplingScheme scheme = osht::read_scheme(inverse_scheme);
      const osht::HarmonicCoeffs coeffs = osht::read_coeffs(inverse_coeff);
      osht::write_signal(inverse_output, osht::inverse_sht(scheme, coeffs));
    } else if (bench_cmd->parsed()) {
      osht::TrialConfig config;
      config.bandlimits = parse_bandlimits(bench_bandlimits);
      config.methods = parse_methods(bench_methods);
      config.trials = bench_trials;
      config.seed = bench_seed;
      config.multipass = bench_multipass;
      config.max_passes = bench_max_passes;

      std::error_code ec;
      std::filesystem::create_directories(bench_outdir, ec);
      if (ec) {
        throw osht::Error("cannot create output directory " + bench_outdir +
                          ": " + ec.message());
      }

      const osht::ConditioningData cond =
          osht::conditioning_experiment(config.bandlimits, config.methods);
      const std::vector<osht::BenchRecord> records =
          osht::accuracy_experiment(config);
      for (const osht::BenchRecord& record : records) {
        if (record.passes == 0) {
          std::fprintf(stderr,
                       "note: L=%d %s trial %d hit a singular system; "
                       "recorded as inf\n",
                       record.bandlimit, osht::placement_name(record.method),
                       record.trial);
        }
      }

      const std::filesystem::path dir(bench_outdir);
      osht::write_text((dir / "cond.csv").string(),
                       osht::render_cond_csv(cond));
      osht::write_text((dir / "cond_max.csv").string(),
                       osht::render_cond_max_csv(cond));
      osht::write_text((dir / "accuracy.csv").string(),
                       osht::render_accuracy_csv(records));
      osht::write_text((dir / "multipass.csv").string(),
                       osht::render_multipass_csv(records));
      std::fprintf(stderr, "wrote %s/{cond,cond_max,accuracy,multipass}.csv\n",
                   bench_outdir.c_str());
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
