#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "numrad/io.hpp"

namespace {

using namespace numrad;

int env_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  const char* env = std::getenv("NUMRAD_THREADS");
  if (!env) return hw;
  try {
    const int requested = std::stoi(env);
    if (requested >= 1) return std::min(requested, hw);
  } catch (...) {
  }
  return hw;
}

ChainOptions select_bounds(const std::string& sel) {
  if (sel == "all") return ChainOptions{};
  ChainOptions o;
  o.kittaneh = o.blend = o.split = o.gap_shift = o.power = false;
  o.shift_sandwich = o.hyponormal = false;
  if (sel == "kittaneh") {
    o.kittaneh = true;
  } else if (sel == "blend" || sel == "thm32") {
    o.blend = true;
  } else if (sel == "split" || sel == "thm25") {
    o.split = true;
  } else if (sel == "gap") {
    o.power = true;
    o.gap_shift = true;
  } else {
    throw CLI::ValidationError("--bounds", "must be one of all|kittaneh|blend|split|gap");
  }
  return o;
}

// "7" or "3..6"
std::pair<int, int> parse_dim_range(const std::string& text) {
  const size_t pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      const int d = std::stoi(text);
      return {d, d};
    }
    const int lo = std::stoi(text.substr(0, pos));
    const int hi = std::stoi(text.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw BadSpec("--dim expects N or A..B, got: " + text);
  }
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_text_file(output_path, text);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"numerical radius bound verifier"};
  app.require_subcommand(1);

  std::string check_input, check_bounds = "all", check_output, check_format = "json";
  double check_tol = 1e-7;
  CLI::App* check = app.add_subcommand("check", "evaluate the bound suite on one matrix");
  check->add_option("--input", check_input, "matrix JSON file")->required();
  check->add_option("--bounds", check_bounds, "all|kittaneh|blend|split|gap");
  check->add_option("--tol", check_tol, "margin tolerance for `holds` (default 1e-7)");
  check->add_option("--output", check_output, "write the report here instead of stdout");
  check->add_option("--format", check_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string sweep_family, sweep_dim, sweep_output, sweep_format = "json";
  int sweep_samples = 0;
  std::uint64_t sweep_seed = 0;
  double sweep_scale = 1.0;
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate the suite over a random ensemble");
  sweep->add_option("--family", sweep_family,
                    "ginibre|normal|hermitian|upper_triangular|jordan_shifted|unitary "
                    "(for a hyponormal ensemble use normal: at finite dimension every "
                    "hyponormal matrix is normal)")
      ->required();
  sweep->add_option("--dim", sweep_dim, "dimension N or range A..B")->required();
  sweep->add_option("--samples", sweep_samples, "samples per dimension")->required();
  sweep->add_option("--seed", sweep_seed, "ensemble seed")->required();
  sweep->add_option("--scale", sweep_scale, "entry scale (default 1)");
  sweep->add_option("--output", sweep_output, "write the report here instead of stdout");
  sweep->add_option("--format", sweep_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string repro_output, repro_format = "json";
  CLI::App* repro = app.add_subcommand("repro", "re-evaluate the published worked examples");
  repro->add_option("--output", repro_output, "write the report here instead of stdout");
  repro->add_option("--format", repro_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string dist_input;
  CLI::App* dist = app.add_subcommand("dist", "nearest scalar matrix and its distance");
  dist->add_option("--input", dist_input, "matrix JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) {
      OptimizerConfig cfg;
      cfg.holds_tol = check_tol;
      const ComplexMatrix a = load_matrix_json(check_input);
      const ChainReport rep = verify_chain(a, cfg, select_bounds(check_bounds), check_input);
      emit(check_format == "csv" ? chain_to_csv(rep) : chain_to_json(rep), check_output);
      return rep.violations.empty() ? 0 : 1;
    }
    if (sweep->parsed()) {
      const auto [lo, hi] = parse_dim_range(sweep_dim);
      if (lo < 2 || hi < lo) throw BadSpec("--dim range must satisfy 2 <= A <= B");
      OptimizerConfig cfg;
      ChainOptions opts;
      const int threads = env_threads();
      bool violated = false;
      std::string body;
      for (int d = lo; d <= hi; ++d) {
        EnsembleSpec spec;
        spec.family = parse_family(sweep_family);
        spec.dim = d;
        spec.samples = sweep_samples;
        spec.seed = sweep_seed;
        spec.scale = sweep_scale;
        const SweepResult res = run_sweep(spec, cfg, opts, threads);
        violated = violated || res.violation_count > 0;
        if (sweep_format == "csv") {
          const std::string csv = sweep_to_csv(res);
          body += body.empty() ? csv : csv.substr(csv.find('\n') + 1);  // keep one header
        } else {
          if (!body.empty()) body += ",";
          body += sweep_to_json(res);
        }
      }
      emit(sweep_format == "csv" ? body : "[" + body + "]", sweep_output);
      return violated ? 1 : 0;
    }
    if (repro->parsed()) {
      const ReproTable t = reproduce_examples();
      emit(repro_format == "csv" ? repro_to_csv(t) : repro_to_json(t), repro_output);
      for (const ReproCase& c : t.cases) {
        for (const ReproCheck& ch : c.checks) {
          if (!ch.premise && !ch.holds) return 1;
        }
      }
      return 0;
    }
    if (dist->parsed()) {
      const ComplexMatrix a = load_matrix_json(dist_input);
      const ShiftResult s = distance_to_scalars(a);
      std::cout << "lambda_star = " << fmt17(s.lambda_star.real()) << " + "
                << fmt17(s.lambda_star.imag()) << "i\n"
                << "distance = " << fmt17(s.distance) << "\n";
      return 0;
    }
  } catch (const BadInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BadSpec& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
