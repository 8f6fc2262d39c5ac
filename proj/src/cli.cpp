#include "orliczsm/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <list>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "orliczsm/approx.hpp"
#include "orliczsm/fracdiff.hpp"
#include "orliczsm/io.hpp"
#include "orliczsm/kfunc.hpp"
#include "orliczsm/orlicz.hpp"
#include "orliczsm/verify.hpp"

namespace orliczsm::cli {

namespace {

constexpr const char* kGrammar =
    "usage: orliczsm {norm|onorm|en|omega|kfunc|kernel|sigma|"
    "verify {direct|inverse|equiv|classify|rates|balpha}} [--flags]\n"
    "flags: --orlicz --alpha --beta --delta --n --n-max --r --input --output --format --grid --tol "
    "--seed --family --band\n";

struct Config {
  std::string orlicz = R"({"family":"power","p":2})";
  double alpha = 1.0;
  double beta = 1.0;
  double delta = 0.1;
  int n = 1;
  int n_max = 64;
  double r = 1.0;
  std::string input;
  std::string output;
  std::string format = "json";
  int grid = 512;
  double tol = 0.05;
  std::uint64_t seed = 0;
  std::string family = "all";
  std::optional<int> band;
  int default_band = 256;
};

struct Command {
  CLI::App* app = nullptr;
  Config cfg;
  std::function<int(Config&, std::ostream&)> action;
};

CoeffSeq load_input(const Config& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  std::ifstream in(cfg.input);
  if (!in) throw InputError(fmt::format("cannot open input file {}", cfg.input));
  try {
    return read_coefficients(in);
  } catch (const InputError& e) {
    throw InputError(fmt::format("{}: {}", cfg.input, e.what()));
  }
}

OrliczFunction load_orlicz(const Config& cfg) { return parse_orlicz(cfg.orlicz); }

int print_scalar(std::ostream& out, double x) {
  out << format_double(x) << "\n";
  return 0;
}

int emit_report(const Config& cfg, std::ostream& out, const Report& r) {
  if (cfg.format == "csv") {
    write_report_csv(out, r);
  } else {
    write_report_json(out, r);
  }
  return r.passed ? 0 : 1;
}

std::vector<FamilySpec> families_of(const Config& cfg) {
  const int band = cfg.band.value_or(cfg.default_band);
  if (cfg.family == "all") return all_families(cfg.seed, 3, band);
  const auto kind = family_from_string(cfg.family);
  if (!kind) {
    throw InputError(fmt::format(
        "unknown family \"{}\" (expected all, random-sparse, random-band, lacunary, polynomial-decay)",
        cfg.family));
  }
  return {FamilySpec{*kind, cfg.seed, 3, band}};
}

void add_orlicz(CLI::App* app, Config& cfg) {
  app->add_option("--orlicz", cfg.orlicz, "Orlicz function as JSON")->capture_default_str();
}
void add_input(CLI::App* app, Config& cfg) {
  app->add_option("--input", cfg.input, "coefficient file (JSON lines)")->required();
}
void add_alpha(CLI::App* app, Config& cfg) {
  app->add_option("--alpha", cfg.alpha, "smoothness order")->capture_default_str();
}
void add_output(CLI::App* app, Config& cfg) {
  app->add_option("--output", cfg.output, "write results here instead of stdout");
}
void add_report_flags(CLI::App* app, Config& cfg) {
  add_output(app, cfg);
  app->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}
void add_family_flags(CLI::App* app, Config& cfg) {
  app->add_option("--family", cfg.family, "generator family or all")->capture_default_str();
  app->add_option("--seed", cfg.seed, "64-bit generator seed")->capture_default_str();
  app->add_option("--band", cfg.band, fmt::format("generator band (default {})", cfg.default_band));
  app->add_option("--grid", cfg.grid, "modulus search grid")->capture_default_str();
  app->add_option("--tol", cfg.tol, "running-sup stabilization slack")->capture_default_str();
}

int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orlicz-type sequence space S_M toolkit", "orliczsm"};
  app.require_subcommand(1);
  std::list<Command> commands;
  auto make = [&](CLI::App* parent, const std::string& name, const std::string& help) -> Command& {
    Command& c = commands.emplace_back();
    c.app = parent->add_subcommand(name, help);
    return c;
  };

  {
    auto& c = make(&app, "norm", "Luxemburg norm");
    add_orlicz(c.app, c.cfg);
    add_input(c.app, c.cfg);
    add_output(c.app, c.cfg);
    c.action = [](Config& cfg, std::ostream& o) {
      return print_scalar(o, luxemburg_norm(load_orlicz(cfg), load_input(cfg)));
    };
  }
  {
    auto& c = make(&app, "onorm", "Orlicz norm");
    add_orlicz(c.app, c.cfg);
    add_input(c.app, c.cfg);
    add_output(c.app, c.cfg);
    c.action = [](Config& cfg, std::ostream& o) {
      return print_scalar(o, orlicz_norm(load_orlicz(cfg), load_input(cfg)));
    };
  }
  {
    auto& c = make(&app, "en", "best approximation E_n");
    add_orlicz(c.app, c.cfg);
    add_input(c.app, c.cfg);
    add_output(c.app, c.cfg);
    c.app->add_option("--n", c.cfg.n, "degree bound")->required();
    c.action = [](Config& cfg, std::ostream& o) {
      return print_scalar(o, best_approx(load_input(cfg), load_orlicz(cfg), cfg.n));
    };
  }
  {
    auto& c = make(&app, "omega", "fractional modulus of smoothness");
    add_orlicz(c.app, c.cfg);
    add_input(c.app, c.cfg);
    add_output(c.app, c.cfg);
    add_alpha(c.app, c.cfg);
    c.app->add_option("--delta", c.cfg.delta, "step bound")->required();
    c.app->add_option("--grid", c.cfg.grid, "search grid")->capture_default_str();
    c.action = [](Config& cfg, std::ostream& o) {
      return print_scalar(o, modulus(load_input(cfg), load_orlicz(cfg), cfg.alpha, cfg.delta, cfg.grid));
    };
  }
  {
    auto& c = make(&app, "kfunc", "K-functional upper estimate");
    add_orlicz(c.app, c.cfg);
    add_input(c.app, c.cfg);
    add_output(c.app, c.cfg);
    add_alpha(c.app, c.cfg);
    c.app->add_option("--delta", c.cfg.delta, "K-functional parameter")->required();
    c.app->add_option("--band", c.cfg.band, "frequency band for h (default: degree of f)");
    c.action = [](Config& cfg, std::ostream& o) {
      KOptions opts;
      opts.band = cfg.band;
      return print_scalar(o, k_functional(load_input(cfg), load_orlicz(cfg), cfg.alpha, cfg.delta, opts).value);
    };
  }
  {
    auto& c = make(&app, "kernel", "Jackson kernel coefficients");
    add_output(c.app, c.cfg);
    c.app->add_option("--n", c.cfg.n, "kernel order")->required();
    c.cfg.r = 0;
    c.app->add_option("--r", c.cfg.r, "moment order (integer)")->capture_default_str();
    c.action = [](Config& cfg, std::ostream& o) {
      if (cfg.r != std::floor(cfg.r)) throw InputError("--r must be an integer for kernel");
      write_coefficients(o, jackson_kernel(cfg.n, static_cast<int>(cfg.r)).coefficients);
      return 0;
    };
  }
  {
    auto& c = make(&app, "sigma", "Jackson approximant sigma_(n-1)");
    add_input(c.app, c.cfg);
    add_output(c.app, c.cfg);
    add_alpha(c.app, c.cfg);
    c.app->add_option("--n", c.cfg.n, "approximant index (>= 2)")->required();
    c.action = [](Config& cfg, std::ostream& o) {
      if (cfg.alpha != std::floor(cfg.alpha)) throw InputError("--alpha must be an integer for sigma");
      write_coefficients(o, jackson_approximant(load_input(cfg), static_cast<int>(cfg.alpha), cfg.n));
      return 0;
    };
  }

  CLI::App* verify = app.add_subcommand("verify", "theorem verification reports");
  verify->require_subcommand(1);
  {
    auto& c = make(verify, "direct", "E_n / omega_alpha(f, 1/n) sweep");
    c.cfg.grid = 128;
    add_orlicz(c.app, c.cfg);
    add_alpha(c.app, c.cfg);
    add_report_flags(c.app, c.cfg);
    add_family_flags(c.app, c.cfg);
    c.app->add_option("--n-max", c.cfg.n_max, "largest n")->capture_default_str();
    c.action = [](Config& cfg, std::ostream& o) {
      SweepOptions opts;
      opts.modulus_grid = cfg.grid;
      opts.rule.stabilization = cfg.tol;
      const auto fams = families_of(cfg);
      return emit_report(cfg, o, direct_report(fams, load_orlicz(cfg), cfg.alpha, cfg.n_max, opts));
    };
  }
  {
    auto& c = make(verify, "inverse", "inverse-theorem ratio sweep");
    c.cfg.grid = 128;
    add_orlicz(c.app, c.cfg);
    add_alpha(c.app, c.cfg);
    add_report_flags(c.app, c.cfg);
    add_family_flags(c.app, c.cfg);
    c.app->add_option("--n-max", c.cfg.n_max, "largest n")->capture_default_str();
    c.action = [](Config& cfg, std::ostream& o) {
      SweepOptions opts;
      opts.modulus_grid = cfg.grid;
      opts.rule.stabilization = cfg.tol;
      const auto fams = families_of(cfg);
      return emit_report(cfg, o, inverse_report(fams, load_orlicz(cfg), cfg.alpha, cfg.n_max, opts));
    };
  }
  {
    auto& c = make(verify, "equiv", "K_alpha / omega_alpha over delta in [--delta, 1]");
    c.cfg.grid = 128;
    c.cfg.delta = 1e-3;
    c.cfg.default_band = 64;
    add_orlicz(c.app, c.cfg);
    add_alpha(c.app, c.cfg);
    add_report_flags(c.app, c.cfg);
    add_family_flags(c.app, c.cfg);
    c.app->add_option("--delta", c.cfg.delta, "smallest delta")->capture_default_str();
    c.app->add_option("--n", c.cfg.n, "number of delta points (default 16)");
    c.cfg.n = 16;
    c.action = [](Config& cfg, std::ostream& o) {
      SweepOptions opts;
      opts.modulus_grid = cfg.grid;
      opts.rule.stabilization = cfg.tol;
      opts.delta_min = cfg.delta;
      opts.delta_points = cfg.n;
      const auto fams = families_of(cfg);
      return emit_report(cfg, o, equivalence_report(fams, load_orlicz(cfg), cfg.alpha, opts));
    };
  }
  {
    auto& c = make(verify, "classify", "membership in S_M H^omega_alpha with omega = delta^r");
    c.cfg.alpha = 2.0;
    c.cfg.n_max = 256;
    c.cfg.default_band = 4096;
    add_orlicz(c.app, c.cfg);
    add_alpha(c.app, c.cfg);
    add_report_flags(c.app, c.cfg);
    c.app->add_option("--input", c.cfg.input, "coefficient file; omit to use the |k|^(-beta-1/2) model");
    c.app->add_option("--beta", c.cfg.beta, "decay of the model sequence")->capture_default_str();
    c.app->add_option("--band", c.cfg.band, "model band (default 4096)");
    c.app->add_option("--r", c.cfg.r, "majorant exponent")->capture_default_str();
    c.app->add_option("--n-max", c.cfg.n_max, "largest n")->capture_default_str();
    c.app->add_option("--grid", c.cfg.grid, "modulus search grid")->capture_default_str();
    c.app->add_option("--tol", c.cfg.tol, "running-sup stabilization slack")->capture_default_str();
    c.action = [](Config& cfg, std::ostream& o) {
      const CoeffSeq f = cfg.input.empty() ? power_decay_model(cfg.beta, cfg.band.value_or(cfg.default_band))
                                           : load_input(cfg);
      ClassifyOptions opts;
      opts.modulus_grid = cfg.grid;
      opts.rule.stabilization = cfg.tol;
      return emit_report(cfg, o,
                         classify(f, load_orlicz(cfg), MajorantOmega::power(cfg.r), cfg.alpha, cfg.n_max, opts));
    };
  }
  {
    auto& c = make(verify, "rates", "log-log slope of omega_alpha on the |k|^(-beta-1/2) model");
    c.cfg.grid = 128;
    c.cfg.tol = 0.15;
    c.cfg.default_band = 4096;
    add_orlicz(c.app, c.cfg);
    add_alpha(c.app, c.cfg);
    add_report_flags(c.app, c.cfg);
    c.app->add_option("--beta", c.cfg.beta, "model decay")->capture_default_str();
    c.app->add_option("--band", c.cfg.band, "model band (default 4096)");
    c.app->add_option("--grid", c.cfg.grid, "modulus search grid")->capture_default_str();
    c.app->add_option("--tol", c.cfg.tol, "slope tolerance")->capture_default_str();
    c.action = [](Config& cfg, std::ostream& o) {
      RatesOptions opts;
      opts.modulus_grid = cfg.grid;
      opts.slope_tolerance = cfg.tol;
      return emit_report(cfg, o,
                         corollary2_rates(cfg.beta, cfg.alpha, load_orlicz(cfg),
                                          cfg.band.value_or(cfg.default_band), opts));
    };
  }
  {
    auto& c = make(verify, "balpha", "(B_alpha) condition for omega = delta^r");
    c.cfg.n_max = 1024;
    add_alpha(c.app, c.cfg);
    add_report_flags(c.app, c.cfg);
    c.app->add_option("--r", c.cfg.r, "majorant exponent")->capture_default_str();
    c.app->add_option("--n-max", c.cfg.n_max, "largest n")->capture_default_str();
    c.action = [](Config& cfg, std::ostream& o) {
      return emit_report(cfg, o, b_alpha_check(MajorantOmega::power(cfg.r), cfg.alpha, cfg.n_max));
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return 2;
  }

  for (auto& c : commands) {
    if (!c.app->parsed()) continue;
    if (c.cfg.output.empty()) return c.action(c.cfg, out);
    std::ostringstream buffer;
    const int code = c.action(c.cfg, buffer);
    std::ofstream file(c.cfg.output);
    if (!file) throw InputError(fmt::format("cannot open output file {}", c.cfg.output));
    file << buffer.str();
    return code;
  }
  err << kGrammar;
  return 2;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> copy = args;
  std::vector<char*> argv;
  for (auto& a : copy) argv.push_back(a.data());
  argv.push_back(nullptr);
  return run(static_cast<int>(copy.size()), argv.data(), out, err);
}

}  // namespace orliczsm::cli
