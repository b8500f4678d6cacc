// ergolab: command-line front end for the experiment runner.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ergolab/cli/config.hpp"
#include "ergolab/cli/experiment.hpp"
#include "ergolab/cli/specs.hpp"
#include "ergolab/induced.hpp"
#include "ergolab/version.hpp"

namespace {

using ergolab::cli::ExperimentConfig;

// Raw flag values; only flags that were given override the config.
struct Flags {
  std::string config_file;
  std::map<std::string, std::string> values;
  std::vector<std::string> observables;
  std::vector<std::string> ladder;
  bool ta2 = false;
};

void add_value(CLI::App* sub, Flags& flags, const std::string& name, const std::string& help) {
  sub->add_option("--" + name, flags.values[name], help);
}

ExperimentConfig build_config(const std::string& command, CLI::App* sub, const Flags& flags) {
  using namespace ergolab::cli;
  ExperimentConfig c;
  c.command = command;
  if (const char* env = std::getenv("ERGOLAB_OUTPUT_DIR"); env && *env) c.out = env;
  if (!flags.config_file.empty()) {
    std::ifstream in(flags.config_file);
    if (!in) throw std::invalid_argument("cannot read config file " + flags.config_file);
    ergolab::Json j;
    try {
      j = ergolab::Json::parse(in);
    } catch (const ergolab::Json::parse_error& e) {
      throw std::invalid_argument("config file " + flags.config_file + ": " + e.what());
    }
    c = merge_json(c, j);
    if (c.command != command) throw std::invalid_argument("config file is for command '" + c.command + "'");
  }

  auto given = [&](const std::string& name) {
    auto* opt = sub->get_option_no_throw("--" + name);
    return opt && opt->count() > 0;
  };
  auto value = [&](const std::string& name) -> const std::string& { return flags.values.at(name); };

  if (given("perm")) c.system = "perm:" + value("perm");
  if (given("system")) c.system = value("system");
  if (given("set")) c.set = value("set");
  if (given("mode")) c.mode = value("mode");
  if (given("curl")) c.curl = value("curl");
  if (given("out")) c.out = value("out");
  if (given("orbit")) c.orbit_length = parse_count(value("orbit"));
  if (given("lags")) c.lags = parse_count(value("lags"));
  if (given("bins")) c.bins = parse_count(value("bins"));
  if (given("cells")) c.cells = parse_count(value("cells"));
  if (given("samples")) c.samples = parse_count(value("samples"));
  if (given("cap")) c.cap = parse_count(value("cap"));
  if (given("rows")) c.rows = parse_count(value("rows"));
  if (given("cols")) c.cols = parse_count(value("cols"));
  if (given("a")) c.a = parse_real(value("a"));
  if (given("b")) c.b = parse_real(value("b"));
  if (given("seed")) c.seed = parse_count(value("seed"));
  if (given("observable")) c.observables = flags.observables;
  if (given("ta2")) c.ta2 = flags.ta2;
  if (given("ladder")) {
    c.ladder.clear();
    for (const auto& n : flags.ladder) c.ladder.push_back(parse_count(n));
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ergolab::cli;

  CLI::App app{"Computational ergodic-theory experiments. Prints a JSON summary on stdout."};
  app.set_version_flag("--version", std::string(kToolName) + " " + ergolab::kVersion);
  app.require_subcommand(1);

  Flags flags;
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--config", flags.config_file, "JSON config file; flags override its values")
        ->check(CLI::ExistingFile);
    add_value(s, flags, "out", "output directory (default: $ERGOLAB_OUTPUT_DIR)");
    add_value(s, flags, "seed", "64-bit seed");
    subs[name] = s;
    return s;
  };
  auto system_and_set = [&](CLI::App* s) {
    add_value(s, flags, "system", "rotation:golden | rotation:a[,b] | catmap | perm:i,j,... | cycle:n | identity:n");
    add_value(s, flags, "set",
              "interval:a,b[;a,b] | finite:i,j | rect:N:a,b | segment:N:a | gridrand:N:d:p | cobound:<set> | full");
  };

  auto* fc = sub("finite-cohomology", "cohomology rank, Koopman spectrum and coboundary witness of a permutation");
  add_value(fc, flags, "perm", "images of 0..n-1, e.g. 1,0,3,2");
  system_and_set(fc);

  auto* cb = sub("coboundary", "exact solve (finite systems) or skew-product classification");
  system_and_set(cb);
  add_value(cb, flags, "orbit", "orbit length");
  add_value(cb, flags, "cells", "histogram cells");

  auto* st = sub("stepin", "skew-product ergodicity test");
  system_and_set(st);
  add_value(st, flags, "orbit", "orbit length");
  add_value(st, flags, "cells", "histogram cells");

  auto* in = sub("induced", "return-time statistics and the T_A^2 ergodicity test");
  system_and_set(in);
  add_value(in, flags, "samples", "number of sampled points of A");
  add_value(in, flags, "cap", "return-time cap (0: max(1e6, 100/m(A)))");
  add_value(in, flags, "orbit", "T_A^2 orbit length");
  add_value(in, flags, "cells", "T_A^2 histogram cells");
  in->add_flag("--ta2", flags.ta2, "also run the T_A^2 equidistribution test");

  auto* sp = sub("spectrum", "Koopman correlations, Wiener statistic and spectral density");
  system_and_set(sp);
  add_value(sp, flags, "mode", "base | induced | skew");
  sp->add_option("--observable", flags.observables,
                 "char:k[,k] | fiber-sign | grid:N:d:v,... | values:v,... (repeatable)");
  add_value(sp, flags, "orbit", "orbit length");
  add_value(sp, flags, "lags", "number of lags L");
  add_value(sp, flags, "bins", "density bins");
  add_value(sp, flags, "cap", "return-time cap for induced mode");

  auto* lt = sub("lattice2d", "cochain complex of the M x N torus grid");
  add_value(lt, flags, "rows", "M");
  add_value(lt, flags, "cols", "N");
  add_value(lt, flags, "curl", "2-cochain F to solve d1(P,Q) = F: cells:i,j,... | hex:<digits>");

  auto* cc = sub("catmap-challenge", "resolution ladder for [0,a) x [0,b) under the cat map");
  add_value(cc, flags, "a", "width a");
  add_value(cc, flags, "b", "height b");
  cc->add_option("--ladder", flags.ladder, "grid resolutions")->delimiter(',');
  add_value(cc, flags, "orbit", "orbit length of the continuous skew test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  std::string command;
  CLI::App* active = nullptr;
  for (const auto& [name, s] : subs) {
    if (s->parsed()) {
      command = name;
      active = s;
    }
  }

  try {
    const auto config = build_config(command, active, flags);
    const auto result = run_experiment(config);
    if (!config.out.empty()) write_outputs(result, config.out);
    std::cout << render_summary(result.summary);
    return result.exit_code;
  } catch (const ergolab::CapExceededError& e) {
    std::cerr << "ergolab: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const ergolab::SamplingError& e) {
    std::cerr << "ergolab: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::length_error& e) {
    std::cerr << "ergolab: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::logic_error& e) {
    std::cerr << "ergolab: invalid configuration: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "ergolab: " << e.what() << '\n';
    return kExitRuntime;
  }
}
