#include "ergolab/cli/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "ergolab/cli/specs.hpp"
#include "ergolab/cobound.hpp"
#include "ergolab/cohomo2d.hpp"
#include "ergolab/induced.hpp"
#include "ergolab/random.hpp"
#include "ergolab/spectral.hpp"
#include "ergolab/version.hpp"

namespace ergolab::cli {

namespace {

struct Outcome {
  Json result;
  bool inconclusive = false;
  std::vector<Artifact> artifacts;
};

System require_system(const ExperimentConfig& c) {
  if (c.system.empty()) throw std::invalid_argument(c.command + " needs --system");
  return parse_system(c.system);
}

Set require_set(const ExperimentConfig& c, const System& system) {
  if (c.set.empty()) throw std::invalid_argument(c.command + " needs --set");
  return parse_set(c.set, system, c.seed);
}

StepinParams stepin_params(const ExperimentConfig& c) {
  StepinParams p;
  p.orbit_length = c.orbit_length;
  p.cells = c.cells;
  p.seed = c.seed;
  return p;
}

std::string csv_bool(bool v) { return v ? "true" : "false"; }

Outcome finite_cohomology(const ExperimentConfig& c) {
  const System system = require_system(c);
  const auto* perm = std::get_if<FinitePermutation>(&system);
  if (!perm) throw std::invalid_argument("finite-cohomology needs a finite permutation");

  Outcome out;
  const auto rank = cohomology_rank_finite(*perm);
  const auto spectrum = koopman_spectrum_finite(*perm);
  const auto unit = std::count_if(spectrum.begin(), spectrum.end(), [](const RootOfUnity& r) { return r.is_one(); });

  out.result["n"] = perm->size();
  out.result["k"] = rank.k;
  out.result["coboundary_dim"] = rank.coboundary_dim;
  out.result["h1_log2_order"] = rank.k;
  out.result["koopman_unit_multiplicity"] = unit;
  out.result["sign"] = perm->sign();

  std::string csv = "cycle,length,first\n";
  const auto cycles = perm->cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i)
    csv += std::to_string(i) + "," + std::to_string(cycles[i].size()) + "," + std::to_string(cycles[i].front()) + "\n";
  out.artifacts.push_back({"cycles.csv", std::move(csv)});

  if (!c.set.empty()) {
    const Set set = require_set(c, system);
    const auto* a = std::get_if<FiniteSet>(&set);
    if (!a) throw std::invalid_argument("finite-cohomology needs a finite set");
    out.result["certificate"] = to_json(solve_coboundary_finite(*perm, *a));
  }
  return out;
}

Outcome coboundary(const ExperimentConfig& c) {
  const System system = require_system(c);
  const Set a = require_set(c, system);
  Outcome out;
  out.result["measure"] = measure(a);
  out.artifacts.push_back({"set.json", to_json(a).dump(2) + "\n"});
  if (const auto* perm = std::get_if<FinitePermutation>(&system)) {
    const auto* fa = std::get_if<FiniteSet>(&a);
    if (!fa) throw std::invalid_argument("a finite system needs a finite set");
    out.result["method"] = "exact";
    out.result["certificate"] = to_json(solve_coboundary_finite(*perm, *fa));
    return out;
  }
  const auto cls = classify_coboundary(system, a, stepin_params(c));
  out.result["method"] = "stepin";
  out.result["verdict"] = std::string(to_string(cls.verdict));
  out.result["evidence"] = to_json(cls.evidence);
  out.inconclusive = cls.verdict == CoboundaryVerdict::kInconclusive;
  return out;
}

Outcome stepin(const ExperimentConfig& c) {
  const System system = require_system(c);
  const Set a = require_set(c, system);
  const auto report = stepin_test(system, a, stepin_params(c));
  Outcome out;
  out.result["measure"] = measure(a);
  out.result["report"] = to_json(report);
  out.result["coboundary_verdict"] = std::string(to_string(coboundary_verdict_from(report.verdict)));
  out.inconclusive = report.verdict == ErgodicityVerdict::kInconclusive;
  out.artifacts.push_back({"set.json", to_json(a).dump(2) + "\n"});
  return out;
}

Outcome induced(const ExperimentConfig& c) {
  const System system = require_system(c);
  const Set a = require_set(c, system);
  const double m = measure(a);
  if (!(m > 0)) throw std::invalid_argument("induced needs a set of positive measure");
  const auto stats = return_time_stats(system, a, c.samples, c.cap, c.seed);

  Outcome out;
  out.result["measure"] = m;
  out.result["kac_mean"] = 1.0 / m;
  out.result["returns"] = to_json(stats);
  out.result["relative_error"] = stats.count ? std::abs(stats.mean * m - 1.0) : 1.0;
  out.artifacts.push_back({"return_times.csv", return_stats_csv(stats)});
  if (c.ta2) {
    const auto report = ta2_ergodicity_experiment(system, a, stepin_params(c), c.cap);
    out.result["ta2"] = to_json(report);
    out.result["ta2_coboundary_verdict"] = std::string(to_string(coboundary_verdict_from(report.verdict)));
    out.inconclusive = report.verdict == ErgodicityVerdict::kInconclusive;
  }
  return out;
}

OrbitSpec orbit_spec(const ExperimentConfig& c, const System& system) {
  OrbitSpec spec;
  if (c.mode == "base") {
    if (!c.set.empty()) spec.set = parse_set(c.set, system, c.seed);
    return spec;
  }
  if (c.mode == "induced") {
    spec.mode = OrbitMode::kInduced;
  } else if (c.mode == "skew") {
    spec.mode = OrbitMode::kSkew;
  } else {
    throw std::invalid_argument("mode must be base, induced or skew: '" + c.mode + "'");
  }
  spec.set = require_set(c, system);
  spec.cap = c.cap;
  return spec;
}

std::vector<std::string> default_observables(const ExperimentConfig& c, const System& system) {
  if (c.mode == "skew") return {"fiber-sign"};
  if (phase_dim(system) == 1) return {"char:1"};
  if (phase_dim(system) == 2) return {"char:1,0"};
  throw std::invalid_argument("spectrum on a finite system needs --observable");
}

Outcome spectrum(const ExperimentConfig& c) {
  const System system = require_system(c);
  WeakMixingParams params;
  params.orbit_length = c.orbit_length;
  params.lags = c.lags;
  params.seed = c.seed;
  params.orbit = orbit_spec(c, system);
  if (c.bins == 0 || c.bins > c.lags) throw std::invalid_argument("bins must lie in [1, lags]");

  const auto specs = c.observables.empty() ? default_observables(c, system) : c.observables;
  std::vector<Observable> observables;
  for (const auto& s : specs) observables.push_back(parse_observable(s));

  Outcome out;
  Json rows = Json::array();
  const auto results = weak_mixing_experiment(system, observables, params);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const auto density = spectral_density(r.correlations, c.bins);
    Json row = to_json(r);
    row["spec"] = specs[i];
    row["density"] = to_json(density);
    rows.push_back(std::move(row));
    out.inconclusive = out.inconclusive || r.verdict == SpectrumVerdict::kInconclusive;
    out.artifacts.push_back({"correlations_" + std::to_string(i) + ".csv", correlations_csv(r.correlations)});
    out.artifacts.push_back({"density_" + std::to_string(i) + ".csv", density_csv(density)});
  }
  out.result["mode"] = std::string(to_string(params.orbit.mode));
  out.result["observables"] = std::move(rows);
  return out;
}

Outcome lattice2d(const ExperimentConfig& c) {
  if (c.rows == 0 || c.cols == 0) throw std::invalid_argument("lattice2d needs positive rows and cols");
  const auto action = Action2D::torus_grid(c.rows, c.cols);
  Outcome out;
  out.result["M"] = c.rows;
  out.result["N"] = c.cols;
  out.result["dims"] = to_json(cohomology_dims(action));
  if (!c.curl.empty()) {
    const auto f = parse_cochain2(c.curl, action.size());
    const auto sol = solve_curl(action, f);
    Json curl;
    curl["F"] = cochain_json(action, f.f);
    curl["total_parity"] = f.f.count() % 2;
    curl["solvable"] = sol.has_value();
    if (sol) {
      curl["solution"] = cochain_json(action, *sol);
      curl["verified"] = d1(action, *sol) == f;
    } else {
      curl["solution"] = nullptr;
    }
    out.artifacts.push_back({"curl.json", curl.dump(2) + "\n"});
    out.result["curl"] = std::move(curl);
  }
  return out;
}

Outcome catmap_challenge(const ExperimentConfig& c) {
  if (c.ladder.empty()) throw std::invalid_argument("catmap-challenge needs a non-empty ladder");
  Outcome out;
  Json rungs = Json::array();
  Json trend = Json::array();
  Json finite = Json::array();
  bool consistent = true;
  std::string csv = "N,cycles,odd_cycles,finite_coboundary,finite_model_consistent,statistic,threshold,verdict\n";
  for (const auto n : c.ladder) {
    StepinParams p;
    p.orbit_length = c.orbit_length;
    p.cells = std::min<std::size_t>(n, 32) * std::min<std::size_t>(n, 32);
    p.seed = Rng::derive(c.seed, n);
    const auto rung = catmap_challenge_rung(n, c.a, c.b, p);
    rungs.push_back(to_json(rung));
    trend.push_back(std::string(to_string(rung.continuous_verdict)));
    finite.push_back(rung.finite_coboundary ? "coboundary" : "non-coboundary");
    consistent = consistent && rung.finite_model_consistent;
    csv += std::to_string(n) + "," + std::to_string(rung.cycle_count) + "," + std::to_string(rung.odd_cycles) + "," +
           csv_bool(rung.finite_coboundary) + "," + csv_bool(rung.finite_model_consistent) + "," +
           format_double(rung.continuous.statistic) + "," + format_double(rung.continuous.threshold) + "," +
           std::string(to_string(rung.continuous_verdict)) + "\n";
  }
  out.result["a"] = c.a;
  out.result["b"] = c.b;
  out.result["rungs"] = std::move(rungs);
  out.result["finite_trend"] = std::move(finite);
  out.result["continuous_trend"] = std::move(trend);
  out.result["consistent"] = consistent;
  out.artifacts.push_back({"ladder.csv", std::move(csv)});
  return out;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
  Outcome outcome;
  const auto& cmd = config.command;
  if (cmd == "finite-cohomology") {
    outcome = finite_cohomology(config);
  } else if (cmd == "coboundary") {
    outcome = coboundary(config);
  } else if (cmd == "stepin") {
    outcome = stepin(config);
  } else if (cmd == "induced") {
    outcome = induced(config);
  } else if (cmd == "spectrum") {
    outcome = spectrum(config);
  } else if (cmd == "lattice2d") {
    outcome = lattice2d(config);
  } else if (cmd == "catmap-challenge") {
    outcome = catmap_challenge(config);
  } else {
    throw std::invalid_argument("unknown command '" + cmd + "'");
  }

  RunResult run;
  run.exit_code = outcome.inconclusive ? kExitInconclusive : kExitOk;
  Json names = Json::array();
  for (const auto& a : outcome.artifacts) names.push_back(a.name);
  run.summary["tool"] = kToolName;
  run.summary["version"] = kVersion;
  run.summary["command"] = cmd;
  run.summary["seed"] = config.seed;
  run.summary["status"] = outcome.inconclusive ? "inconclusive" : "ok";
  run.summary["config"] = to_json(config);
  run.summary["result"] = std::move(outcome.result);
  run.summary["artifacts"] = std::move(names);
  run.artifacts = std::move(outcome.artifacts);
  return run;
}

std::string render_summary(const Json& summary) { return summary.dump(2) + "\n"; }

void write_outputs(const RunResult& result, const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  fs::create_directories(root);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream f(root / name, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + (root / name).string());
    f << content;
    if (!f) throw std::runtime_error("failed writing " + (root / name).string());
  };
  write("summary.json", render_summary(result.summary));
  for (const auto& a : result.artifacts) write(a.name, a.content);
}

}  // namespace ergolab::cli
