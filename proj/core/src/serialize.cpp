#include "ergolab/serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace ergolab {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json to_json(const Set& s) {
  return std::visit(
      [](const auto& set) -> Json {
        using S = std::decay_t<decltype(set)>;
        Json j;
        if constexpr (std::is_same_v<S, FiniteSet>) {
          j["type"] = "finite";
          j["n"] = set.universe();
          j["bits"] = set.bits().to_hex();
        } else if constexpr (std::is_same_v<S, IntervalUnion>) {
          j["type"] = "intervals";
          Json arr = Json::array();
          for (const auto& iv : set.intervals()) arr.push_back(Json::array({iv.lo, iv.hi}));
          j["intervals"] = std::move(arr);
        } else {
          j["type"] = "grid";
          j["N"] = set.resolution();
          j["d"] = set.dim();
          j["bits"] = set.bits().to_hex();
        }
        return j;
      },
      s);
}

Set set_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "finite") {
    const auto n = j.at("n").get<std::size_t>();
    return FiniteSet(BitVector::from_hex(j.at("bits").get<std::string>(), n));
  }
  if (type == "intervals") {
    std::vector<Interval> ivs;
    for (const auto& pair : j.at("intervals")) {
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("interval must be a pair [a,b]");
      ivs.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    return IntervalUnion(std::move(ivs));
  }
  if (type == "grid") {
    const auto n = j.at("N").get<std::size_t>();
    const auto d = j.at("d").get<std::size_t>();
    const std::size_t cells = d == 1 ? n : n * n;
    return GridSet(n, d, BitVector::from_hex(j.at("bits").get<std::string>(), cells));
  }
  throw std::invalid_argument("unknown set type '" + type + "'");
}

Json to_json(const ErgodicityReport& r) {
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["statistic"] = r.statistic;
  j["threshold"] = r.threshold;
  j["dof"] = r.dof;
  j["cells"] = r.cells;
  j["orbit_length"] = r.orbit_length;
  j["seed"] = r.seed;
  j["empty_bins"] = r.empty_bins;
  return j;
}

Json to_json(const CoboundaryCertificate& c) {
  Json j;
  j["solvable"] = c.solvable;
  if (c.witness) {
    j["witness"] = to_json(Set(*c.witness));
  } else {
    j["witness"] = nullptr;
  }
  Json obs = Json::array();
  for (auto idx : c.obstruction) obs.push_back(Json{{"cycle", idx}, {"parity", "odd"}});
  j["obstruction"] = std::move(obs);
  return j;
}

Json to_json(const CohomologyRank& r) {
  return Json{{"k", r.k}, {"coboundary_dim", r.coboundary_dim}, {"h1_log2_order", r.k}};
}

Json to_json(const ReturnStats& s) {
  Json j;
  j["mean"] = s.mean;
  j["count"] = s.count;
  j["cap_hits"] = s.cap_hits;
  j["samples"] = s.samples;
  j["cap"] = s.cap;
  j["seed"] = s.seed;
  return j;
}

Json to_json(const CohomologyDims& d) { return Json{{"h0", d.h0}, {"h1", d.h1}, {"h2", d.h2}}; }

Json to_json(const CatMapRung& r) {
  Json j;
  j["N"] = r.resolution;
  j["cells_in_set"] = r.cells_in_set;
  j["measure"] = r.measure;
  j["cycle_count"] = r.cycle_count;
  j["odd_cycles"] = r.odd_cycles;
  j["odd_cycle_mass"] = r.odd_cycle_mass;
  j["finite_coboundary"] = r.finite_coboundary;
  j["finite_model_consistent"] = r.finite_model_consistent;
  std::size_t ergodic = 0;
  std::size_t non_ergodic = 0;
  for (const auto& c : r.cycles) {
    if (c.verdict == ErgodicityVerdict::kErgodicConsistent) ++ergodic;
    if (c.verdict == ErgodicityVerdict::kNonErgodic) ++non_ergodic;
  }
  j["cycle_tests"] = Json{{"ergodic_consistent", ergodic},
                          {"non_ergodic", non_ergodic},
                          {"inconclusive", r.cycles.size() - ergodic - non_ergodic}};
  j["continuous"] = to_json(r.continuous);
  j["continuous_verdict"] = std::string(to_string(r.continuous_verdict));
  return j;
}

Json to_json(const WeakMixingResult& r) {
  Json j;
  j["observable"] = r.observable;
  j["wm"] = r.wm;
  j["verdict"] = std::string(to_string(r.verdict));
  j["lags"] = r.correlations.lags;
  j["orbit_length"] = r.correlations.orbit_length;
  j["seed"] = r.correlations.seed;
  j["c0"] = r.correlations.c.empty() ? 0.0 : r.correlations.c[0].real();
  return j;
}

Json to_json(const SpectralDensityEstimate& d) {
  std::size_t peak = 0;
  for (std::size_t k = 1; k < d.density.size(); ++k) {
    if (d.density[k] > d.density[peak]) peak = k;
  }
  Json j;
  j["bins"] = d.bins;
  j["total_mass"] = d.total_mass;
  j["peak_bin"] = peak;
  j["peak_fraction"] = d.total_mass > 0 && !d.density.empty() ? d.density[peak] / d.total_mass : 0.0;
  return j;
}

Json cochain_json(const Action2D& action, const BitVector& values) {
  Json j;
  if (auto shape = action.grid_shape()) {
    j["M"] = shape->first;
    j["N"] = shape->second;
  }
  j["n"] = action.size();
  j["bits"] = values.to_hex();
  return j;
}

Json cochain_json(const Action2D& action, const Cochain1& pq) {
  Json j;
  if (auto shape = action.grid_shape()) {
    j["M"] = shape->first;
    j["N"] = shape->second;
  }
  j["n"] = action.size();
  j["P"] = pq.p.to_hex();
  j["Q"] = pq.q.to_hex();
  return j;
}

std::string return_stats_csv(const ReturnStats& s) {
  std::string out = "return_time,count\n";
  for (const auto& [t, n] : s.histogram) out += std::to_string(t) + "," + std::to_string(n) + "\n";
  return out;
}

std::string correlations_csv(const CorrelationSequence& c) {
  std::string out = "lag,re,im\n";
  for (std::size_t n = 0; n < c.c.size(); ++n) {
    out += std::to_string(n) + "," + format_double(c.c[n].real()) + "," + format_double(c.c[n].imag()) + "\n";
  }
  return out;
}

std::string density_csv(const SpectralDensityEstimate& d) {
  std::string out = "bin,density\n";
  for (std::size_t k = 0; k < d.density.size(); ++k) {
    out += std::to_string(k) + "," + format_double(d.density[k]) + "\n";
  }
  return out;
}

}  // namespace ergolab
