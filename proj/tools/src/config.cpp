#include "ergolab/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ergolab/cli/specs.hpp"

namespace ergolab::cli {

namespace {

std::uint64_t count_value(const Json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) throw std::invalid_argument("config key '" + key + "' must be non-negative");
    return v.get<std::uint64_t>();
  }
  if (v.is_number_float() || v.is_string()) {
    return parse_count(v.is_string() ? v.get<std::string>() : format_double(v.get<double>()));
  }
  throw std::invalid_argument("config key '" + key + "' must be a count");
}

double real_value(const Json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_real(v.get<std::string>());
  throw std::invalid_argument("config key '" + key + "' must be a number");
}

std::string string_value(const Json& v, const std::string& key) {
  if (!v.is_string()) throw std::invalid_argument("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"finite-cohomology", "coboundary", "stepin",          "induced",
                                              "spectrum",          "lattice2d",  "catmap-challenge"};
  return names;
}

Json to_json(const ExperimentConfig& c) {
  Json j;
  j["command"] = c.command;
  j["system"] = c.system;
  j["set"] = c.set;
  j["observables"] = c.observables;
  j["mode"] = c.mode;
  j["orbit_length"] = c.orbit_length;
  j["lags"] = c.lags;
  j["bins"] = c.bins;
  j["cells"] = c.cells;
  j["samples"] = c.samples;
  j["cap"] = c.cap;
  j["ta2"] = c.ta2;
  j["rows"] = c.rows;
  j["cols"] = c.cols;
  j["curl"] = c.curl;
  j["a"] = c.a;
  j["b"] = c.b;
  j["ladder"] = c.ladder;
  j["seed"] = c.seed;
  j["out"] = c.out;
  return j;
}

ExperimentConfig merge_json(ExperimentConfig c, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "command") {
      c.command = string_value(v, key);
    } else if (key == "system") {
      c.system = string_value(v, key);
    } else if (key == "set") {
      c.set = string_value(v, key);
    } else if (key == "observables") {
      if (!v.is_array()) throw std::invalid_argument("config key 'observables' must be an array");
      c.observables.clear();
      for (const auto& o : v) c.observables.push_back(string_value(o, key));
    } else if (key == "mode") {
      c.mode = string_value(v, key);
    } else if (key == "orbit_length") {
      c.orbit_length = count_value(v, key);
    } else if (key == "lags") {
      c.lags = count_value(v, key);
    } else if (key == "bins") {
      c.bins = count_value(v, key);
    } else if (key == "cells") {
      c.cells = count_value(v, key);
    } else if (key == "samples") {
      c.samples = count_value(v, key);
    } else if (key == "cap") {
      c.cap = count_value(v, key);
    } else if (key == "ta2") {
      if (!v.is_boolean()) throw std::invalid_argument("config key 'ta2' must be a boolean");
      c.ta2 = v.get<bool>();
    } else if (key == "rows") {
      c.rows = count_value(v, key);
    } else if (key == "cols") {
      c.cols = count_value(v, key);
    } else if (key == "curl") {
      c.curl = string_value(v, key);
    } else if (key == "a") {
      c.a = real_value(v, key);
    } else if (key == "b") {
      c.b = real_value(v, key);
    } else if (key == "ladder") {
      if (!v.is_array()) throw std::invalid_argument("config key 'ladder' must be an array");
      c.ladder.clear();
      for (const auto& n : v) c.ladder.push_back(count_value(n, key));
    } else if (key == "seed") {
      c.seed = count_value(v, key);
    } else if (key == "out") {
      c.out = string_value(v, key);
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  return c;
}

}  // namespace ergolab::cli
