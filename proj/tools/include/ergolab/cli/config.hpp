#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ergolab/serialize.hpp"

namespace ergolab::cli {

inline constexpr const char* kToolName = "ergolab";

// Everything that determines one experiment. Its JSON form is the config-file
// format and is embedded verbatim in every summary.
struct ExperimentConfig {
  std::string command;
  std::string system;
  std::string set;
  std::vector<std::string> observables;
  std::string mode = "base";  // spectrum orbit: base, induced or skew
  std::uint64_t orbit_length = 1'000'000;
  std::size_t lags = 4096;
  std::size_t bins = 256;
  std::size_t cells = 64;
  std::uint64_t samples = 100'000;
  std::uint64_t cap = 0;
  bool ta2 = false;
  std::size_t rows = 4;
  std::size_t cols = 4;
  std::string curl;
  double a = 0.5;
  double b = 0.5;
  std::vector<std::size_t> ladder{8, 16, 32, 64, 128};
  std::uint64_t seed = 1;
  std::string out;

  bool operator==(const ExperimentConfig&) const = default;
};

Json to_json(const ExperimentConfig& c);

// Overlays the keys present in `j` onto `base`. Unknown keys are an error.
ExperimentConfig merge_json(ExperimentConfig base, const Json& j);

inline ExperimentConfig config_from_json(const Json& j) { return merge_json(ExperimentConfig{}, j); }

const std::vector<std::string>& command_names();

}  // namespace ergolab::cli
