#pragma once

// Text forms of sets, reports and cochains. Bit strings are hex, four bits per
// digit, least significant bit first, cells in row-major order.

#include <nlohmann/json.hpp>
#include <string>

#include "ergolab/cobound.hpp"
#include "ergolab/cohomo2d.hpp"
#include "ergolab/induced.hpp"
#include "ergolab/msets.hpp"
#include "ergolab/spectral.hpp"

namespace ergolab {

using Json = nlohmann::ordered_json;

Json to_json(const Set& s);
Set set_from_json(const Json& j);

Json to_json(const ErgodicityReport& r);
Json to_json(const CoboundaryCertificate& c);
Json to_json(const CohomologyRank& r);
Json to_json(const ReturnStats& s);
Json to_json(const CohomologyDims& d);
Json to_json(const CatMapRung& r);
Json to_json(const WeakMixingResult& r);
Json to_json(const SpectralDensityEstimate& d);

Json cochain_json(const Action2D& action, const BitVector& values);
Json cochain_json(const Action2D& action, const Cochain1& pq);

// Shortest representation that parses back to the same double.
std::string format_double(double v);

// Frozen CSV layouts.
std::string return_stats_csv(const ReturnStats& s);          // return_time,count
std::string correlations_csv(const CorrelationSequence& c);  // lag,re,im
std::string density_csv(const SpectralDensityEstimate& d);   // bin,density

}  // namespace ergolab
