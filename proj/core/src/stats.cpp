#include "ergolab/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <numeric>
#include <stdexcept>

namespace ergolab {

double chi_square_upper_quantile(double dof, double upper_tail) {
  if (!(dof > 0)) throw std::invalid_argument("chi-square degrees of freedom must be positive");
  if (!(upper_tail > 0 && upper_tail < 1)) throw std::invalid_argument("tail probability must lie in (0,1)");
  const boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::quantile(boost::math::complement(dist, upper_tail));
}

double chi_square_uniform(std::span<const std::uint64_t> counts) {
  if (counts.empty()) throw std::invalid_argument("chi-square over zero bins");
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  if (total == 0) throw std::invalid_argument("chi-square over empty histogram");
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

}  // namespace ergolab
