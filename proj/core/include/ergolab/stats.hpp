#pragma once

#include <cstdint>
#include <span>

namespace ergolab {

// x such that P(X > x) = upper_tail for X ~ chi-square(dof).
double chi_square_upper_quantile(double dof, double upper_tail);

// Pearson statistic of `counts` against equal expected frequency in every bin.
double chi_square_uniform(std::span<const std::uint64_t> counts);

}  // namespace ergolab
