#pragma once

// Text specs for systems, sets, observables and 2-cochains.
//
//   systems:      rotation:golden | rotation:a[,b...] | catmap | perm:i,j,... |
//                 cycle:n | identity:n
//   sets:         interval:a,b[;a,b...] | finite:i,j,... | rect:N:a,b |
//                 segment:N:a | gridrand:N:d:p | cobound:<set> | full | empty
//   observables:  char:k[,k...] | fiber-sign | grid:N:d:v,v,... | values:v,v,...
//   2-cochains:   cells:i,j,... | hex:<digits>
//
// Reals accept decimal, exponent and p/q forms. Every parser throws
// std::invalid_argument with a message naming the offending spec.

#include <cstdint>
#include <string_view>

#include "ergolab/cohomo2d.hpp"
#include "ergolab/dynsys.hpp"
#include "ergolab/msets.hpp"
#include "ergolab/spectral.hpp"

namespace ergolab::cli {

double parse_real(std::string_view text);
// Integral value; "1e6" is accepted.
std::uint64_t parse_count(std::string_view text);

System parse_system(std::string_view spec);
// `seed` feeds gridrand sets.
Set parse_set(std::string_view spec, const System& system, std::uint64_t seed);
Observable parse_observable(std::string_view spec);
Cochain2 parse_cochain2(std::string_view spec, std::size_t points);

}  // namespace ergolab::cli
