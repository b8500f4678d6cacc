#include "ergolab/cli/specs.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ergolab/cobound.hpp"
#include "ergolab/random.hpp"

namespace ergolab::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// "head:rest" -> {head, rest}; rest empty when there is no colon.
std::pair<std::string_view, std::string_view> head(std::string_view spec) {
  const auto pos = spec.find(':');
  if (pos == std::string_view::npos) return {spec, {}};
  return {spec.substr(0, pos), spec.substr(pos + 1)};
}

[[noreturn]] void bad(std::string_view what, std::string_view spec) {
  throw std::invalid_argument(std::string(what) + ": '" + std::string(spec) + "'");
}

double plain_real(std::string_view text) {
  double v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) bad("not a number", text);
  return v;
}

std::size_t parse_index(std::string_view text) {
  const auto v = parse_count(text);
  if (v > static_cast<std::uint64_t>(SIZE_MAX)) bad("index too large", text);
  return static_cast<std::size_t>(v);
}

std::vector<double> real_list(std::string_view text) {
  std::vector<double> out;
  for (auto p : split(text, ',')) out.push_back(parse_real(p));
  return out;
}

std::vector<std::size_t> index_list(std::string_view text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  for (auto p : split(text, ',')) out.push_back(parse_index(p));
  return out;
}

std::size_t finite_size(const System& system, std::string_view spec) {
  const auto* perm = std::get_if<FinitePermutation>(&system);
  if (!perm) bad("finite set needs a finite system", spec);
  return perm->size();
}

}  // namespace

double parse_real(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return plain_real(text);
  const double num = plain_real(text.substr(0, slash));
  const double den = plain_real(text.substr(slash + 1));
  if (den == 0) bad("zero denominator", text);
  return num / den;
}

std::uint64_t parse_count(std::string_view text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (!text.empty() && res.ec == std::errc{} && res.ptr == end) return v;
  const double d = parse_real(text);
  if (d < 0 || d != std::floor(d) || d >= 18446744073709551616.0) bad("not a non-negative integer", text);
  return static_cast<std::uint64_t>(d);
}

System parse_system(std::string_view spec) {
  const auto [kind, args] = head(spec);
  if (kind == "catmap") {
    if (!args.empty()) bad("catmap takes no parameters", spec);
    return CatMap{};
  }
  if (kind == "rotation") {
    if (args == "golden") return TorusRotation::golden();
    if (args.empty()) bad("rotation needs a vector", spec);
    return TorusRotation(real_list(args));
  }
  if (kind == "perm") return FinitePermutation(index_list(args));
  if (kind == "cycle") return FinitePermutation::cycle(parse_index(args));
  if (kind == "identity") return FinitePermutation::identity(parse_index(args));
  bad("unknown system", spec);
}

Set parse_set(std::string_view spec, const System& system, std::uint64_t seed) {
  const auto [kind, args] = head(spec);
  if (kind == "full" || kind == "empty") {
    Set like = IntervalUnion{};
    if (is_finite(system)) {
      like = FiniteSet(finite_size(system, spec));
    } else if (phase_dim(system) == 2) {
      like = GridSet(1, 2);
    } else if (phase_dim(system) != 1) {
      bad("no set representation for this system", spec);
    }
    return kind == "full" ? full_like(like) : empty_like(like);
  }
  if (kind == "interval") {
    std::vector<Interval> pieces;
    for (auto piece : split(args, ';')) {
      const auto ends = real_list(piece);
      if (ends.size() != 2) bad("interval needs a,b", piece);
      pieces.push_back({ends[0], ends[1]});
    }
    return IntervalUnion(std::move(pieces));
  }
  if (kind == "finite") {
    const auto n = finite_size(system, spec);
    const auto idx = index_list(args);
    for (auto i : idx)
      if (i >= n) bad("element outside the state space", spec);
    return FiniteSet::of(n, idx);
  }
  if (kind == "rect" || kind == "segment" || kind == "gridrand") {
    const auto parts = split(args, ':');
    const auto n = parse_index(parts.at(0));
    if (kind == "rect") {
      if (parts.size() != 2) bad("rect needs N:a,b", spec);
      const auto ab = real_list(parts[1]);
      if (ab.size() != 2) bad("rect needs N:a,b", spec);
      return GridSet::rectangle(n, ab[0], ab[1]);
    }
    if (kind == "segment") {
      if (parts.size() != 2) bad("segment needs N:a", spec);
      return GridSet::segment(n, parse_real(parts[1]));
    }
    if (parts.size() != 3) bad("gridrand needs N:d:p", spec);
    Rng rng(Rng::derive(seed, 0x67726964));
    return GridSet::random(n, parse_index(parts[1]), parse_real(parts[2]), rng);
  }
  if (kind == "cobound") {
    if (args.empty()) bad("cobound needs an inner set", spec);
    return coboundary_apply(system, parse_set(args, system, seed));
  }
  bad("unknown set", spec);
}

Observable parse_observable(std::string_view spec) {
  const auto [kind, args] = head(spec);
  if (kind == "fiber-sign") return Observable::fiber_sign();
  if (kind == "char") {
    std::vector<int> k;
    for (double v : real_list(args)) {
      if (v != std::floor(v) || std::fabs(v) > 1e6) bad("character frequencies must be integers", spec);
      k.push_back(static_cast<int>(v));
    }
    return Observable::torus_character(std::move(k));
  }
  if (kind == "grid") {
    const auto parts = split(args, ':');
    if (parts.size() != 3) bad("grid needs N:d:values", spec);
    return Observable::grid_function(parse_index(parts[0]), parse_index(parts[1]), real_list(parts[2]));
  }
  if (kind == "values") {
    auto v = real_list(args);
    const auto n = v.size();
    return Observable::grid_function(n, 0, std::move(v));
  }
  bad("unknown observable", spec);
}

Cochain2 parse_cochain2(std::string_view spec, std::size_t points) {
  const auto [kind, args] = head(spec);
  if (kind == "cells") {
    const auto idx = index_list(args);
    for (auto i : idx)
      if (i >= points) bad("cell outside the grid", spec);
    BitVector f(points);
    for (auto i : idx) f.set(i);
    return {f};
  }
  if (kind == "hex") return {BitVector::from_hex(args, points)};
  bad("unknown 2-cochain", spec);
}

}  // namespace ergolab::cli
