#include "ergolab/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "detail/dynamics.hpp"
#include "ergolab/induced.hpp"
#include "ergolab/random.hpp"

namespace ergolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW planning is not thread-safe; execution is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
struct FftwPlanDestroy {
  void operator()(fftw_plan p) const noexcept {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(p);
  }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;
using FftwPlan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, FftwPlanDestroy>;

FftwBuffer make_buffer(std::size_t n) {
  FftwBuffer b(fftw_alloc_complex(n));
  if (!b) throw std::bad_alloc();
  std::fill_n(reinterpret_cast<double*>(b.get()), 2 * n, 0.0);
  return b;
}

FftwPlan make_plan(std::size_t n, fftw_complex* in, fftw_complex* out, int sign) {
  std::lock_guard lock(fftw_planner_mutex());
  return FftwPlan(fftw_plan_dft_1d(static_cast<int>(n), in, out, sign, FFTW_ESTIMATE));
}

std::size_t grid_cell(const TorusPoint& x, std::size_t n) {
  std::size_t cell = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    auto c = static_cast<std::size_t>(x[i] * static_cast<double>(n));
    cell = cell * n + std::min(c, n - 1);
  }
  return cell;
}

}  // namespace

// Observable

Observable Observable::torus_character(std::vector<int> k) {
  if (k.empty() || k.size() > kMaxTorusDim) throw std::invalid_argument("character needs 1 to 4 frequencies");
  Observable f;
  f.kind_ = Kind::kTorusCharacter;
  f.k_ = std::move(k);
  return f;
}

Observable Observable::fiber_sign() {
  Observable f;
  f.kind_ = Kind::kFiberSign;
  return f;
}

Observable Observable::grid_function(std::size_t n, std::size_t dim, std::vector<double> values) {
  if (n == 0) throw std::invalid_argument("grid function needs a positive resolution");
  std::size_t expected = dim == 0 ? n : 1;
  for (std::size_t i = 0; i < dim; ++i) expected *= n;
  if (values.size() != expected) throw std::invalid_argument("grid function needs one value per cell");
  Observable f;
  f.kind_ = Kind::kGridFunction;
  f.n_ = n;
  f.dim_ = dim;
  f.values_ = std::move(values);
  return f;
}

Observable Observable::constant(double value) {
  Observable f = grid_function(1, 1, {value});
  f.mean_removed_ = false;
  return f;
}

std::complex<double> Observable::operator()(const TorusPoint& x, bool parity) const {
  switch (kind_) {
    case Kind::kTorusCharacter: {
      if (k_.size() != x.dim()) throw std::invalid_argument("character dimension does not match the point");
      double phase = 0;
      for (std::size_t i = 0; i < k_.size(); ++i) phase += wrap_unit(static_cast<double>(k_[i]) * x[i]);
      return std::polar(1.0, kTwoPi * wrap_unit(phase));
    }
    case Kind::kFiberSign:
      return parity ? -1.0 : 1.0;
    case Kind::kGridFunction:
      if (dim_ == 0) throw std::invalid_argument("per-state function evaluated on a torus point");
      if (n_ == 1) return values_[0];
      if (dim_ != x.dim()) throw std::invalid_argument("grid function dimension does not match the point");
      return values_[grid_cell(x, n_)];
  }
  return 0.0;
}

std::complex<double> Observable::operator()(std::size_t x, bool parity) const {
  switch (kind_) {
    case Kind::kTorusCharacter:
      throw std::invalid_argument("torus character evaluated on a finite state");
    case Kind::kFiberSign:
      return parity ? -1.0 : 1.0;
    case Kind::kGridFunction:
      if (n_ == 1 && dim_ == 1) return values_[0];
      if (dim_ != 0) throw std::invalid_argument("grid function evaluated on a finite state");
      if (x >= values_.size()) throw std::out_of_range("state outside the function's domain");
      return values_[x];
  }
  return 0.0;
}

std::complex<double> Observable::operator()(const Point& x, bool parity) const {
  return std::visit([&](const auto& p) { return (*this)(p, parity); }, x);
}

std::string Observable::describe() const {
  switch (kind_) {
    case Kind::kTorusCharacter: {
      std::string s = "char:";
      for (std::size_t i = 0; i < k_.size(); ++i) s += (i ? "," : "") + std::to_string(k_[i]);
      return s;
    }
    case Kind::kFiberSign:
      return "fiber-sign";
    case Kind::kGridFunction:
      return "grid:" + std::to_string(n_) + ":" + std::to_string(dim_);
  }
  return "";
}

std::string_view to_string(OrbitMode m) noexcept {
  switch (m) {
    case OrbitMode::kBase:
      return "base";
    case OrbitMode::kInduced:
      return "induced";
    case OrbitMode::kSkew:
      return "skew";
  }
  return "base";
}

std::string_view to_string(SpectrumVerdict v) noexcept {
  switch (v) {
    case SpectrumVerdict::kPointSpectrumConsistent:
      return "point-spectrum-consistent";
    case SpectrumVerdict::kContinuousSpectrumConsistent:
      return "continuous-spectrum-consistent";
    case SpectrumVerdict::kInconclusive:
      break;
  }
  return "inconclusive";
}

std::complex<double> RootOfUnity::value() const {
  return std::polar(1.0, kTwoPi * static_cast<double>(numerator) / static_cast<double>(order));
}

// Sampling

std::vector<std::complex<double>> sample_observable(const System& system, const Observable& f, std::size_t length,
                                                    std::uint64_t seed, const OrbitSpec& orbit) {
  std::vector<std::complex<double>> g;
  g.reserve(length);
  Rng rng(seed);

  if (orbit.mode == OrbitMode::kBase) {
    Point x = random_point(system, rng);
    std::visit(
        [&](const auto& sys) {
          using S = std::decay_t<decltype(sys)>;
          if constexpr (std::is_same_v<S, FinitePermutation>) {
            std::size_t y = std::get<std::size_t>(x);
            for (std::size_t j = 0; j < length; ++j, y = sys(y)) g.push_back(f(y, false));
          } else {
            TorusPoint y = std::get<TorusPoint>(x);
            for (std::size_t j = 0; j < length; ++j, y = sys.apply(y)) g.push_back(f(y, false));
          }
        },
        system);
    return g;
  }

  if (!orbit.set) throw std::invalid_argument("induced and skew orbits need a set A");
  const Set& a = *orbit.set;
  if (orbit.mode == OrbitMode::kSkew) {
    detail::dispatch<void>(system, a, [&](auto start, auto step, auto member, auto sampler) {
      decltype(start) x = sampler(rng);
      bool parity = false;
      for (std::size_t j = 0; j < length; ++j) {
        g.push_back(f(x, parity));
        parity = parity != member(x);
        x = step(x);
      }
    });
    return g;
  }

  const double m = measure(a);
  if (!(m > 0)) throw std::invalid_argument("induced orbit needs a set of positive measure");
  const std::uint64_t cap = orbit.cap ? orbit.cap : default_return_cap(m);
  Point x0 = sample_in(system, a, rng);
  detail::dispatch<void>(system, a, [&](auto start, auto step, auto member, auto) {
    using P = decltype(start);
    P x = std::get<P>(x0);
    for (std::size_t j = 0; j < length; ++j) {
      g.push_back(f(x, false));
      if (j + 1 == length) break;
      std::uint64_t t = 0;
      do {
        if (++t > cap) throw CapExceededError(cap);
        x = step(x);
      } while (!member(x));
    }
  });
  return g;
}

// Correlations

CorrelationSequence correlate(std::vector<std::complex<double>> g, std::uint64_t orbit_length, std::size_t lags,
                              bool remove_mean) {
  if (orbit_length == 0) throw std::invalid_argument("orbit length must be positive");
  const std::size_t total = static_cast<std::size_t>(orbit_length) + lags;
  if (g.size() < total) throw std::invalid_argument("not enough samples for the requested lags");
  g.resize(total);
  if (remove_mean) {
    std::complex<double> mean = 0;
    for (const auto& v : g) mean += v;
    mean /= static_cast<double>(total);
    for (auto& v : g) v -= mean;
  }

  const std::size_t p = std::bit_ceil(total);
  FftwBuffer a = make_buffer(p);
  FftwBuffer b = make_buffer(p);
  std::copy(g.begin(), g.end(), reinterpret_cast<std::complex<double>*>(a.get()));
  std::copy_n(g.begin(), orbit_length, reinterpret_cast<std::complex<double>*>(b.get()));

  FftwPlan fa = make_plan(p, a.get(), a.get(), FFTW_FORWARD);
  FftwPlan fb = make_plan(p, b.get(), b.get(), FFTW_FORWARD);
  FftwPlan back = make_plan(p, a.get(), a.get(), FFTW_BACKWARD);
  fftw_execute(fa.get());
  fftw_execute(fb.get());
  auto* av = reinterpret_cast<std::complex<double>*>(a.get());
  const auto* bv = reinterpret_cast<const std::complex<double>*>(b.get());
  for (std::size_t k = 0; k < p; ++k) av[k] *= std::conj(bv[k]);
  fftw_execute(back.get());

  CorrelationSequence c;
  c.lags = lags;
  c.orbit_length = orbit_length;
  c.mean_removed = remove_mean;
  c.c.resize(lags + 1);
  const double scale = 1.0 / (static_cast<double>(p) * static_cast<double>(orbit_length));
  for (std::size_t n = 0; n <= lags; ++n) c.c[n] = av[n] * scale;
  c.c[0] = c.c[0].real();
  return c;
}

CorrelationSequence autocorrelation(const System& system, const Observable& f, std::uint64_t orbit_length,
                                    std::size_t lags, std::uint64_t seed, const OrbitSpec& orbit) {
  if (lags == 0 || orbit_length < 10 * static_cast<std::uint64_t>(lags)) {
    throw std::invalid_argument("orbit length must be at least 10 x lags");
  }
  auto g = sample_observable(system, f, static_cast<std::size_t>(orbit_length) + lags, seed, orbit);
  CorrelationSequence c = correlate(std::move(g), orbit_length, lags, f.mean_removed());
  c.seed = seed;
  return c;
}

double wiener_statistic(const CorrelationSequence& c) {
  if (!c.mean_removed) throw std::invalid_argument("Wiener statistic needs a mean-removed observable");
  if (c.c.size() != c.lags + 1 || c.lags == 0) throw std::invalid_argument("malformed correlation sequence");
  const double c0 = c.c[0].real();
  if (!(c0 > 0)) throw std::invalid_argument("degenerate observable: c[0] = 0");
  double sum = 0;
  for (std::size_t n = 1; n <= c.lags; ++n) sum += std::norm(c.c[n]);
  return sum / (static_cast<double>(c.lags) * c0 * c0);
}

SpectralDensityEstimate spectral_density(const CorrelationSequence& c, std::size_t bins) {
  if (bins == 0 || bins > c.lags) throw std::invalid_argument("need 1 <= bins <= lags");
  if (c.c.size() != c.lags + 1) throw std::invalid_argument("malformed correlation sequence");
  const std::size_t lags = c.lags;
  std::vector<std::complex<double>> roots(bins);
  for (std::size_t m = 0; m < bins; ++m) {
    roots[m] = std::polar(1.0, -kTwoPi * static_cast<double>(m) / static_cast<double>(bins));
  }

  SpectralDensityEstimate est;
  est.bins = bins;
  est.density.assign(bins, c.c[0].real() / static_cast<double>(bins));
  for (std::size_t n = 1; n <= lags; ++n) {
    const double weight = 1.0 - static_cast<double>(n) / static_cast<double>(lags + 1);
    // integral of e^{-2 pi i n theta} over bin k = (root((k+1)n) - root(kn)) / (-2 pi i n)
    const std::complex<double> coef = weight * c.c[n] / std::complex<double>(0.0, -kTwoPi * static_cast<double>(n));
    std::size_t idx = 0;  // k * n mod bins
    const std::size_t stride = n % bins;
    for (std::size_t k = 0; k < bins; ++k) {
      std::size_t next = idx + stride;
      if (next >= bins) next -= bins;
      est.density[k] += 2.0 * (coef * (roots[next] - roots[idx])).real();
      idx = next;
    }
  }
  for (auto& d : est.density) {
    d = std::max(d, 0.0);
    est.total_mass += d;
  }
  return est;
}

std::vector<RootOfUnity> koopman_spectrum_finite(const FinitePermutation& perm) {
  std::vector<RootOfUnity> out;
  out.reserve(perm.size());
  for (const auto& cycle : perm.cycles()) {
    for (std::size_t k = 0; k < cycle.size(); ++k) out.push_back({k, cycle.size()});
  }
  return out;
}

SpectrumVerdict classify_spectrum(double wm, const WeakMixingParams& params) noexcept {
  if (wm < params.continuous_below) return SpectrumVerdict::kContinuousSpectrumConsistent;
  if (wm > params.point_above) return SpectrumVerdict::kPointSpectrumConsistent;
  return SpectrumVerdict::kInconclusive;
}

std::vector<WeakMixingResult> weak_mixing_experiment(const System& system, const std::vector<Observable>& observables,
                                                     const WeakMixingParams& params) {
  std::vector<WeakMixingResult> out;
  out.reserve(observables.size());
  for (std::size_t i = 0; i < observables.size(); ++i) {
    const Observable& f = observables[i];
    if (!f.mean_removed()) throw std::invalid_argument("weak-mixing observables must be mean-removed");
    WeakMixingResult r;
    r.observable = f.describe();
    r.correlations = autocorrelation(system, f, params.orbit_length, params.lags, Rng::derive(params.seed, i), params.orbit);
    r.wm = wiener_statistic(r.correlations);
    r.verdict = classify_spectrum(r.wm, params);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ergolab
