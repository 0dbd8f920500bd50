#include "riesz/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace riesz {

namespace {

// Counter-based splitmix64: fully specified, so restart streams are
// reproducible across platforms and thread counts.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }
  double uniform() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  Complex in_disc() {  // uniform on the closed unit disc
    const double angle = 2.0 * std::numbers::pi * uniform();
    const double radius = std::sqrt(uniform());
    return std::polar(radius, angle);
  }
  double gaussian() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
};

void clip_to_polydisc(std::vector<Complex>& x) {
  for (Complex& v : x) {
    const double m = std::abs(v);
    if (m > 1.0) v /= m;
  }
}

struct RestartOutcome {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<Complex> point;
  long long iterations = 0;
  bool converged = false;
};

RestartOutcome run_restart(int n, const PolydiscObjective& objective,
                           const PolydiscGradient& gradient,
                           const OptimizerConfig& cfg, int restart_index) {
  Rng rng(splitmix64(cfg.seed ^
                     (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(restart_index + 1))));
  RestartOutcome out;
  std::vector<Complex> x(static_cast<std::size_t>(n));
  for (Complex& v : x) v = rng.in_disc();

  double val = objective(x);
  if (!std::isfinite(val)) return out;  // aborted restart

  std::vector<Complex> g(static_cast<std::size_t>(n)), xn(static_cast<std::size_t>(n));
  double t = cfg.initial_step;
  bool converged = false;

  for (int it = 0; it < cfg.max_iters; ++it) {
    ++out.iterations;
    gradient(x, g);

    double step = t;
    bool accepted = false;
    double vn = val;
    for (int bt = 0; bt < 60 && step > 1e-18; ++bt) {
      for (int i = 0; i < n; ++i)
        xn[static_cast<std::size_t>(i)] =
            x[static_cast<std::size_t>(i)] + step * g[static_cast<std::size_t>(i)];
      clip_to_polydisc(xn);
      double lin = 0.0;
      for (int i = 0; i < n; ++i)
        lin += std::real(std::conj(g[static_cast<std::size_t>(i)]) *
                         (xn[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)]));
      vn = objective(xn);
      if (!std::isfinite(vn)) {
        step *= cfg.backtrack;
        continue;
      }
      if (vn >= val + 1e-4 * lin && vn > val) {
        accepted = true;
        break;
      }
      step *= cfg.backtrack;
    }
    if (!accepted) {
      converged = true;  // no improving projected step: stationary
      break;
    }
    const double gain = vn - val;
    x.swap(xn);
    val = vn;
    t = std::min(step * 1.3, 10.0);
    if (gain <= cfg.tol * std::max(1.0, std::abs(val))) {
      converged = true;
      break;
    }
  }

  // Phase-alignment polish: move coordinates whose gradient pushes outward
  // onto the unit circle, keeping only improvements.
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool improved = false;
    for (int i = 0; i < n; ++i) {
      gradient(x, g);
      const double m = std::abs(g[static_cast<std::size_t>(i)]);
      if (m <= 0.0) continue;
      const Complex old = x[static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)] / m;
      const double vn = objective(x);
      if (std::isfinite(vn) && vn > val + 1e-16) {
        val = vn;
        improved = true;
      } else {
        x[static_cast<std::size_t>(i)] = old;
      }
    }
    if (!improved) break;
  }

  out.value = val;
  out.point = std::move(x);
  out.converged = converged;
  return out;
}

}  // namespace

PolydiscResult maximize_on_polydisc(int n, const PolydiscObjective& objective,
                                    const PolydiscGradient& gradient,
                                    const OptimizerConfig& cfg) {
  if (n < 1) throw std::invalid_argument("maximize_on_polydisc: n must be >= 1");
  if (cfg.restarts < 1)
    throw std::invalid_argument("maximize_on_polydisc: restarts must be >= 1");
  if (!(cfg.tol > 0.0))
    throw std::invalid_argument("maximize_on_polydisc: tol must be positive");

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (int r = 0; r < cfg.restarts; ++r)
    outcomes[static_cast<std::size_t>(r)] = run_restart(n, objective, gradient, cfg, r);

  PolydiscResult res;
  res.restart_values.reserve(static_cast<std::size_t>(cfg.restarts));
  for (int r = 0; r < cfg.restarts; ++r) {
    const auto& o = outcomes[static_cast<std::size_t>(r)];
    res.restart_values.push_back(o.value);
    res.iterations += o.iterations;
    res.converged = res.converged || o.converged;
    if (o.value > res.best_value || res.best_restart < 0) {
      res.best_value = o.value;
      res.best_point = o.point;
      res.best_restart = r;
    }
  }
  return res;
}

double projection_objective(const GroupFourier& fourier, const FreqSet& E, double p,
                            std::span<const Complex> values) {
  const int g = fourier.spec().order();
  const auto& K = fourier.kernel(E);
  double s = 0.0;
  for (int o = 0; o < g; ++o) {
    Complex acc{0.0, 0.0};
    const Complex* row = &K[static_cast<std::size_t>(o) * static_cast<std::size_t>(g)];
    for (int o2 = 0; o2 < g; ++o2) acc += row[o2] * values[static_cast<std::size_t>(o2)];
    s += std::pow(std::abs(acc), p);
  }
  return s / static_cast<double>(g);
}

void projection_gradient(const GroupFourier& fourier, const FreqSet& E, double p,
                         std::span<const Complex> values, std::span<Complex> out) {
  const int g = fourier.spec().order();
  const auto& K = fourier.kernel(E);
  std::vector<Complex> proj(static_cast<std::size_t>(g));
  for (int o = 0; o < g; ++o) {
    Complex acc{0.0, 0.0};
    const Complex* row = &K[static_cast<std::size_t>(o) * static_cast<std::size_t>(g)];
    for (int o2 = 0; o2 < g; ++o2) acc += row[o2] * values[static_cast<std::size_t>(o2)];
    proj[static_cast<std::size_t>(o)] = acc;
  }
  for (auto& v : proj) {
    const double m = std::abs(v);
    v *= (m > 0.0 ? std::pow(m, p - 2.0) : 0.0);
  }
  for (int o = 0; o < g; ++o) {
    Complex acc{0.0, 0.0};
    const Complex* row = &K[static_cast<std::size_t>(o) * static_cast<std::size_t>(g)];
    for (int o2 = 0; o2 < g; ++o2) acc += row[o2] * proj[static_cast<std::size_t>(o2)];
    out[static_cast<std::size_t>(o)] = (p / static_cast<double>(g)) * acc;
  }
}

OptResult maximize_projection_norm(const GroupSpec& spec, const FreqSet& E, double p,
                                   const OptimizerConfig& cfg) {
  if (p < 2.0) throw std::invalid_argument("maximize_projection_norm: p must be >= 2");
  E.validate(spec);
  GroupFourier fourier(spec);
  fourier.kernel(E);  // build the cache before parallel use

  auto objective = [&](std::span<const Complex> x) {
    return projection_objective(fourier, E, p, x);
  };
  auto gradient = [&](std::span<const Complex> x, std::span<Complex> out) {
    projection_gradient(fourier, E, p, x, out);
  };
  const PolydiscResult raw =
      maximize_on_polydisc(spec.order(), objective, gradient, cfg);

  OptResult res;
  res.best_value = std::pow(raw.best_value, 1.0 / p);
  res.best_point = FiniteFunction(spec, raw.best_point);
  res.best_restart = raw.best_restart;
  res.iterations = raw.iterations;
  res.converged = raw.converged;
  res.restart_values.reserve(raw.restart_values.size());
  for (double v : raw.restart_values)
    res.restart_values.push_back(v > 0.0 ? std::pow(v, 1.0 / p) : 0.0);

  for (const Complex& v : res.best_point.values)
    if (std::abs(v) > 1.0 + 1e-12)
      throw std::logic_error("maximize_projection_norm: infeasible best point");
  return res;
}

double gradient_check(const GroupSpec& spec, const FreqSet& E, double p,
                      const FiniteFunction& at, double h, std::uint64_t seed) {
  if (p < 2.0) throw std::invalid_argument("gradient_check: p must be >= 2");
  if (h < 1e-7 || h > 1e-4)
    throw std::invalid_argument("gradient_check: h must lie in [1e-7, 1e-4]");
  if (!(at.spec == spec))
    throw std::invalid_argument("gradient_check: point spec mismatch");
  E.validate(spec);

  GroupFourier fourier(spec);
  const int n = spec.order();
  std::vector<Complex> g(static_cast<std::size_t>(n));
  projection_gradient(fourier, E, p, at.values, g);

  Rng rng(splitmix64(seed));
  double worst = 0.0;
  std::vector<Complex> lo(at.values), hi(at.values), d(static_cast<std::size_t>(n));
  for (int trial = 0; trial < 20; ++trial) {
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      d[static_cast<std::size_t>(i)] = Complex{rng.gaussian(), rng.gaussian()};
      norm2 += std::norm(d[static_cast<std::size_t>(i)]);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    double analytic = 0.0;
    for (int i = 0; i < n; ++i) {
      d[static_cast<std::size_t>(i)] *= scale;
      analytic += std::real(std::conj(g[static_cast<std::size_t>(i)]) *
                            d[static_cast<std::size_t>(i)]);
      hi[static_cast<std::size_t>(i)] =
          at.values[static_cast<std::size_t>(i)] + h * d[static_cast<std::size_t>(i)];
      lo[static_cast<std::size_t>(i)] =
          at.values[static_cast<std::size_t>(i)] - h * d[static_cast<std::size_t>(i)];
    }
    const double fd = (projection_objective(fourier, E, p, hi) -
                       projection_objective(fourier, E, p, lo)) /
                      (2.0 * h);
    const double denom = std::max({std::abs(analytic), std::abs(fd), 1e-8});
    worst = std::max(worst, std::abs(fd - analytic) / denom);
  }
  return worst;
}

double crossing_bisection(const std::function<double(double)>& norm_at, double p_lo,
                          double p_hi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("crossing_bisection: tol must be positive");
  if (!(p_lo < p_hi)) throw std::invalid_argument("crossing_bisection: empty bracket");
  constexpr double kSlack = 1e-9;
  const double f_lo = norm_at(p_lo);
  const double f_hi = norm_at(p_hi);
  if (f_lo > 1.0 + kSlack || f_hi <= 1.0 + kSlack)
    throw std::invalid_argument(
        "crossing_bisection: invalid bracket, need norm(p_lo) <= 1 < norm(p_hi)");
  while (p_hi - p_lo > tol) {
    const double mid = 0.5 * (p_lo + p_hi);
    (norm_at(mid) > 1.0 + kSlack ? p_hi : p_lo) = mid;
  }
  return 0.5 * (p_lo + p_hi);
}

}  // namespace riesz
