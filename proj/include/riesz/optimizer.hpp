#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "riesz/finite_group.hpp"

namespace riesz {

/// Multi-start configuration. Identical config + seed gives bitwise
/// identical results regardless of parallelism: restarts draw from
/// independent substreams of the master seed and the merge is a serial
/// lowest-index-wins max.
struct OptimizerConfig {
  int restarts = 128;
  int max_iters = 500;
  double initial_step = 0.5;
  double backtrack = 0.5;
  double tol = 1e-13;  // convergence tolerance on objective improvement
  std::uint64_t seed = 1;
  bool parallel = true;
};

struct PolydiscResult {
  double best_value = 0.0;
  std::vector<Complex> best_point;
  std::vector<double> restart_values;
  int best_restart = -1;
  long long iterations = 0;
  bool converged = false;
};

using PolydiscObjective = std::function<double(std::span<const Complex>)>;
using PolydiscGradient =
    std::function<void(std::span<const Complex>, std::span<Complex>)>;

/// Projected gradient ascent with Armijo backtracking over the product of
/// closed unit discs, multi-start, then a fixed-point phase-alignment sweep
/// (maximizers lie on the distinguished boundary generically).
PolydiscResult maximize_on_polydisc(int n, const PolydiscObjective& objective,
                                    const PolydiscGradient& gradient,
                                    const OptimizerConfig& cfg);

struct OptResult {
  double best_value = 0.0;  // norm estimate Phi(best)^{1/p}
  FiniteFunction best_point;
  std::vector<double> restart_values;
  int best_restart = -1;
  long long iterations = 0;
  bool converged = false;
};

/// Phi(f) = (1/|G|) sum |P_E f|^p over the polydisc ||f||_inf <= 1. The
/// reported best value is a certified lower bound on ||P_E||_{inf,p}.
OptResult maximize_projection_norm(const GroupSpec& spec, const FreqSet& E,
                                   double p, const OptimizerConfig& cfg);

/// The ascent objective and its gradient as a real-linear map:
/// grad = (p/|G|) P_E(|P_E f|^{p-2} P_E f).
double projection_objective(const GroupFourier& fourier, const FreqSet& E,
                            double p, std::span<const Complex> values);
void projection_gradient(const GroupFourier& fourier, const FreqSet& E, double p,
                         std::span<const Complex> values, std::span<Complex> out);

/// Central finite differences of Phi along 20 random directions against the
/// analytic gradient; returns the worst relative deviation.
double gradient_check(const GroupSpec& spec, const FreqSet& E, double p,
                      const FiniteFunction& at, double h, std::uint64_t seed = 7);

/// Bisection of a nondecreasing norm map against the level 1. Requires
/// norm_at(p_lo) <= 1 < norm_at(p_hi); the exceedance predicate carries a
/// 1e-9 slack so maps that sit exactly at 1 (up to round-off) on the
/// sub-critical side keep a valid bracket.
double crossing_bisection(const std::function<double(double)>& norm_at,
                          double p_lo, double p_hi, double tol);

}  // namespace riesz
