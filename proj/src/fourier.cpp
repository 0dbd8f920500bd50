#include "riesz/fourier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "riesz/kernels.hpp"

namespace riesz {

namespace {

std::vector<int> default_base_sizes(const TrigPoly& poly, int multiplier) {
  std::vector<int> sizes(static_cast<std::size_t>(poly.dims()));
  for (int j = 0; j < poly.dims(); ++j)
    sizes[static_cast<std::size_t>(j)] = std::max(multiplier * poly.bandwidth(j), 4);
  return sizes;
}

double mean_pow(const std::vector<double>& mag, double p) {
  return kernels::pow_sum(mag, p) / static_cast<double>(mag.size());
}

}  // namespace

GridFunction evaluate_grid(const TrigPoly& poly, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != poly.dims())
    throw std::invalid_argument("evaluate_grid: sizes dimension mismatch");
  for (int j = 0; j < poly.dims(); ++j) {
    const int n = sizes[static_cast<std::size_t>(j)];
    if (n < 1) throw std::invalid_argument("evaluate_grid: sizes must be >= 1");
    if (n <= poly.bandwidth(j))
      throw std::invalid_argument(
          "evaluate_grid: N_" + std::to_string(j) + " = " + std::to_string(n) +
          " does not exceed the coefficient bandwidth " +
          std::to_string(poly.bandwidth(j)) + " (aliasing would corrupt norms)");
  }
  auto plan = kernels::SynthPlan::make(poly, sizes);
  GridFunction gf;
  gf.dims = poly.dims();
  gf.sizes = sizes;
  gf.values.resize(plan.total);
  kernels::synth_grid(plan, gf.values.data());
  return gf;
}

TrigPoly riesz_project(const TrigPoly& poly) {
  TrigPoly out(poly.dims());
  for (const auto& [idx, c] : poly.coeffs()) {
    bool keep = true;
    for (int e : idx)
      if (e < 0) {
        keep = false;
        break;
      }
    if (keep) out.set(idx, c);
  }
  return out;
}

NormResult parseval_norm(const TrigPoly& poly) {
  double s = 0.0;
  for (const auto& [idx, c] : poly.coeffs()) s += std::norm(c);
  return NormResult::exact_value(std::sqrt(s), NormMethod::kParsevalExact);
}

NormResult even_p_norm_exact(const TrigPoly& poly, int p) {
  if (p < 2 || p % 2 != 0)
    throw std::invalid_argument("even_p_norm_exact: p must be an even integer >= 2");
  const TrigPoly fk = poly.pow(p / 2);
  double s = 0.0;
  for (const auto& [idx, c] : fk.coeffs()) s += std::norm(c);
  return NormResult::exact_value(std::pow(s, 1.0 / static_cast<double>(p)),
                                 NormMethod::kEvenPExact);
}

NormResult lp_norm_grid(const GridFunction& gf, double p) {
  gf.validate();
  if (p < 1.0) throw std::invalid_argument("lp_norm_grid: p must be >= 1");
  const auto mag = kernels::abs_grid(gf.values);
  const double value = std::pow(mean_pow(mag, p), 1.0 / p);

  bool all_even = true;
  for (int n : gf.sizes)
    if (n % 2 != 0 || n < 2) all_even = false;

  double err;
  if (all_even) {
    // Richardson comparison against the stride-2 subgrid.
    std::vector<std::size_t> strides(gf.sizes.size(), 1);
    for (int j = static_cast<int>(gf.sizes.size()) - 2; j >= 0; --j)
      strides[static_cast<std::size_t>(j)] =
          strides[static_cast<std::size_t>(j + 1)] *
          static_cast<std::size_t>(gf.sizes[static_cast<std::size_t>(j + 1)]);
    std::size_t coarse_total = 1;
    for (int n : gf.sizes) coarse_total *= static_cast<std::size_t>(n / 2);
    std::vector<double> coarse;
    coarse.reserve(coarse_total);
    for (std::size_t ci = 0; ci < coarse_total; ++ci) {
      std::size_t rem = ci, fine = 0;
      for (std::size_t j = 0; j < gf.sizes.size(); ++j) {
        const std::size_t nj = static_cast<std::size_t>(gf.sizes[j] / 2);
        std::size_t cstride = 1;
        for (std::size_t l = j + 1; l < gf.sizes.size(); ++l)
          cstride *= static_cast<std::size_t>(gf.sizes[l] / 2);
        const std::size_t kj = (rem / cstride) % nj;
        rem %= cstride;
        fine += 2 * kj * strides[j];
      }
      coarse.push_back(mag[fine]);
    }
    const double coarse_value = std::pow(mean_pow(coarse, p), 1.0 / p);
    err = std::abs(value - coarse_value);
  } else {
    err = std::abs(value) * 1e-14 * std::log2(static_cast<double>(mag.size()) + 2.0);
  }
  return NormResult::estimate(value, NormMethod::kGridQuadrature, err);
}

NormResult sup_norm_estimate(const TrigPoly& poly, int oversample) {
  if (oversample < 2)
    throw std::invalid_argument("sup_norm_estimate: oversample must be >= 2");
  std::vector<int> sizes(static_cast<std::size_t>(poly.dims()));
  double slack = 0.0;
  for (int j = 0; j < poly.dims(); ++j) {
    const int n = oversample * (poly.bandwidth(j) + 1);
    sizes[static_cast<std::size_t>(j)] = n;
    slack += std::numbers::pi * static_cast<double>(poly.degree_bound(j)) /
             static_cast<double>(n);
  }
  const auto gf = evaluate_grid(poly, sizes);
  const double lower = kernels::max_value(kernels::abs_grid(gf.values));
  // Bernstein per variable: sup <= grid_max / (1 - sum_j pi d_j / N_j).
  double err = std::numeric_limits<double>::infinity();
  if (slack < 1.0) err = lower / (1.0 - slack) - lower;
  return NormResult::estimate(lower, NormMethod::kGridQuadrature, err);
}

PolyNormEvaluator::PolyNormEvaluator(TrigPoly poly, QuadratureOptions opts)
    : poly_(std::move(poly)),
      opts_(opts),
      base_sizes_(default_base_sizes(poly_, opts.base_multiplier)) {}

std::vector<int> PolyNormEvaluator::sizes_at(int level) const {
  std::vector<int> s = base_sizes_;
  for (int& n : s) n <<= level;
  return s;
}

const std::vector<double>& PolyNormEvaluator::modulus_grid(int level) const {
  auto it = cache_.find(level);
  if (it != cache_.end()) return it->second;
  const auto sizes = sizes_at(level);
  auto plan = kernels::SynthPlan::make(poly_, sizes);
  std::vector<Complex> vals(plan.total);
  kernels::synth_grid(plan, vals.data());
  return cache_.emplace(level, kernels::abs_grid(vals)).first->second;
}

NormResult PolyNormEvaluator::norm(double p) const {
  if (p < 1.0) throw std::invalid_argument("PolyNormEvaluator: p must be >= 1");
  if (poly_.empty())
    return NormResult::estimate(0.0, NormMethod::kGridQuadrature, 0.0);
  double prev = std::pow(mean_pow(modulus_grid(0), p), 1.0 / p);
  int level = 0;
  for (;;) {
    std::size_t next_total = 1;
    for (int n : sizes_at(level + 1)) next_total *= static_cast<std::size_t>(n);
    if (next_total > opts_.max_points) break;
    ++level;
    const double cur = std::pow(mean_pow(modulus_grid(level), p), 1.0 / p);
    const double diff = std::abs(cur - prev);
    if (diff <= opts_.rel_tol * std::max(std::abs(cur), 1e-300))
      return NormResult::estimate(cur, NormMethod::kGridQuadrature, diff);
    prev = cur;
  }
  return NormResult::estimate(prev, NormMethod::kGridQuadrature,
                              std::abs(prev) * opts_.rel_tol * 10.0);
}

double PolyNormEvaluator::sup_lower(int oversample) const {
  return sup_norm_estimate(poly_, oversample).value;
}

NormResult lp_norm(const TrigPoly& poly, double p, QuadratureOptions opts) {
  const double r = std::round(p);
  if (std::abs(p - r) < 1e-12 && r >= 2.0 && static_cast<long long>(r) % 2 == 0 &&
      r <= 64.0)
    return even_p_norm_exact(poly, static_cast<int>(r));
  return PolyNormEvaluator(poly, opts).norm(p);
}

}  // namespace riesz
