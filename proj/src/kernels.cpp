#include "riesz/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace riesz::kernels {

namespace {
constexpr std::size_t kReduceBlock = 4096;

inline Complex synth_point(const SynthPlan& plan, std::size_t flat) {
  Complex acc{0.0, 0.0};
  const std::size_t na = plan.coeff.size();
  // decompose flat index once
  int k[8];
  for (int j = 0; j < plan.dims; ++j) {
    k[j] = static_cast<int>((flat / plan.strides[static_cast<std::size_t>(j)]) %
                            static_cast<std::size_t>(plan.sizes[static_cast<std::size_t>(j)]));
  }
  for (std::size_t a = 0; a < na; ++a) {
    Complex t = plan.coeff[a];
    for (int j = 0; j < plan.dims; ++j) {
      const auto& tw = plan.twiddle[static_cast<std::size_t>(j)];
      t *= tw[a * static_cast<std::size_t>(plan.sizes[static_cast<std::size_t>(j)]) +
              static_cast<std::size_t>(k[j])];
    }
    acc += t;
  }
  return acc;
}
}  // namespace

SynthPlan SynthPlan::make(const TrigPoly& poly, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != poly.dims())
    throw std::invalid_argument("SynthPlan: sizes dimension mismatch");
  if (poly.dims() > 8)
    throw std::invalid_argument("SynthPlan: more than 8 dimensions unsupported");
  SynthPlan plan;
  plan.dims = poly.dims();
  plan.sizes = sizes;
  plan.total = 1;
  for (int n : sizes) {
    if (n < 1) throw std::invalid_argument("SynthPlan: sizes must be >= 1");
    plan.total *= static_cast<std::size_t>(n);
  }
  plan.strides.assign(static_cast<std::size_t>(plan.dims), 1);
  for (int j = plan.dims - 2; j >= 0; --j)
    plan.strides[static_cast<std::size_t>(j)] =
        plan.strides[static_cast<std::size_t>(j + 1)] *
        static_cast<std::size_t>(sizes[static_cast<std::size_t>(j + 1)]);

  plan.coeff.reserve(poly.term_count());
  std::vector<MultiIndex> indices;
  indices.reserve(poly.term_count());
  for (const auto& [idx, c] : poly.coeffs()) {
    indices.push_back(idx);
    plan.coeff.push_back(c);
  }

  plan.twiddle.resize(static_cast<std::size_t>(plan.dims));
  for (int j = 0; j < plan.dims; ++j) {
    const int n = sizes[static_cast<std::size_t>(j)];
    auto& tw = plan.twiddle[static_cast<std::size_t>(j)];
    tw.resize(plan.coeff.size() * static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < plan.coeff.size(); ++a) {
      const int e = indices[a][static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(e) *
                           static_cast<double>(k) / static_cast<double>(n);
        tw[a * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] =
            std::polar(1.0, ang);
      }
    }
  }
  return plan;
}

void synth_grid(const SynthPlan& plan, Complex* out, bool parallel) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(plan.total);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = synth_point(plan, static_cast<std::size_t>(i));
}

void synth_grid_serial(const SynthPlan& plan, Complex* out) {
  for (std::size_t i = 0; i < plan.total; ++i) out[i] = synth_point(plan, i);
}

std::vector<double> abs_grid(const std::vector<Complex>& v, bool parallel) {
  std::vector<double> out(v.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::abs(v[static_cast<std::size_t>(i)]);
  return out;
}

double pow_sum(const std::vector<double>& mag, double p, bool parallel) {
  const std::size_t n = mag.size();
  const std::size_t nb = (n + kReduceBlock - 1) / kReduceBlock;
  if (nb <= 1) return pow_sum_serial(mag, p);
  std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
    const std::size_t hi = std::min(lo + kReduceBlock, n);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += std::pow(mag[i], p);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

double pow_sum_serial(const std::vector<double>& mag, double p) {
  double s = 0.0;
  for (double m : mag) s += std::pow(m, p);
  return s;
}

double max_value(const std::vector<double>& v, bool parallel) {
  double best = 0.0;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for schedule(static) reduction(max : best) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    best = std::max(best, v[static_cast<std::size_t>(i)]);
  return best;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_num_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace riesz::kernels
