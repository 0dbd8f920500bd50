#pragma once

#include <cstddef>
#include <vector>

#include "riesz/trig_poly.hpp"

namespace riesz::kernels {

/// Precomputed synthesis plan for one polynomial on one tensor grid:
/// per-dimension twiddle tables so the hot loop is pure multiply-add.
struct SynthPlan {
  int dims = 0;
  std::vector<int> sizes;
  std::vector<std::size_t> strides;        // row-major, first dim slowest
  std::vector<Complex> coeff;              // map order (deterministic)
  std::vector<std::vector<Complex>> twiddle;  // [dim][a * N_dim + k]
  std::size_t total = 0;

  static SynthPlan make(const TrigPoly& poly, const std::vector<int>& sizes);
};

/// values[k] = sum_a coeff[a] * prod_j twiddle[j][a*N_j + k_j].
/// Parallelized over grid points; each point is summed in a fixed order, so
/// the result is bitwise independent of the thread count.
void synth_grid(const SynthPlan& plan, Complex* out, bool parallel = true);
void synth_grid_serial(const SynthPlan& plan, Complex* out);

std::vector<double> abs_grid(const std::vector<Complex>& v, bool parallel = true);

/// sum_i mag[i]^p via fixed-size blocks: block partial sums are computed in
/// parallel, then combined serially in block order. Bitwise independent of
/// the thread count (but not of the block size, which is a compile-time
/// constant).
double pow_sum(const std::vector<double>& mag, double p, bool parallel = true);
double pow_sum_serial(const std::vector<double>& mag, double p);

double max_value(const std::vector<double>& v, bool parallel = true);

int max_threads();
void set_num_threads(int n);

}  // namespace riesz::kernels
