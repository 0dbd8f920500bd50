#pragma once

#include <map>
#include <vector>

#include "riesz/trig_poly.hpp"

namespace riesz {

/// Discrete Fourier synthesis of `poly` on the tensor grid with the given
/// per-dimension sample counts. Each N_j must strictly exceed the coefficient
/// bandwidth in dimension j so that sampling is alias-free.
GridFunction evaluate_grid(const TrigPoly& poly, const std::vector<int>& sizes);

/// Restriction of the coefficient map to multi-indices with all entries >= 0.
TrigPoly riesz_project(const TrigPoly& poly);

/// L2 norm under normalized Lebesgue measure, via sqrt(sum |coeff|^2).
NormResult parseval_norm(const TrigPoly& poly);

/// ||f||_p for even integer p >= 2, exactly: ||f||_{2k}^{2k} = ||f^k||_2^2
/// with f^k computed by coefficient convolution.
NormResult even_p_norm_exact(const TrigPoly& poly, int p);

/// ((1/prod N_j) sum |values|^p)^{1/p} for p >= 1. The error estimate is a
/// Richardson comparison against the half-resolution subgrid when every size
/// is even, else a round-off model.
NormResult lp_norm_grid(const GridFunction& gf, double p);

/// Lower estimate max|f| on a grid oversampled by `oversample` relative to
/// the bandwidth, with a Bernstein-type upper refinement in error_estimate.
NormResult sup_norm_estimate(const TrigPoly& poly, int oversample);

struct QuadratureOptions {
  double rel_tol = 1e-10;     // stop doubling when successive values agree
  int base_multiplier = 4;    // starting N = base_multiplier * bandwidth
  std::size_t max_points = std::size_t{1} << 24;
};

/// Grid-quadrature Lp norms of one polynomial across many p, sharing cached
/// modulus grids between evaluations (each doubling level is synthesized
/// once).
class PolyNormEvaluator {
 public:
  explicit PolyNormEvaluator(TrigPoly poly, QuadratureOptions opts = {});

  NormResult norm(double p) const;
  double sup_lower(int oversample) const;
  const TrigPoly& poly() const { return poly_; }

 private:
  const std::vector<double>& modulus_grid(int level) const;
  std::vector<int> sizes_at(int level) const;

  TrigPoly poly_;
  QuadratureOptions opts_;
  std::vector<int> base_sizes_;
  mutable std::map<int, std::vector<double>> cache_;
};

/// Dispatch: even integer p uses the exact coefficient oracle, otherwise
/// doubled grid quadrature per QuadratureOptions.
NormResult lp_norm(const TrigPoly& poly, double p, QuadratureOptions opts = {});

}  // namespace riesz
