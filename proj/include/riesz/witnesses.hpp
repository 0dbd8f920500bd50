#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "riesz/classical_bounds.hpp"
#include "riesz/fourier.hpp"
#include "riesz/trig_poly.hpp"

namespace riesz {

/// One-dimensional extremal family: the boundary function
/// f = (1 - eps z)/(1 - eps z̄) is unimodular and its Riesz projection is
/// exactly 1 - eps^2 - eps z.
struct Theorem1Witness {
  double eps;

  explicit Theorem1Witness(double e);

  TrigPoly projection() const;

  /// Truncation of the geometric expansion (1 - eps z) sum_k eps^k z^{-k} to
  /// order >= 2; projecting it recovers projection() exactly.
  TrigPoly truncated_source(int order) const;
};

struct WitnessReport {
  std::string id;
  std::map<std::string, double> params;
  double p = 0.0;
  NormResult norm;
  double best_eps = 0.0;
  bool exceeds_one = false;
  double tolerance = 1e-9;  // exceeds_one <=> norm.value > 1 + tolerance
};

/// ||1 - eps^2 - eps z||_p under normalized measure.
NormResult t1_projection_norm(double eps, double p);

/// Evaluate the family over an eps grid, report the best eps and whether the
/// norm exceeds 1 (beyond `tol`).
WitnessReport t1_scan(double p, std::span<const double> eps_grid, double tol = 1e-9);

/// Geometric default grid 0.1 * 2^{-k} down to 1e-4.
std::vector<double> default_eps_grid();

/// Homogeneous holomorphic polynomial g on the bidisk with sup|g| <= 1;
/// h = (1-g)/(1-conj(g)) has |h| = 1 and P2+ h = a - g, a = 1 - ||g||_2^2.
struct BidiskWitness {
  TrigPoly g;
  int degree = 0;       // common total degree of g's monomials
  double g_l2sq = 0.0;  // ||g||_2^2
  double a = 0.0;       // 1 - ||g||_2^2, in (0, 1]

  explicit BidiskWitness(TrigPoly g_in);

  /// g = (z1 + z2)^m / scale.
  static BidiskWitness binomial(int m, double scale);
};

/// The projected function a - g as a TrigPoly.
TrigPoly bidisk_projection(const BidiskWitness& w);

/// ||P2+ h||_4^4 = 1 + ||g||_2^8 + ||g||_4^4 - 2 ||g||_2^4, via the even-p
/// coefficient oracle.
double bidisk_norm4(const BidiskWitness& w);

/// Bisection on p of ||a - g||_p = 1. Requires sup|a - g| > 1, else throws.
ExponentBound bidisk_crossing_exponent(const BidiskWitness& w, double tol = 1e-6);

/// (2/pi) * || log|1 - e^{i theta}| ||_p, a lower bound for ||H_R||_{inf,p}.
/// Stable through p = 512 (log-sum-exp quadrature).
double hilbert_witness_lower(double p);

/// Same value plus a refinement-difference error estimate (for reports).
std::pair<double, double> hilbert_witness_lower_with_err(double p);

/// L(p)^n where L(p) is the best one-dimensional lower bound for
/// ||P1+||_{inf,p} available from witnesses (Hilbert sandwich leg, floored at
/// the Theorem-1 witness value).
double tensor_lower_bound(double p, int n);

}  // namespace riesz
