#pragma once

#include <string>
#include <utility>
#include <vector>

namespace riesz {

/// Query for exponent machinery: L^q -> L^p on T^n with a known critical
/// exponent c used as interpolation endpoint.
struct ExponentQuery {
  double p = 2.0;
  double q = 4.0;  // may be +infinity
  int n = 1;
  double c = 2.0;
  void validate() const;
};

enum class BoundKind { kLower, kUpper };
enum class BoundMethod { kWitness, kInterpolation, kOptimizer, kRoot, kClosedForm };

const char* to_string(BoundKind k);
const char* to_string(BoundMethod m);

/// A certified lower or upper bound on a critical exponent together with a
/// replayable certificate of how it was produced.
struct ExponentBound {
  BoundKind kind = BoundKind::kLower;
  double value = 2.0;
  BoundMethod method = BoundMethod::kClosedForm;
  std::string certificate;
  std::vector<double> chain;  // interpolation chain or bisection bracket
};

/// Hollenbeck–Verbitsky: (sin(pi/p))^{-n}, the exact Lp->Lp norm of the Riesz
/// projection, used here as an L^inf -> L^p upper bound.
double hv_upper(double p, int n);

/// Pichorides: exact Lp->Lp norm of the conjugation operator,
/// max{tan(pi/2p), cot(pi/2p)}.
double pichorides(double p);

/// Riesz–Thorin between (L2->L2, norm 1) and (Linf->Lc, norm 1):
/// 1/p = 1/q + (1 - 2/q)/c. For c = 4 this is p = 4q/(2+q).
double thorin_interp_exponent(double q, double c);

/// Iterate p <- 4p/(2+p) from p=4, n-1 times; agrees with 2 + 2/(2^n - 1).
ExponentBound torus_lower_chain(int n);

/// min over alpha in (0, pi/2) of (2 Gamma(p+1) / (alpha^p cos alpha))^{1/p},
/// an upper bound for ||H_R||_{inf,p} derived from Zygmund's exponential
/// inequality. Golden-section minimization to 1e-10 in alpha.
double zygmund_upper(double p);

/// Gaussian complexification: factor(p) with
/// ||H||_{inf,p} <= factor(p) * ||H_R||_{inf,p};
/// factor = A_p^{-1} (pi^{-p/2} Gamma(p/2+1))^{1/p}, via log-Gamma.
double complexification_factor(double p);

/// (max(h/2 - 1, 1), 1 + h/2): the two-sided transfer between the Hilbert
/// transform and the Riesz projection, lower leg floored at 1.
std::pair<double, double> riesz_hilbert_sandwich(double h_norm);

}  // namespace riesz
