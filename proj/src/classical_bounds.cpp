#include "riesz/classical_bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace riesz {

namespace {
constexpr double kPi = std::numbers::pi;

// Objective of the Zygmund minimization in log form (constant terms dropped).
double zygmund_log_obj(double alpha, double p) {
  return -p * std::log(alpha) - std::log(std::cos(alpha));
}
}  // namespace

void ExponentQuery::validate() const {
  if (p <= 1.0) throw std::invalid_argument("ExponentQuery: p must exceed 1");
  if (!(q > 2.0)) throw std::invalid_argument("ExponentQuery: q must exceed 2");
  if (c < 2.0) throw std::invalid_argument("ExponentQuery: c must be >= 2");
  if (n < 1) throw std::invalid_argument("ExponentQuery: n must be >= 1");
}

const char* to_string(BoundKind k) {
  return k == BoundKind::kLower ? "lower" : "upper";
}

const char* to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::kWitness: return "witness";
    case BoundMethod::kInterpolation: return "interpolation";
    case BoundMethod::kOptimizer: return "optimizer";
    case BoundMethod::kRoot: return "root";
    case BoundMethod::kClosedForm: return "closed-form";
  }
  return "?";
}

double hv_upper(double p, int n) {
  if (p <= 1.0) throw std::invalid_argument("hv_upper: p must exceed 1");
  if (n < 1) throw std::invalid_argument("hv_upper: n must be >= 1");
  return std::pow(std::sin(kPi / p), -static_cast<double>(n));
}

double pichorides(double p) {
  if (p <= 1.0) throw std::invalid_argument("pichorides: p must exceed 1");
  const double t = std::tan(kPi / (2.0 * p));
  return std::max(t, 1.0 / t);
}

double thorin_interp_exponent(double q, double c) {
  if (!(q > 2.0)) throw std::invalid_argument("thorin_interp_exponent: q must exceed 2");
  if (c < 2.0) throw std::invalid_argument("thorin_interp_exponent: c must be >= 2");
  return 1.0 / (1.0 / q + (1.0 - 2.0 / q) / c);
}

ExponentBound torus_lower_chain(int n) {
  if (n < 1) throw std::invalid_argument("torus_lower_chain: n must be >= 1");
  ExponentBound b;
  b.kind = BoundKind::kLower;
  b.method = BoundMethod::kInterpolation;
  double p = 4.0;
  b.chain.push_back(p);
  for (int k = 1; k < n; ++k) {
    p = 4.0 * p / (2.0 + p);
    b.chain.push_back(p);
  }
  const double closed = 2.0 + 2.0 / (std::pow(2.0, static_cast<double>(n)) - 1.0);
  if (std::abs(p - closed) > 1e-12 * closed)
    throw std::logic_error("torus_lower_chain: iterate disagrees with closed form");
  b.value = p;
  std::ostringstream cert;
  cert << "p_1=4, p_k = 4 p_{k-1} / (2 + p_{k-1}); closed form 2 + 2/(2^n-1), n=" << n;
  b.certificate = cert.str();
  return b;
}

double zygmund_upper(double p) {
  if (p < 2.0) throw std::invalid_argument("zygmund_upper: p must be >= 2");
  // The objective is convex in alpha on (0, pi/2), so golden-section applies.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.01, b = kPi / 2.0 - 1e-6;
  double c1 = b - inv_phi * (b - a);
  double c2 = a + inv_phi * (b - a);
  double f1 = zygmund_log_obj(c1, p);
  double f2 = zygmund_log_obj(c2, p);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - inv_phi * (b - a);
      f1 = zygmund_log_obj(c1, p);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + inv_phi * (b - a);
      f2 = zygmund_log_obj(c2, p);
    }
  }
  const double alpha = 0.5 * (a + b);
  const double log_val =
      (std::log(2.0) + std::lgamma(p + 1.0) + zygmund_log_obj(alpha, p)) / p;
  return std::exp(log_val);
}

double complexification_factor(double p) {
  if (p < 1.0) throw std::invalid_argument("complexification_factor: p must be >= 1");
  // (sqrt(pi) Gamma(p/2+1) / Gamma((p+1)/2))^{1/p}
  const double log_val =
      (0.5 * std::log(kPi) + std::lgamma(p / 2.0 + 1.0) - std::lgamma((p + 1.0) / 2.0)) / p;
  return std::exp(log_val);
}

std::pair<double, double> riesz_hilbert_sandwich(double h_norm) {
  if (h_norm < 0.0)
    throw std::invalid_argument("riesz_hilbert_sandwich: h_norm must be >= 0");
  return {std::max(h_norm / 2.0 - 1.0, 1.0), 1.0 + h_norm / 2.0};
}

}  // namespace riesz
