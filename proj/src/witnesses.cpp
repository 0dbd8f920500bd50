#include "riesz/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "riesz/optimizer.hpp"

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half).
constexpr double kGL16X[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kGL16W[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

template <class LogF>
void gl16_log_panel(LogF&& log_f, double lo, double hi, std::vector<double>& terms) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  for (int i = 0; i < 8; ++i) {
    for (int sgn = -1; sgn <= 1; sgn += 2) {
      const double x = c + h * kGL16X[i] * static_cast<double>(sgn);
      const double lf = log_f(x);
      if (std::isfinite(lf)) terms.push_back(lf + std::log(h * kGL16W[i]));
    }
  }
}

double log_sum_exp(const std::vector<double>& terms) {
  if (terms.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(terms.begin(), terms.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - m);
  return m + std::log(s);
}

// phi(theta) = |log(2 sin(theta/2))| on (0, pi].
double phi_abs(double theta) {
  return std::abs(std::log(2.0 * std::sin(0.5 * theta)));
}

// log of (1/pi) * integral_0^pi phi(theta)^p d theta, with the singular mass
// theta < split handled by the exact change of variables
// w = -log(2 sin(theta/2)):  integrand w^p e^{-w} (1 - e^{-2w}/4)^{-1/2}.
// `refine` doubles the panel density everywhere.
double log_hilbert_integral(double p, int refine) {
  const double split = 0.1;
  std::vector<double> terms;
  terms.reserve(4096);

  // Inner region in w-space: [w0, wmax), Gamma-type integrand.
  const double w0 = -std::log(2.0 * std::sin(0.5 * split));
  const double wmax = w0 + p + 14.0 * std::sqrt(p + 1.0) + 60.0;
  const double ratio = 1.0 + std::min(0.35, 4.0 / std::max(p, 12.0)) / refine;
  auto log_inner = [p](double w) {
    return p * std::log(w) - w - 0.5 * std::log1p(-0.25 * std::exp(-2.0 * w));
  };
  for (double lo = w0; lo < wmax;) {
    const double hi = std::min(lo * ratio, wmax);
    gl16_log_panel(log_inner, lo, hi, terms);
    lo = hi;
  }

  auto log_outer = [p](double th) {
    const double f = phi_abs(th);
    return f > 0.0 ? p * std::log(f) : -std::numeric_limits<double>::infinity();
  };

  // [split, pi/3): phi decreases to 0; panel width tracks the local decay
  // rate of phi^p near the hot end.
  const double zero = kPi / 3.0;
  const double width_lo = (zero - split) / (4000.0 * refine);
  const double width_hi = (zero - split) / (8.0 * refine);
  for (double lo = split; lo < zero;) {
    const double w = std::clamp(4.0 * lo * phi_abs(lo) / std::max(p, 4.0),
                                width_lo, width_hi);
    const double hi = std::min(lo + w, zero);
    gl16_log_panel(log_outer, lo, hi, terms);
    lo = hi;
  }

  // [pi/3, pi]: phi rises from 0 to log 2; uniform panels.
  const int nb = std::max(24, static_cast<int>(std::ceil(p / 3.0))) * refine;
  for (int i = 0; i < nb; ++i) {
    const double lo = zero + (kPi - zero) * static_cast<double>(i) / nb;
    const double hi = zero + (kPi - zero) * static_cast<double>(i + 1) / nb;
    gl16_log_panel(log_outer, lo, hi, terms);
  }

  return log_sum_exp(terms) - std::log(kPi);
}

double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  unsigned long long num = 1;
  for (int i = 0; i < k; ++i) {
    num = num * static_cast<unsigned long long>(n - i) /
          static_cast<unsigned long long>(i + 1);
  }
  return static_cast<double>(num);
}

}  // namespace

Theorem1Witness::Theorem1Witness(double e) : eps(e) {
  if (!(e > 0.0 && e < 0.5))
    throw std::invalid_argument("Theorem1Witness: eps must lie in (0, 1/2)");
}

TrigPoly Theorem1Witness::projection() const {
  TrigPoly p(1);
  p.set({0}, 1.0 - eps * eps);
  p.set({1}, -eps);
  return p;
}

TrigPoly Theorem1Witness::truncated_source(int order) const {
  if (order < 2)
    throw std::invalid_argument("Theorem1Witness: truncation order must be >= 2");
  // (1 - eps z) * sum_{k=0}^{order} eps^k z^{-k}
  TrigPoly f(1);
  double ek = 1.0;
  for (int k = 0; k <= order; ++k) {
    f.add({-k}, ek);
    f.add({1 - k}, -eps * ek);
    ek *= eps;
  }
  return f;
}

NormResult t1_projection_norm(double eps, double p) {
  Theorem1Witness w(eps);
  if (p < 2.0) throw std::invalid_argument("t1_projection_norm: p must be >= 2");
  return lp_norm(w.projection(), p);
}

WitnessReport t1_scan(double p, std::span<const double> eps_grid, double tol) {
  if (p < 2.0) throw std::invalid_argument("t1_scan: p must be >= 2");
  if (eps_grid.empty()) throw std::invalid_argument("t1_scan: empty eps grid");
  WitnessReport rep;
  rep.id = "t1";
  rep.p = p;
  rep.tolerance = tol;
  bool first = true;
  for (double eps : eps_grid) {
    const NormResult nr = t1_projection_norm(eps, p);
    if (first || nr.value > rep.norm.value) {
      rep.norm = nr;
      rep.best_eps = eps;
      first = false;
    }
  }
  rep.params["eps"] = rep.best_eps;
  rep.exceeds_one = rep.norm.value > 1.0 + tol;
  return rep;
}

std::vector<double> default_eps_grid() {
  std::vector<double> grid;
  for (double e = 0.1; e >= 1e-4; e *= 0.5) grid.push_back(e);
  return grid;
}

BidiskWitness::BidiskWitness(TrigPoly g_in) : g(std::move(g_in)) {
  if (g.dims() != 2)
    throw std::invalid_argument("BidiskWitness: g must live on the bidisk (dims == 2)");
  bool first = true;
  for (const auto& [idx, c] : g.coeffs()) {
    int total = 0;
    for (int e : idx) {
      if (e < 0)
        throw std::invalid_argument("BidiskWitness: g must be holomorphic (indices >= 0)");
      total += e;
    }
    if (first) {
      degree = total;
      first = false;
    } else if (total != degree) {
      throw std::invalid_argument("BidiskWitness: g must be homogeneous (constant total degree)");
    }
  }
  if (!g.empty()) {
    const double sup_lower = sup_norm_estimate(g, 8).value;
    if (sup_lower > 1.0 + 1e-12)
      throw std::invalid_argument("BidiskWitness: sup-norm of g exceeds 1");
  }
  for (const auto& [idx, c] : g.coeffs()) g_l2sq += std::norm(c);
  a = 1.0 - g_l2sq;
  if (!(a > 0.0))
    throw std::invalid_argument("BidiskWitness: 1 - ||g||_2^2 must be positive");
}

BidiskWitness BidiskWitness::binomial(int m, double scale) {
  if (m < 0) throw std::invalid_argument("BidiskWitness: degree must be >= 0");
  if (!(scale > 0.0)) throw std::invalid_argument("BidiskWitness: scale must be positive");
  TrigPoly g(2);
  for (int j = 0; j <= m; ++j)
    g.set({j, m - j}, binomial_coefficient(m, j) / scale);
  return BidiskWitness(std::move(g));
}

TrigPoly bidisk_projection(const BidiskWitness& w) {
  TrigPoly out = TrigPoly::constant(2, w.a);
  for (const auto& [idx, c] : w.g.coeffs()) out.add(idx, -c);
  return out;
}

double bidisk_norm4(const BidiskWitness& w) {
  const TrigPoly g2 = w.g * w.g;
  double l4_4 = 0.0;  // ||g||_4^4 = ||g^2||_2^2
  for (const auto& [idx, c] : g2.coeffs()) l4_4 += std::norm(c);
  const double s2 = w.g_l2sq;
  return 1.0 + s2 * s2 * s2 * s2 + l4_4 - 2.0 * s2 * s2;
}

ExponentBound bidisk_crossing_exponent(const BidiskWitness& w, double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("bidisk_crossing_exponent: tol must be positive");
  const TrigPoly proj = bidisk_projection(w);
  const double sup_lower = sup_norm_estimate(proj, 16).value;
  if (sup_lower <= 1.0 + 1e-9)
    throw std::runtime_error(
        "bidisk_crossing_exponent: no crossing, sup|a - g| <= 1 on the sampled grid");
  PolyNormEvaluator eval(proj);
  std::map<double, double> cache;
  auto norm_at = [&](double p) {
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    const double v = eval.norm(p).value;
    cache.emplace(p, v);
    return v;
  };
  const double p_star = crossing_bisection(norm_at, 2.0, 64.0, tol);

  ExponentBound b;
  b.kind = BoundKind::kUpper;
  b.value = p_star;
  b.method = BoundMethod::kWitness;
  b.chain = {p_star - tol, p_star + tol};
  std::ostringstream cert;
  cert << "bidisk witness, degree " << w.degree << ", ||g||_2^2 = " << w.g_l2sq
       << ", bisection of ||a - g||_p = 1 on [2, 64], tol " << tol;
  b.certificate = cert.str();
  return b;
}

double hilbert_witness_lower(double p) {
  if (p < 2.0) throw std::invalid_argument("hilbert_witness_lower: p must be >= 2");
  const double log_norm_p = log_hilbert_integral(p, 2);
  return (2.0 / kPi) * std::exp(log_norm_p / p);
}

std::pair<double, double> hilbert_witness_lower_with_err(double p) {
  if (p < 2.0) throw std::invalid_argument("hilbert_witness_lower: p must be >= 2");
  const double coarse = (2.0 / kPi) * std::exp(log_hilbert_integral(p, 1) / p);
  const double fine = (2.0 / kPi) * std::exp(log_hilbert_integral(p, 2) / p);
  return {fine, std::abs(fine - coarse)};
}

double tensor_lower_bound(double p, int n) {
  if (p < 2.0) throw std::invalid_argument("tensor_lower_bound: p must be >= 2");
  if (n < 1) throw std::invalid_argument("tensor_lower_bound: n must be >= 1");
  const double sandwich_leg = riesz_hilbert_sandwich(hilbert_witness_lower(p)).first;
  double t1_best = 1.0;
  for (double eps : default_eps_grid())
    t1_best = std::max(t1_best, t1_projection_norm(eps, p).value);
  const double one_dim = std::max(sandwich_leg, t1_best);
  return std::pow(one_dim, static_cast<double>(n));
}

}  // namespace riesz
