#include "riesz/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "riesz/kernels.hpp"
#include "riesz/optimizer.hpp"

namespace riesz {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kMaxOrder = 1024;  // direct transforms only

std::string freq_key(const FreqSet& E) {
  std::ostringstream os;
  for (const auto& idx : E.indices) {
    for (int e : idx) os << e << ',';
    os << ';';
  }
  return os.str();
}
}  // namespace

GroupSpec::GroupSpec(int m_in, int n_in) : m(m_in), n(n_in) {
  if (m < 2) throw std::invalid_argument("GroupSpec: cyclic order m must be >= 2");
  if (n < 1) throw std::invalid_argument("GroupSpec: n must be >= 1");
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    ord *= m;
    if (ord > kMaxOrder)
      throw std::invalid_argument("GroupSpec: group order exceeds 1024");
  }
}

int GroupSpec::order() const {
  int ord = 1;
  for (int i = 0; i < n; ++i) ord *= m;
  return ord;
}

FreqSet FreqSet::lower_corner(const GroupSpec& spec) {
  FreqSet E;
  std::vector<int> idx(static_cast<std::size_t>(spec.n), 0);
  // all vectors with entries in {0, 1}
  const int count = 1 << spec.n;
  for (int mask = 0; mask < count; ++mask) {
    for (int j = 0; j < spec.n; ++j)
      idx[static_cast<std::size_t>(j)] = (mask >> j) & 1;
    E.indices.insert(idx);
  }
  return E;
}

FreqSet FreqSet::full(const GroupSpec& spec) {
  FreqSet E;
  GroupFourier f(spec);
  for (int i = 0; i < spec.order(); ++i) E.indices.insert(f.unflatten(i));
  return E;
}

void FreqSet::validate(const GroupSpec& spec) const {
  if (indices.empty()) throw std::invalid_argument("FreqSet: must be nonempty");
  for (const auto& idx : indices) {
    if (static_cast<int>(idx.size()) != spec.n)
      throw std::invalid_argument("FreqSet: index dimension mismatch");
    for (int e : idx)
      if (e < 0 || e >= spec.m)
        throw std::invalid_argument("FreqSet: entries must be reduced mod m");
  }
}

FiniteFunction::FiniteFunction(GroupSpec s, std::vector<Complex> v)
    : spec(s), values(std::move(v)) {
  if (static_cast<int>(values.size()) != spec.order())
    throw std::invalid_argument("FiniteFunction: value count != group order");
}

GroupFourier::GroupFourier(GroupSpec spec) : spec_(spec) {
  const int g = spec_.order();
  chars_.resize(static_cast<std::size_t>(g) * static_cast<std::size_t>(g));
  for (int gamma = 0; gamma < g; ++gamma) {
    const auto gi = unflatten(gamma);
    for (int omega = 0; omega < g; ++omega) {
      const auto oi = unflatten(omega);
      long long dot = 0;
      for (int j = 0; j < spec_.n; ++j)
        dot += static_cast<long long>(gi[static_cast<std::size_t>(j)]) *
               oi[static_cast<std::size_t>(j)];
      const double ang =
          2.0 * kPi * static_cast<double>(dot % spec_.m) / static_cast<double>(spec_.m);
      chars_[static_cast<std::size_t>(gamma) * static_cast<std::size_t>(g) +
             static_cast<std::size_t>(omega)] = std::polar(1.0, ang);
    }
  }
}

std::vector<int> GroupFourier::unflatten(int idx) const {
  std::vector<int> out(static_cast<std::size_t>(spec_.n));
  for (int j = spec_.n - 1; j >= 0; --j) {
    out[static_cast<std::size_t>(j)] = idx % spec_.m;
    idx /= spec_.m;
  }
  return out;
}

int GroupFourier::flatten(const std::vector<int>& element) const {
  if (static_cast<int>(element.size()) != spec_.n)
    throw std::invalid_argument("GroupFourier: element dimension mismatch");
  int idx = 0;
  for (int j = 0; j < spec_.n; ++j) {
    int e = element[static_cast<std::size_t>(j)] % spec_.m;
    if (e < 0) e += spec_.m;
    idx = idx * spec_.m + e;
  }
  return idx;
}

std::vector<Complex> GroupFourier::transform(const std::vector<Complex>& values) const {
  const int g = spec_.order();
  if (static_cast<int>(values.size()) != g)
    throw std::invalid_argument("GroupFourier: value count != group order");
  std::vector<Complex> coeffs(static_cast<std::size_t>(g));
  for (int gamma = 0; gamma < g; ++gamma) {
    Complex acc{0.0, 0.0};
    const Complex* row = &chars_[static_cast<std::size_t>(gamma) * static_cast<std::size_t>(g)];
    for (int omega = 0; omega < g; ++omega)
      acc += values[static_cast<std::size_t>(omega)] * std::conj(row[omega]);
    coeffs[static_cast<std::size_t>(gamma)] = acc / static_cast<double>(g);
  }
  return coeffs;
}

std::vector<Complex> GroupFourier::synthesize(const std::vector<Complex>& coeffs) const {
  const int g = spec_.order();
  if (static_cast<int>(coeffs.size()) != g)
    throw std::invalid_argument("GroupFourier: coefficient count != group order");
  std::vector<Complex> values(static_cast<std::size_t>(g));
  for (int omega = 0; omega < g; ++omega) {
    Complex acc{0.0, 0.0};
    for (int gamma = 0; gamma < g; ++gamma)
      acc += coeffs[static_cast<std::size_t>(gamma)] *
             chars_[static_cast<std::size_t>(gamma) * static_cast<std::size_t>(g) +
                    static_cast<std::size_t>(omega)];
    values[static_cast<std::size_t>(omega)] = acc;
  }
  return values;
}

const std::vector<Complex>& GroupFourier::kernel(const FreqSet& E) const {
  E.validate(spec_);
  const std::string key = freq_key(E);
  auto it = kernel_cache_.find(key);
  if (it != kernel_cache_.end()) return it->second;

  const int g = spec_.order();
  std::vector<Complex> K(static_cast<std::size_t>(g) * static_cast<std::size_t>(g),
                         Complex{0.0, 0.0});
  for (const auto& idx : E.indices) {
    const int gamma = flatten(idx);
    const Complex* row = &chars_[static_cast<std::size_t>(gamma) * static_cast<std::size_t>(g)];
    for (int o = 0; o < g; ++o)
      for (int o2 = 0; o2 < g; ++o2)
        K[static_cast<std::size_t>(o) * static_cast<std::size_t>(g) +
          static_cast<std::size_t>(o2)] += row[o] * std::conj(row[o2]);
  }
  for (auto& k : K) k /= static_cast<double>(g);
  return kernel_cache_.emplace(key, std::move(K)).first->second;
}

std::vector<Complex> GroupFourier::project_kernel(const std::vector<Complex>& values,
                                                  const FreqSet& E) const {
  const int g = spec_.order();
  const auto& K = kernel(E);
  std::vector<Complex> out(static_cast<std::size_t>(g));
  for (int o = 0; o < g; ++o) {
    Complex acc{0.0, 0.0};
    const Complex* row = &K[static_cast<std::size_t>(o) * static_cast<std::size_t>(g)];
    for (int o2 = 0; o2 < g; ++o2) acc += row[o2] * values[static_cast<std::size_t>(o2)];
    out[static_cast<std::size_t>(o)] = acc;
  }
  return out;
}

std::vector<Complex> transform(const FiniteFunction& f) {
  return GroupFourier(f.spec).transform(f.values);
}

FiniteFunction inverse_transform(const GroupSpec& spec, const std::vector<Complex>& coeffs) {
  return FiniteFunction(spec, GroupFourier(spec).synthesize(coeffs));
}

FiniteFunction project(const FiniteFunction& f, const FreqSet& E) {
  E.validate(f.spec);
  GroupFourier fourier(f.spec);
  auto coeffs = fourier.transform(f.values);
  std::vector<Complex> kept(coeffs.size(), Complex{0.0, 0.0});
  for (const auto& idx : E.indices) {
    const int gamma = fourier.flatten(idx);
    kept[static_cast<std::size_t>(gamma)] = coeffs[static_cast<std::size_t>(gamma)];
  }
  return FiniteFunction(f.spec, fourier.synthesize(kept));
}

double pnorm(const FiniteFunction& f, double p) {
  if (p < 1.0) throw std::invalid_argument("pnorm: p must be >= 1");
  double s = 0.0;
  for (const auto& v : f.values) s += std::pow(std::abs(v), p);
  return std::pow(s / static_cast<double>(f.values.size()), 1.0 / p);
}

std::array<double, 3> TriangleConfig::medians() const {
  return {std::abs(a - 0.5 * (b + c)), std::abs(b - 0.5 * (a + c)),
          std::abs(c - 0.5 * (a + b))};
}

void TriangleConfig::validate() const {
  for (const Complex& v : {a, b, c})
    if (std::abs(v) > 1.0 + 1e-12)
      throw std::invalid_argument("TriangleConfig: vertex outside the closed unit disc");
}

double median_objective(const TriangleConfig& t, double p) {
  t.validate();
  const auto m = t.medians();
  return std::pow(m[0], p) + std::pow(m[1], p) + std::pow(m[2], p);
}

double z3_critical_exponent(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("z3_critical_exponent: tol must be positive");
  auto f = [](double p) { return std::pow(2.0, p) + 2.0 - 3.0 * std::pow(1.5, p); };
  double lo = 2.0, hi = 4.0;
  // signs: f(2) = 6 - 27/4 < 0, f(4) = 18 - 243/16 > 0
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

const char* to_string(TriangleRegime r) {
  switch (r) {
    case TriangleRegime::kEquilateral: return "equilateral";
    case TriangleRegime::kDegenerate: return "degenerate";
    case TriangleRegime::kAmbiguous: return "ambiguous";
  }
  return "?";
}

double triangle_distance(const TriangleConfig& found, const TriangleConfig& target) {
  const std::array<Complex, 3> t{target.a, target.b, target.c};
  std::array<Complex, 3> v{found.a, found.b, found.c};
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  double best = std::numeric_limits<double>::infinity();
  for (int refl = 0; refl < 2; ++refl) {
    for (const auto& perm : perms) {
      std::array<Complex, 3> w;
      for (int i = 0; i < 3; ++i) {
        Complex x = v[static_cast<std::size_t>(perm[i])];
        w[static_cast<std::size_t>(i)] = refl ? std::conj(x) : x;
      }
      // L2-optimal rotation, then max-vertex distance
      Complex s{0.0, 0.0};
      for (int i = 0; i < 3; ++i)
        s += w[static_cast<std::size_t>(i)] * std::conj(t[static_cast<std::size_t>(i)]);
      const Complex rot = std::abs(s) > 0.0 ? std::conj(s) / std::abs(s) : Complex{1.0, 0.0};
      double d = 0.0;
      for (int i = 0; i < 3; ++i)
        d = std::max(d, std::abs(rot * w[static_cast<std::size_t>(i)] -
                                 t[static_cast<std::size_t>(i)]));
      best = std::min(best, d);
    }
  }
  return best;
}

TriangleRegime classify_triangle(const TriangleConfig& t, double tol) {
  const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
  const TriangleConfig equilateral{Complex{1.0, 0.0}, w, w * w};
  const TriangleConfig degenerate{Complex{1.0, 0.0}, Complex{-1.0, 0.0},
                                  Complex{-1.0, 0.0}};
  if (triangle_distance(t, equilateral) < tol) return TriangleRegime::kEquilateral;
  if (triangle_distance(t, degenerate) < tol) return TriangleRegime::kDegenerate;
  return TriangleRegime::kAmbiguous;
}

TriangleConfig triangle_from_z3_values(const std::vector<Complex>& values) {
  if (values.size() != 3)
    throw std::invalid_argument("triangle_from_z3_values: need exactly 3 values");
  const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
  return TriangleConfig{values[0], w * values[1], std::conj(w) * values[2]};
}

EquivalenceReport median_equivalence_check(double p, int trials, std::uint64_t seed) {
  if (p < 2.0) throw std::invalid_argument("median_equivalence_check: p must be >= 2");
  if (trials < 1) throw std::invalid_argument("median_equivalence_check: trials must be >= 1");

  EquivalenceReport rep;
  rep.p = p;

  const GroupSpec z3(3, 1);
  const FreqSet E = FreqSet::lower_corner(z3);

  OptimizerConfig cfg;
  cfg.restarts = trials;
  cfg.seed = seed;
  const OptResult norm_side = maximize_projection_norm(z3, E, p, cfg);
  rep.max_norm = norm_side.best_value;
  rep.best_function = norm_side.best_point;

  // Independent search over triangles (the medians formulation).
  auto objective = [p](std::span<const Complex> x) {
    const TriangleConfig t{x[0], x[1], x[2]};
    const auto m = t.medians();
    return std::pow(m[0], p) + std::pow(m[1], p) + std::pow(m[2], p);
  };
  auto gradient = [p](std::span<const Complex> x, std::span<Complex> out) {
    const Complex u0 = x[0] - 0.5 * (x[1] + x[2]);
    const Complex u1 = x[1] - 0.5 * (x[0] + x[2]);
    const Complex u2 = x[2] - 0.5 * (x[0] + x[1]);
    const double m0 = std::abs(u0), m1 = std::abs(u1), m2 = std::abs(u2);
    auto w = [p](double m) { return m > 0.0 ? std::pow(m, p - 2.0) : 0.0; };
    const Complex g0 = w(m0) * u0, g1 = w(m1) * u1, g2 = w(m2) * u2;
    out[0] = p * (g0 - 0.5 * (g1 + g2));
    out[1] = p * (g1 - 0.5 * (g0 + g2));
    out[2] = p * (g2 - 0.5 * (g0 + g1));
  };
  OptimizerConfig tri_cfg = cfg;
  tri_cfg.seed = seed ^ 0xA5A5A5A5ULL;
  const PolydiscResult tri = maximize_on_polydisc(3, objective, gradient, tri_cfg);
  rep.max_objective = tri.best_value;
  rep.best_triangle = TriangleConfig{tri.best_point[0], tri.best_point[1], tri.best_point[2]};

  rep.fitted_constant = std::pow(rep.max_norm, p) / rep.max_objective;
  rep.function_regime = classify_triangle(triangle_from_z3_values(rep.best_function.values));
  rep.triangle_regime = classify_triangle(rep.best_triangle);
  rep.regimes_agree = rep.function_regime == rep.triangle_regime;
  rep.converged = norm_side.converged && tri.converged;
  return rep;
}

}  // namespace riesz
