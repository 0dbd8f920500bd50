#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "riesz/trig_poly.hpp"

namespace riesz {

/// The finite abelian group Z_m^n with normalized counting measure.
struct GroupSpec {
  int m = 3;
  int n = 1;

  GroupSpec() = default;
  GroupSpec(int m_in, int n_in);

  int order() const;
  bool operator==(const GroupSpec&) const = default;
};

/// A nonempty set of dual-group elements (multi-indices mod m).
struct FreqSet {
  std::set<std::vector<int>> indices;

  static FreqSet lower_corner(const GroupSpec& spec);  // {0,1}^n
  static FreqSet full(const GroupSpec& spec);
  void validate(const GroupSpec& spec) const;
};

/// Complex values on Z_m^n, indexed lexicographically.
struct FiniteFunction {
  GroupSpec spec;
  std::vector<Complex> values;

  FiniteFunction() = default;
  FiniteFunction(GroupSpec s, std::vector<Complex> v);
};

/// Character tables and projection kernels for one group; transforms are
/// direct O(|G|^2) sums (all in-scope groups have |G| <= 1024).
class GroupFourier {
 public:
  explicit GroupFourier(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }

  /// Analysis with 1/|G| so that f == 1 maps to the indicator of 0.
  std::vector<Complex> transform(const std::vector<Complex>& values) const;
  std::vector<Complex> synthesize(const std::vector<Complex>& coeffs) const;

  /// P_E applied through the cached |G| x |G| kernel matrix.
  std::vector<Complex> project_kernel(const std::vector<Complex>& values,
                                      const FreqSet& E) const;
  const std::vector<Complex>& kernel(const FreqSet& E) const;

  std::vector<int> unflatten(int idx) const;
  int flatten(const std::vector<int>& element) const;

 private:
  GroupSpec spec_;
  std::vector<Complex> chars_;  // chars_[gamma * |G| + omega]
  mutable std::map<std::string, std::vector<Complex>> kernel_cache_;
};

std::vector<Complex> transform(const FiniteFunction& f);
FiniteFunction inverse_transform(const GroupSpec& spec, const std::vector<Complex>& coeffs);

/// Zero out coefficients off E and transform back.
FiniteFunction project(const FiniteFunction& f, const FreqSet& E);

/// ((1/|G|) sum |f|^p)^{1/p}.
double pnorm(const FiniteFunction& f, double p);

/// Triangle with vertices in the closed unit disc; medians recomputed on
/// access.
struct TriangleConfig {
  Complex a, b, c;

  std::array<double, 3> medians() const;
  void validate() const;  // |vertex| <= 1 + 1e-12
};

/// m0^p + m1^p + m2^p.
double median_objective(const TriangleConfig& t, double p);

/// Unique root in (2, 4) of 2^p + 2 = 3 (3/2)^p, by bisection.
double z3_critical_exponent(double tol);

enum class TriangleRegime { kEquilateral, kDegenerate, kAmbiguous };
const char* to_string(TriangleRegime r);

/// Distance (max vertex deviation) to the closest rotation/reflection/
/// relabeling of `target`.
double triangle_distance(const TriangleConfig& found, const TriangleConfig& target);
TriangleRegime classify_triangle(const TriangleConfig& t, double tol = 1e-3);

/// Triangle obtained from a Z3 value vector through the medians
/// correspondence f = (T0, conj(w) T1, w T2).
TriangleConfig triangle_from_z3_values(const std::vector<Complex>& values);

struct EquivalenceReport {
  double p = 0.0;
  double max_norm = 0.0;             // route (i): optimizer over the polydisc
  double max_objective = 0.0;        // route (ii): optimizer over triangles
  double fitted_constant = 0.0;      // max_norm^p / max_objective
  FiniteFunction best_function;
  TriangleConfig best_triangle{};
  TriangleRegime function_regime = TriangleRegime::kAmbiguous;
  TriangleRegime triangle_regime = TriangleRegime::kAmbiguous;
  bool regimes_agree = false;
  bool converged = false;
};

/// Cross-validates the polydisc and medians formulations of the Z3 problem
/// with independent multi-start searches.
EquivalenceReport median_equivalence_check(double p, int trials, std::uint64_t seed);

}  // namespace riesz
