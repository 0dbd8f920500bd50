#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace riesz {

using Complex = std::complex<double>;

/// Frequency multi-index in Z^n, one signed entry per torus dimension.
using MultiIndex = std::vector<int>;

/// Trigonometric polynomial on T^n stored as a sparse map
/// multi-index -> complex coefficient. Exact zeros are never stored, so two
/// polynomials are equal iff their coefficient maps are equal.
class TrigPoly {
 public:
  explicit TrigPoly(int dims) : dims_(dims) {
    if (dims < 1) throw std::invalid_argument("TrigPoly: dims must be >= 1");
  }

  static TrigPoly constant(int dims, Complex c) {
    TrigPoly p(dims);
    p.set(MultiIndex(static_cast<std::size_t>(dims), 0), c);
    return p;
  }

  static TrigPoly monomial(const MultiIndex& idx, Complex c) {
    TrigPoly p(static_cast<int>(idx.size()));
    p.set(idx, c);
    return p;
  }

  int dims() const { return dims_; }
  const std::map<MultiIndex, Complex>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }

  Complex coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
  }

  void set(const MultiIndex& idx, Complex c) {
    check_index(idx);
    if (c == Complex{0.0, 0.0}) {
      coeffs_.erase(idx);
    } else {
      coeffs_[idx] = c;
    }
  }

  void add(const MultiIndex& idx, Complex c) { set(idx, coeff(idx) + c); }

  /// Smallest and largest frequency present in dimension `dim`; (0,0) for the
  /// zero polynomial.
  std::pair<int, int> index_range(int dim) const {
    if (coeffs_.empty()) return {0, 0};
    int lo = coeffs_.begin()->first[static_cast<std::size_t>(dim)];
    int hi = lo;
    for (const auto& [idx, c] : coeffs_) {
      lo = std::min(lo, idx[static_cast<std::size_t>(dim)]);
      hi = std::max(hi, idx[static_cast<std::size_t>(dim)]);
    }
    return {lo, hi};
  }

  /// Coefficient bandwidth (max index - min index) in dimension `dim`.
  int bandwidth(int dim) const {
    auto [lo, hi] = index_range(dim);
    return hi - lo;
  }

  /// max |index| in dimension `dim`; the per-variable Bernstein degree.
  int degree_bound(int dim) const {
    auto [lo, hi] = index_range(dim);
    return std::max(std::abs(lo), std::abs(hi));
  }

  TrigPoly operator+(const TrigPoly& rhs) const {
    require_same_dims(rhs);
    TrigPoly out = *this;
    for (const auto& [idx, c] : rhs.coeffs_) out.add(idx, c);
    return out;
  }

  TrigPoly operator-(const TrigPoly& rhs) const {
    require_same_dims(rhs);
    TrigPoly out = *this;
    for (const auto& [idx, c] : rhs.coeffs_) out.add(idx, -c);
    return out;
  }

  TrigPoly operator*(Complex s) const {
    TrigPoly out(dims_);
    if (s == Complex{0.0, 0.0}) return out;
    for (const auto& [idx, c] : coeffs_) out.set(idx, c * s);
    return out;
  }

  /// Coefficient convolution (pointwise product of the functions).
  TrigPoly operator*(const TrigPoly& rhs) const {
    require_same_dims(rhs);
    TrigPoly out(dims_);
    MultiIndex sum(static_cast<std::size_t>(dims_));
    for (const auto& [ia, ca] : coeffs_) {
      for (const auto& [ib, cb] : rhs.coeffs_) {
        for (std::size_t d = 0; d < sum.size(); ++d) sum[d] = ia[d] + ib[d];
        out.add(sum, ca * cb);
      }
    }
    return out;
  }

  TrigPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("TrigPoly::pow: k must be >= 0");
    TrigPoly out = constant(dims_, 1.0);
    for (int i = 0; i < k; ++i) out = out * (*this);
    return out;
  }

  bool operator==(const TrigPoly& rhs) const {
    return dims_ == rhs.dims_ && coeffs_ == rhs.coeffs_;
  }

 private:
  void check_index(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != dims_)
      throw std::invalid_argument("TrigPoly: multi-index has wrong dimension");
  }
  void require_same_dims(const TrigPoly& rhs) const {
    if (dims_ != rhs.dims_)
      throw std::invalid_argument("TrigPoly: dimension mismatch");
  }

  int dims_;
  std::map<MultiIndex, Complex> coeffs_;
};

/// Complex samples on a uniform tensor grid on T^n. Sample (k_1,...,k_n)
/// corresponds to zeta_j = exp(2 pi i k_j / N_j); storage is row-major with
/// the first dimension slowest.
struct GridFunction {
  int dims = 0;
  std::vector<int> sizes;
  std::vector<Complex> values;

  std::size_t total() const {
    std::size_t t = 1;
    for (int n : sizes) t *= static_cast<std::size_t>(n);
    return t;
  }
  void validate() const {
    if (dims < 1 || static_cast<int>(sizes.size()) != dims)
      throw std::invalid_argument("GridFunction: bad dims/sizes");
    for (int n : sizes)
      if (n < 1) throw std::invalid_argument("GridFunction: sizes must be >= 1");
    if (values.size() != total())
      throw std::invalid_argument("GridFunction: value count != product of sizes");
  }
};

enum class NormMethod {
  kParsevalExact,
  kEvenPExact,
  kGridQuadrature,
  kAdaptiveQuadrature,
};

inline const char* to_string(NormMethod m) {
  switch (m) {
    case NormMethod::kParsevalExact: return "parseval-exact";
    case NormMethod::kEvenPExact: return "even-p-exact";
    case NormMethod::kGridQuadrature: return "grid-quadrature";
    case NormMethod::kAdaptiveQuadrature: return "adaptive-quadrature";
  }
  return "?";
}

/// A norm value with the method that produced it. `error_estimate` is empty
/// exactly for the two exact methods.
struct NormResult {
  double value = 0.0;
  NormMethod method = NormMethod::kGridQuadrature;
  std::optional<double> error_estimate;  // nullopt <=> exact

  bool exact() const { return !error_estimate.has_value(); }

  static NormResult exact_value(double v, NormMethod m) {
    return NormResult{v, m, std::nullopt};
  }
  static NormResult estimate(double v, NormMethod m, double err) {
    return NormResult{v, m, err};
  }
};

}  // namespace riesz
