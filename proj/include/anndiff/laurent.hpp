#pragma once

#include <functional>
#include <map>
#include <vector>

#include "anndiff/types.hpp"

namespace anndiff {

/// Laurent polynomial over integer exponents with finitely many terms.
/// Truncations are always explicit: an instance is its own expansion, there is
/// no hidden tail. Storage is dense over [n_min, n_max] with nonzero edges.
class LaurentSeries {
public:
  LaurentSeries() = default;
  /// coeffs[i] multiplies the exponent n_min + i.
  LaurentSeries(int n_min, std::vector<Complex> coeffs);
  static LaurentSeries monomial(int n, Complex c);
  static LaurentSeries from_map(const std::map<int, Complex>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int n_min() const;
  int n_max() const;
  Complex coeff(int n) const;
  const std::vector<Complex>& dense() const { return coeffs_; }
  double max_abs_coeff() const;

  /// Sum of coeff(n)·p^n in ascending exponent order.
  /// p = 0 requires nonnegative support.
  Complex eval(Complex p) const;

  std::map<int, Complex> as_map() const;
  LaurentSeries operator+(const LaurentSeries& other) const;
  bool operator==(const LaurentSeries& other) const = default;

private:
  int n_min_ = 0;
  std::vector<Complex> coeffs_;
  void trim();
};

/// One-variable power series truncation, dense from exponent 0 up.
class PowerSeries {
public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Complex> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int i) const;
  Complex at_zero() const { return coeff(0); }
  const std::vector<Complex>& dense() const { return coeffs_; }
  Complex eval(Complex x) const;
  bool operator==(const PowerSeries& other) const = default;

private:
  std::vector<Complex> coeffs_;
};

/// Values on the circle |p| = radius at the N angles 2πj/N.
struct CircleSamples {
  double radius = 1.0;
  std::vector<Complex> values;
  int count() const { return static_cast<int>(values.size()); }
};

CircleSamples sample_circle(const std::function<Complex(Complex)>& f, double radius, int count);
CircleSamples sample_circle(const LaurentSeries& s, double radius, int count);

/// Trapezoid-rule Cauchy coefficients c_n = (1/N)·Σ_j v_j·(r·e^{2πij/N})^{-n},
/// exact for Laurent polynomials the grid resolves. Requires
/// N >= n_max - n_min + 1 and N > 2·max(|n_min|, |n_max|); recovering exponent
/// n amplifies sample error by r^{-n}, so large |n| wants r near 1.
LaurentSeries coefficients_from_samples(const CircleSamples& cs, int n_min, int n_max);

/// Direct sum split by exponent sign. plus carries exponents >= 1, minus <= -1.
struct Decomposition {
  LaurentSeries plus;
  Complex f0 = 0.0;
  LaurentSeries minus;
};

Decomposition decompose(const LaurentSeries& s);

/// The exponent-zero coefficient, i.e. the Cauchy integral of f(s)/s over any
/// circle in the annulus of definition.
Complex residue_f0(const LaurentSeries& s);

namespace detail {
/// base^e by repeated multiplication, e may be negative.
double pow_int(double base, int e);
Complex pow_int(Complex base, int e);
}  // namespace detail

}  // namespace anndiff
