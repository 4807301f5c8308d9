#pragma once

#include <functional>
#include <vector>

#include "anndiff/differentials.hpp"

namespace anndiff {

/// f(z,w)·z^{-pole_order} with f = Σ a_{mn}·z^m·w^n over the bidegree box
/// [0, m_deg] × [0, n_deg]. On the fiber zw = t this restricts to
/// Σ a_{mn}·ζ^{m-n}·t^n times ζ^{-pole_order}.
class TwoVarSeries {
public:
  TwoVarSeries() : TwoVarSeries(0, 0) {}
  TwoVarSeries(int m_deg, int n_deg, int pole_order = 0);

  int m_deg() const { return m_deg_; }
  int n_deg() const { return n_deg_; }
  int pole_order() const { return pole_order_; }
  Complex coeff(int m, int n) const;
  void set_coeff(int m, int n, Complex c);
  TwoVarSeries with_pole_order(int pole_order) const;
  double max_abs_coeff() const;

  Complex eval_regular(Complex z, Complex w) const;
  Complex eval(Complex z, Complex w) const;  // includes z^{-pole_order}
  Complex eval_fiber(Complex zeta, Complex t) const;
  Complex eval_regular_fiber(Complex zeta, Complex t) const;

  bool operator==(const TwoVarSeries& other) const = default;

private:
  int m_deg_, n_deg_, pole_order_;
  std::vector<Complex> a_;  // row-major, stride n_deg_ + 1
};

/// Fiber samples F_{t_l}(ζ_j) over a ζ-circle × t-circle grid,
/// ζ_j = r_zeta·e^{2πij/zeta_count} and |t_l| = rho_t.
struct FamilySamples {
  int k = 1;
  double r_zeta = 0.5;
  double rho_t = 0.1;
  double c = 1.0;
  double c_prime = 1.0;
  std::vector<Complex> t_values;
  std::vector<std::vector<Complex>> values;  // values[l][j]

  int t_count() const { return static_cast<int>(t_values.size()); }
  int zeta_count() const {
    return values.empty() ? 0 : static_cast<int>(values.front().size());
  }
  /// t grid is rho_t·e^{2πil/t_count} to roundoff.
  bool uniform_t() const;
  void validate() const;
};

using FiberFunction = std::function<Complex(Complex z, Complex w)>;

FamilySamples sample_family(const FiberFunction& f, int k, double r_zeta, double rho_t,
                            int t_count, int zeta_count, double c = 1.0,
                            double c_prime = 1.0);
FamilySamples sample_family(const TwoVarSeries& truth, int k, double r_zeta,
                            double rho_t, int t_count, int zeta_count, double c = 1.0,
                            double c_prime = 1.0);

/// Recover the coefficients a_{mn} of a regular section from fiber samples.
/// Uniform t grids invert the two-torus DFT directly; otherwise a dense
/// least-squares solve runs per ζ-frequency diagonal. Requires
/// zeta_count >= 2(m_deg + n_deg) + 1 and t_count >= n_deg + 1.
TwoVarSeries extend(const FamilySamples& fs, int m_deg, int n_deg);

/// Same, for sections with an inner-boundary pole: samples are multiplied by
/// ζ^{pole_order} first and the result carries that pole_order.
TwoVarSeries extend_with_pole(const FamilySamples& fs, int pole_order, int m_deg,
                              int n_deg);

/// Max deviation |series on fiber - sample| over the sample grid.
double reconstruction_error(const FamilySamples& fs, const TwoVarSeries& s);

/// Coefficient function of the branch restriction of f·alpha^k at t = 0:
/// z branch carries Σ a_{m0}·z^m, w branch carries (-1)^k·Σ a_{0n}·w^n
/// (alpha restricts to dz/z and to -dw/w). The z branch requires
/// pole_order = 0.
PowerSeries nodal_restriction(const TwoVarSeries& s, Branch branch, int k);

NodalKDifferential nodal_differential(const TwoVarSeries& s, int k);

/// Locally uniform convergence F_t -> F_0 on annular compacta, both charts.
struct NormalFamiliesReport {
  struct Entry {
    Complex t;
    double sup_z = 0.0;  // sup over the compactum of |F_t - F_0| in the z chart
    double sup_w = 0.0;  // same in the w chart
  };
  std::vector<std::vector<Entry>> compacta;  // [compactum][t index]
  std::vector<double> order_z, order_w;      // log-log slope fits per compactum
  bool decreasing = true;  // sups shrink along the t sequence (factor-2 slack)
  bool exact = false;      // every sup at roundoff level
};

NormalFamiliesReport verify_normal_families(const TwoVarSeries& truth,
                                            const std::vector<Complex>& t_sequence,
                                            const std::vector<AnnulusSpec>& compacta,
                                            int circles = 9, int points = 128);

}  // namespace anndiff
