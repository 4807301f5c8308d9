#pragma once

#include <vector>

#include "anndiff/differentials.hpp"

namespace anndiff {

/// The collar |t|/rho <= |ζ| <= rho of the fiber over t (unit discs, c = c' = 1).
struct CollarSpec {
  Complex t;
  double rho = 0.5;
  void validate() const;  // 0 < |t| <= rho^2 < 1
};

/// Theta(z) = π·log|z| / log|t|, the collar angle: 0 on |z| = 1, π at |z| = |t|,
/// and Theta_z + Theta_w = π on the fiber.
double theta(double z_mag, Complex t);

/// Density λ of the fiber hyperbolic metric λ|dζ|:
/// λ = Theta·csc(Theta) / (|ζ|·|log|ζ||). Singular at the annulus edges.
double hyperbolic_density(Complex zeta, Complex t);

/// (Theta·csc Theta)^2 evaluated directly.
double theta_csc_theta_sq(double th);

/// Coefficients c_j of (Theta·csc Theta)^2 = Σ c_j·Theta^{2j}:
/// 1, 1/3, 1/15, 2/189, ... (all positive).
std::vector<double> factor_series_coefficients(int terms);

/// Partial sum Σ_{j<terms} c_j·Theta^{2j}; monotone in terms on (0, π/2).
double factor_series(double th, int terms);

/// |dζ/ζ| (flat) against the hyperbolic metric: |log|ζ|| / (Theta·csc Theta)
/// = (|log|t||/π)·sin(Theta). Maximal at |ζ| = sqrt(|t|), so the comparison
/// constant grows like |log|t||/π as t -> 0; only the reciprocal direction is
/// t-uniform.
double flat_to_hyperbolic_ratio(double zeta_mag, Complex t);

struct RatioBounds {
  double lo = 0.0;
  double hi = 0.0;
};

/// Grid min/max of the flat-to-hyperbolic ratio over the collar. Odd grid
/// counts include the extremal circle |ζ| = sqrt(|t|).
RatioBounds collar_ratio_bounds(Complex t, double rho, int grid_circles = 129);

struct CollarBandReport {
  double collar_sup = 0.0;  // sup |f|·ratio^k, the hyperbolic-sup comparison
  double flat_sup = 0.0;    // sup |f|
  RatioBounds ratio;
  int k = 1;
};

/// Band boundedness of |f| against collar sup of the differential measured in
/// the hyperbolic metric; the two are equivalent with constants ratio.lo^k,
/// ratio.hi^k.
CollarBandReport collar_band_equivalence(const AnnulusKDifferential& d,
                                         const CollarSpec& collar, int circles = 65,
                                         int points = 256);

}  // namespace anndiff
