#include "anndiff/collar.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace anndiff {

void CollarSpec::validate() const {
  if (t == Complex(0.0)) throw precondition_error("collar needs t != 0");
  if (!(rho > 0.0) || !(rho < 1.0)) throw precondition_error("need 0 < rho < 1");
  if (std::abs(t) > rho * rho + 1e-15 * rho * rho)
    throw precondition_error("collar needs |t| <= rho^2");
}

double theta(double z_mag, Complex t) {
  const double at = std::abs(t);
  if (!(at > 0.0) || !(at < 1.0)) throw precondition_error("need 0 < |t| < 1");
  if (!(z_mag > 0.0) || !(z_mag < 1.0)) throw precondition_error("need 0 < |z| < 1");
  return std::numbers::pi * std::log(z_mag) / std::log(at);
}

double hyperbolic_density(Complex zeta, Complex t) {
  const double r = std::abs(zeta);
  const double at = std::abs(t);
  if (!(at > 0.0) || !(at < 1.0)) throw precondition_error("need 0 < |t| < 1");
  if (!(r > at) || !(r < 1.0))
    throw precondition_error("hyperbolic density is singular outside |t| < |ζ| < 1");
  const double th = theta(r, t);
  return th / std::sin(th) / (r * std::abs(std::log(r)));
}

double theta_csc_theta_sq(double th) {
  if (th == 0.0) return 1.0;
  const double s = th / std::sin(th);
  return s * s;
}

std::vector<double> factor_series_coefficients(int terms) {
  if (terms < 1) throw precondition_error("need at least one term");
  // (sin(Theta)/Theta)^2 = Σ b_j·Theta^{2j} with b_0 = 1,
  // b_j = -4·b_{j-1}/((2j+1)(2j+2)); c is its reciprocal series.
  std::vector<double> b(static_cast<size_t>(terms), 0.0);
  b[0] = 1.0;
  for (int j = 1; j < terms; ++j)
    b[static_cast<size_t>(j)] =
        b[static_cast<size_t>(j - 1)] * (-4.0) / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
  std::vector<double> c(static_cast<size_t>(terms), 0.0);
  c[0] = 1.0;
  for (int n = 1; n < terms; ++n) {
    double acc = 0.0;
    for (int j = 1; j <= n; ++j)
      acc += b[static_cast<size_t>(j)] * c[static_cast<size_t>(n - j)];
    c[static_cast<size_t>(n)] = -acc;
  }
  return c;
}

double factor_series(double th, int terms) {
  const auto c = factor_series_coefficients(terms);
  const double th2 = th * th;
  double acc = 0.0;
  for (size_t j = c.size(); j-- > 0;) acc = acc * th2 + c[j];
  return acc;
}

double flat_to_hyperbolic_ratio(double zeta_mag, Complex t) {
  const double th = theta(zeta_mag, t);
  if (!(th > 0.0) || !(th < std::numbers::pi))
    throw precondition_error("point outside the fiber annulus");
  return std::abs(std::log(zeta_mag)) * std::sin(th) / th;
}

RatioBounds collar_ratio_bounds(Complex t, double rho, int grid_circles) {
  CollarSpec{t, rho}.validate();
  if (grid_circles < 1) throw precondition_error("need at least one circle");
  const double lo_r = std::abs(t) / rho;
  RatioBounds b;
  b.lo = std::numeric_limits<double>::infinity();
  for (double r : detail::geometric_radii(lo_r, rho, grid_circles)) {
    const double v = flat_to_hyperbolic_ratio(r, t);
    b.lo = std::min(b.lo, v);
    b.hi = std::max(b.hi, v);
  }
  return b;
}

CollarBandReport collar_band_equivalence(const AnnulusKDifferential& d,
                                         const CollarSpec& collar, int circles,
                                         int points) {
  d.validate();
  collar.validate();
  const double lo = std::abs(collar.t) / collar.rho;
  if (lo < d.annulus.r_inner || collar.rho > d.annulus.r_outer)
    throw precondition_error("collar not contained in the differential's annulus");
  CollarBandReport rep;
  rep.k = d.k;
  rep.ratio = collar_ratio_bounds(collar.t, collar.rho, circles);
  for (double r : detail::geometric_radii(lo, collar.rho, circles)) {
    const double ratio_k =
        detail::pow_int(flat_to_hyperbolic_ratio(r, collar.t), d.k);
    for (int j = 0; j < points; ++j) {
      const double mag =
          std::abs(d.f.eval(std::polar(r, 2.0 * std::numbers::pi * j / points)));
      rep.flat_sup = std::max(rep.flat_sup, mag);
      rep.collar_sup = std::max(rep.collar_sup, mag * ratio_k);
    }
  }
  return rep;
}

}  // namespace anndiff
