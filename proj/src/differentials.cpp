#include "anndiff/differentials.hpp"

#include <cmath>
#include <numbers>

namespace anndiff {

void AnnulusKDifferential::validate() const {
  if (k < 1) throw precondition_error("differential order k must be >= 1");
  annulus.validate();
}

void BandSpec::validate() const {
  if (!(0.0 < rho1) || !(rho1 < rho2) || !(rho2 < 1.0))
    throw precondition_error("band fractions must satisfy 0 < rho1 < rho2 < 1");
  if (!(c > 0.0) || !(c_prime > 0.0))
    throw precondition_error("disc radii must be positive");
  if (t == Complex(0.0)) throw precondition_error("band spec needs t != 0");
  if (!(inner_band().r_outer < outer_band().r_inner))
    throw precondition_error("bands overlap: |t| too large for rho1");
}

namespace detail {

std::vector<double> geometric_radii(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi >= lo)) throw precondition_error("bad radius range");
  if (count < 1) throw precondition_error("need at least one radius");
  std::vector<double> r(static_cast<size_t>(count));
  if (count == 1) {
    r[0] = std::sqrt(lo * hi);
    return r;
  }
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) r[static_cast<size_t>(i)] = lo * std::exp(step * i);
  r.front() = lo;
  r.back() = hi;
  return r;
}

double annulus_sup(const LaurentSeries& f, double lo, double hi, int circles,
                   int points) {
  double sup = 0.0;
  for (double r : geometric_radii(lo, hi, circles)) {
    for (int j = 0; j < points; ++j) {
      const double angle = 2.0 * std::numbers::pi * j / points;
      sup = std::max(sup, std::abs(f.eval(std::polar(r, angle))));
    }
  }
  return sup;
}

}  // namespace detail

static void check_band_inside(const AnnulusSpec& band, const AnnulusSpec& annulus) {
  if (band.r_inner < annulus.r_inner || band.r_outer > annulus.r_outer)
    throw precondition_error("band not contained in the differential's annulus");
}

double band_sup(const AnnulusKDifferential& d, const BandSpec& b, Band which,
                const BandGrid& grid) {
  d.validate();
  b.validate();
  const AnnulusSpec band = which == Band::inner ? b.inner_band() : b.outer_band();
  check_band_inside(band, d.annulus);
  return detail::annulus_sup(d.f, band.r_inner, band.r_outer, grid.circles, grid.points);
}

bool is_band_bounded(const AnnulusKDifferential& d, const BandSpec& b,
                     const BandGrid& grid) {
  return band_sup(d, b, Band::inner, grid) <= b.bound &&
         band_sup(d, b, Band::outer, grid) <= b.bound;
}

InteriorSupReport interior_sup_check(const AnnulusKDifferential& d, const BandSpec& b,
                                     const BandGrid& grid, int interior_circles) {
  InteriorSupReport rep;
  rep.band_max = std::max(band_sup(d, b, Band::inner, grid),
                          band_sup(d, b, Band::outer, grid));
  // Circles strictly between the band edges: endpoints of the geometric grid
  // over the gap are dropped, the rest stay clear of both bands.
  const double lo = b.inner_band().r_outer;
  const double hi = b.outer_band().r_inner;
  const auto radii = detail::geometric_radii(lo, hi, interior_circles + 2);
  double sup = 0.0;
  for (size_t i = 1; i + 1 < radii.size(); ++i) {
    for (int j = 0; j < grid.points; ++j) {
      const double angle = 2.0 * std::numbers::pi * j / grid.points;
      sup = std::max(sup, std::abs(d.f.eval(std::polar(radii[i], angle))));
    }
  }
  rep.interior_sup = sup;
  return rep;
}

bool nodal_residue_check(const NodalKDifferential& d, double tol) {
  const double sign = d.k % 2 == 0 ? 1.0 : -1.0;
  return std::abs(d.fz.at_zero() - sign * d.gw.at_zero()) <= tol;
}

}  // namespace anndiff
