#pragma once

#include "anndiff/laurent.hpp"
#include "anndiff/nodal_family.hpp"

namespace anndiff {

/// eta = f(ζ)·(dζ/ζ)^k on a fiber annulus. |eta·(dζ/ζ)^{-k}| = |f| is the
/// coordinate-free magnitude: in the w chart the same point carries the same
/// value of |f|.
struct AnnulusKDifferential {
  int k = 1;
  LaurentSeries f;
  AnnulusSpec annulus;
  void validate() const;
};

/// Two thin closed sub-annuli of the fiber, outer [rho1·c, rho2·c] and inner
/// [|t|/(c'·rho2), |t|/(c'·rho1)], carrying the sup bound M.
struct BandSpec {
  double rho1 = 0.5;
  double rho2 = 0.9;
  double bound = 1.0;
  double c = 1.0;
  double c_prime = 1.0;
  Complex t;
  AnnulusSpec outer_band() const { return {rho1 * c, rho2 * c}; }
  AnnulusSpec inner_band() const {
    return {std::abs(t) / (c_prime * rho2), std::abs(t) / (c_prime * rho1)};
  }
  void validate() const;  // 0 < rho1 < rho2 < 1, t != 0, bands disjoint
};

enum class Band { inner, outer };

struct BandGrid {
  int circles = 8;
  int points = 512;
};

/// Sampled sup of |f| over the chosen closed band (endpoint circles included).
double band_sup(const AnnulusKDifferential& d, const BandSpec& b, Band which,
                const BandGrid& grid = {});

/// Both band sups at or below b.bound.
bool is_band_bounded(const AnnulusKDifferential& d, const BandSpec& b,
                     const BandGrid& grid = {});

struct InteriorSupReport {
  double interior_sup = 0.0;
  double band_max = 0.0;
};

/// Samples the open region between the bands; the maximum principle bounds it
/// by the band circles, so interior_sup <= band_max + tolerance.
InteriorSupReport interior_sup_check(const AnnulusKDifferential& d, const BandSpec& b,
                                     const BandGrid& grid = {},
                                     int interior_circles = 16);

/// Restrictions to the two branches of the central fiber:
/// eta_z = fz(z)·(dz/z)^k on w = 0 and eta_w = gw(w)·(dw/w)^k on z = 0.
struct NodalKDifferential {
  int k = 1;
  PowerSeries fz, gw;
};

/// Residue matching across the node: fz(0) = (-1)^k · gw(0).
bool nodal_residue_check(const NodalKDifferential& d, double tol = 1e-12);

namespace detail {
/// count radii spanning [lo, hi] geometrically, endpoints included.
std::vector<double> geometric_radii(double lo, double hi, int count);
/// Sampled sup of |f| over closed annulus circles.
double annulus_sup(const LaurentSeries& f, double lo, double hi, int circles, int points);
}  // namespace detail

}  // namespace anndiff
