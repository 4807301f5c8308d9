#include <doctest.h>

#include <cmath>

#include "anndiff/differentials.hpp"
#include "anndiff/rng.hpp"

using namespace anndiff;

TEST_CASE("band geometry and validation") {
  BandSpec b;
  b.rho1 = 0.5;
  b.rho2 = 0.9;
  b.t = Complex(0.01, 0.0);
  CHECK_NOTHROW(b.validate());
  CHECK(b.outer_band().r_inner == 0.5);
  CHECK(b.outer_band().r_outer == 0.9);
  CHECK(b.inner_band().r_inner == doctest::Approx(0.01 / 0.9));
  CHECK(b.inner_band().r_outer == doctest::Approx(0.02));

  BandSpec bad = b;
  bad.rho1 = 0.95;
  CHECK_THROWS_AS(bad.validate(), precondition_error);
  bad = b;
  bad.t = Complex(0.0);
  CHECK_THROWS_AS(bad.validate(), precondition_error);
  bad = b;
  bad.t = Complex(0.3, 0.0);  // inner band reaches past the outer band
  CHECK_THROWS_AS(bad.validate(), precondition_error);
}

TEST_CASE("band sup of a monomial sits on the boundary circle") {
  BandSpec b;
  b.rho1 = 0.5;
  b.rho2 = 0.9;
  b.t = Complex(0.01, 0.0);
  const AnnulusKDifferential d{1, LaurentSeries::monomial(3, 1.0),
                               AnnulusSpec{0.005, 1.0}};
  CHECK(band_sup(d, b, Band::outer) == doctest::Approx(0.729).epsilon(1e-12));
  // Negative exponent peaks at the inner edge of the inner band.
  const AnnulusKDifferential e{1, LaurentSeries::monomial(-1, 1.0),
                               AnnulusSpec{0.005, 1.0}};
  CHECK(band_sup(e, b, Band::inner) == doctest::Approx(90.0).epsilon(1e-12));
}

TEST_CASE("band boundedness distinguishes pole from constant") {
  BandSpec b;
  b.rho1 = 0.5;
  b.rho2 = 0.9;
  b.t = Complex(0.01, 0.0);
  b.bound = 1.0;
  const AnnulusSpec fiber{0.01, 1.0};
  CHECK_FALSE(is_band_bounded(
      AnnulusKDifferential{1, LaurentSeries::monomial(-1, 1.0), fiber}, b));
  CHECK(is_band_bounded(
      AnnulusKDifferential{1, LaurentSeries::monomial(0, 1.0), fiber}, b));
}

TEST_CASE("interior sup is controlled by the band circles") {
  BandSpec b;
  b.rho1 = 0.5;
  b.rho2 = 0.9;
  b.t = Complex(0.02, 0.005);
  const LaurentSeries f =
      LaurentSeries::from_map({{-3, Complex(0.4, 0.1)}, {0, 2.0}, {5, 1.0}});
  const NodalFamilySpec fam;
  const AnnulusKDifferential d{2, f, fiber_annulus(fam, b.t)};
  const InteriorSupReport rep = interior_sup_check(d, b);
  CHECK(rep.interior_sup <= rep.band_max + 1e-9);
  CHECK(rep.band_max > 0.0);
}

TEST_CASE("geometric radii grids") {
  const auto r = detail::geometric_radii(0.1, 1.0, 5);
  REQUIRE(r.size() == 5);
  CHECK(r.front() == 0.1);
  CHECK(r.back() == 1.0);
  for (size_t i = 1; i < r.size(); ++i) {
    CHECK(r[i] > r[i - 1]);
    CHECK(r[i] / r[i - 1] == doctest::Approx(std::pow(10.0, 0.25)).epsilon(1e-12));
  }
  const auto single = detail::geometric_radii(0.04, 0.25, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("nodal residue matching across the node") {
  NodalKDifferential odd{1, PowerSeries({Complex(2.0), Complex(5.0)}),
                         PowerSeries({Complex(-2.0)})};
  CHECK(nodal_residue_check(odd));
  NodalKDifferential even{2, PowerSeries({Complex(2.0)}),
                          PowerSeries({Complex(2.0), Complex(1.0)})};
  CHECK(nodal_residue_check(even));
  NodalKDifferential bad{1, PowerSeries({Complex(2.0)}),
                         PowerSeries({Complex(2.0)})};
  CHECK_FALSE(nodal_residue_check(bad));
}

TEST_CASE("differential validation") {
  CHECK_THROWS_AS(
      (AnnulusKDifferential{0, LaurentSeries::monomial(0, 1.0), {0.1, 1.0}}
           .validate()),
      precondition_error);
  CHECK_THROWS_AS(
      (AnnulusKDifferential{1, LaurentSeries::monomial(0, 1.0), {1.0, 0.1}}
           .validate()),
      precondition_error);
}
