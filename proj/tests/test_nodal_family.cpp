#include <doctest.h>

#include <cmath>

#include "anndiff/nodal_family.hpp"
#include "anndiff/rng.hpp"

using namespace anndiff;

TEST_CASE("fiber annulus bounds and degeneracy") {
  const NodalFamilySpec fam{2.0, 3.0};
  const AnnulusSpec a = fiber_annulus(fam, Complex(0.6, 0.0));
  CHECK(a.r_inner == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(a.r_outer == 2.0);
  CHECK_THROWS_AS(fiber_annulus(fam, Complex(6.0, 0.0)), precondition_error);
  const AnnulusSpec punctured = fiber_annulus(fam, Complex(0.0));
  CHECK(punctured.r_inner == 0.0);
}

TEST_CASE("fiber chart and its pushforward") {
  const Complex zeta(0.4, 0.3), t(0.02, -0.01);
  const Point pt = embed(zeta, t);
  CHECK(pt.z == zeta);
  CHECK(pt.w == t / zeta);
  CHECK_THROWS_AS(embed(Complex(0.0), t), precondition_error);
  // coeff = 1 pushes to the fiberwise field exactly.
  const TangentElement pushed = embed_push(zeta, t);
  const TangentElement v = v_at(pt);
  CHECK(pushed.p == v.p);
  CHECK(pushed.q == v.q);
  CHECK(same_point(pushed.at, v.at));
}

TEST_CASE("logarithmic form pairs to 2 with the fiber field") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Point pt = embed(rng.annulus(0.2, 0.9), rng.annulus(0.01, 0.15));
    CHECK(std::abs(pair(alpha_at(pt), v_at(pt)) - 2.0) <= 1e-15);
    CHECK(std::abs(wedge(alpha_at(pt), dpi_at(pt)) - 2.0) <= 1e-15);
    // dπ annihilates the fiber direction.
    CHECK(std::abs(pair(dpi_at(pt), v_at(pt))) <= 1e-16);
  }
}

TEST_CASE("pairing requires a common base point") {
  const Point p1 = embed(0.5, 0.01), p2 = embed(0.6, 0.01);
  CHECK_THROWS_AS(pair(alpha_at(p1), v_at(p2)), precondition_error);
}

TEST_CASE("forms on the axes are rejected") {
  CHECK_THROWS_AS(alpha_at(Point{0.0, 1.0}), precondition_error);
  CHECK_THROWS_AS(alpha_at(Point{1.0, 0.0}), precondition_error);
}

TEST_CASE("annulus modulus") {
  const AnnulusSpec a{0.25, 1.0};
  CHECK(annulus_module(a) ==
        doctest::Approx(std::log(4.0) / (2.0 * std::acos(-1.0))).epsilon(1e-14));
  // Scaling invariance.
  const AnnulusSpec b{0.05, 0.2};
  CHECK(annulus_module(a) == doctest::Approx(annulus_module(b)).epsilon(1e-14));
  CHECK(std::isinf(annulus_module(AnnulusSpec{0.0, 1.0})));
}

TEST_CASE("hyperbola coordinates map correctly") {
  const XYPoint xy{Complex(0.3, 0.1), Complex(-0.2, 0.45)};
  const Point pt = to_zw(xy);
  CHECK(pt.z == xy.x + xy.y);
  CHECK(pt.w == xy.x - xy.y);
  // d/dx pushes to d/dz + d/dw, dx pulls back from (dz + dw)/2.
  const TangentElement dx = to_zw(XYTangentElement{1.0, 0.0, xy});
  CHECK(dx.p == Complex(1.0));
  CHECK(dx.q == Complex(1.0));
  const CotangentElement fx = to_zw(XYCotangentElement{1.0, 0.0, xy});
  CHECK(fx.a == Complex(0.5));
  CHECK(fx.b == Complex(0.5));
}

TEST_CASE("pairing is invariant under the coordinate change") {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const XYPoint xy{rng.disc(1.0), rng.disc(1.0)};
    const XYCotangentElement form{rng.disc(1.0), rng.disc(1.0), xy};
    const XYTangentElement vec{rng.disc(1.0), rng.disc(1.0), xy};
    const Complex direct = pair(form, vec);
    const Complex mapped = pair(to_zw(form), to_zw(vec));
    CHECK(std::abs(direct - mapped) <= 1e-15);
  }
}

TEST_CASE("hyperbola field y d/dx + x d/dy is the fiber field") {
  // zw = x^2 - y^2 is constant along it, and it matches z d/dz - w d/dw.
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const XYPoint xy{rng.disc(1.0), rng.disc(1.0)};
    const TangentElement pushed = to_zw(XYTangentElement{xy.y, xy.x, xy});
    const TangentElement v = v_at(to_zw(xy));
    CHECK(pushed.p == v.p);
    CHECK(pushed.q == v.q);
  }
}
