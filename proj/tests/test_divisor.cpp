#include <doctest.h>

#include <cmath>
#include <numbers>

#include "anndiff/divisor.hpp"

using namespace anndiff;

namespace {

TwoVarSeries z_plus_w_sq() {
  TwoVarSeries s(2, 2);
  s.set_coeff(2, 0, 1.0);
  s.set_coeff(1, 1, 2.0);
  s.set_coeff(0, 2, 1.0);
  return s;
}

}  // namespace

TEST_CASE("winding numbers of monomials") {
  CHECK(winding_count([](Complex z) { return z * z * z; }, 1.0).winding == 3);
  CHECK(winding_count([](Complex) { return Complex(2.0, 1.0); }, 1.0).winding == 0);
  CHECK(winding_count([](Complex z) { return 1.0 / (z * z); }, 1.0).winding == -2);
  const WindingReport r = winding_count([](Complex z) { return z; }, 0.25);
  CHECK(r.winding == 1);
  CHECK(std::abs(r.raw_phase_sum - 2.0 * std::numbers::pi) <= 1e-9);
}

TEST_CASE("winding is additive under products") {
  const auto g = [](Complex z) { return z - Complex(0.5, 0.0); };
  const auto h = [](Complex z) { return z - Complex(2.0, 0.0); };
  const auto gh = [&](Complex z) { return g(z) * h(z); };
  const long wg = winding_count(g, 1.0).winding;
  const long wh = winding_count(h, 1.0).winding;
  CHECK(wg == 1);
  CHECK(wh == 0);
  CHECK(winding_count(gh, 1.0).winding == wg + wh);
}

TEST_CASE("winding is invariant under contour rotation") {
  const auto g = [](Complex z) {
    return (z - Complex(0.3, 0.2)) * (z + Complex(0.1, 0.6));
  };
  const long base = winding_count(g, 1.0).winding;
  for (double th : {0.7, 2.1, 4.4}) {
    const Complex rot = std::polar(1.0, th);
    const auto rotated = [&](Complex z) { return g(rot * z); };
    CHECK(winding_count(rotated, 1.0).winding == base);
  }
}

TEST_CASE("a zero on the contour is refused") {
  // ζ = 1 is the first sample point of the circle |ζ| = 1.
  try {
    winding_count([](Complex z) { return z - Complex(1.0, 0.0); }, 1.0);
    FAIL("expected contour_error");
  } catch (const contour_error& e) {
    CHECK(e.angle() == 0.0);
    CHECK(e.magnitude() <= 1e-9);
  }
}

TEST_CASE("refinement budget is enforced") {
  WindingOptions opts;
  opts.initial_samples = 8;
  opts.max_samples = 16;
  // A zero at distance 1e-6 from the contour needs far more than 16 samples.
  const auto g = [](Complex z) { return z - Complex(0.999999, 0.0); };
  CHECK_THROWS_AS(winding_count(g, 1.0, opts), contour_error);
}

TEST_CASE("fiber zero count of the squared diagonal") {
  const TwoVarSeries s = z_plus_w_sq();
  const Complex t(1e-2, 0.0);
  // Roots of (ζ + t/ζ)^2 sit at ±i√t, |ζ| = 0.1, inside the annulus.
  CHECK(fiber_zero_count(s, t, std::abs(t) / 0.9, 0.9) == 4);
  CHECK(fiber_zero_count(s, t, 0.2, 0.9) == 0);
}

TEST_CASE("mixed-coefficient fixture counts two collar zeros") {
  // 3z + 5w + 7zw on zw = t: roots near ±i·sqrt(60|t|)/6.
  TwoVarSeries s(1, 1);
  s.set_coeff(1, 0, 3.0);
  s.set_coeff(0, 1, 5.0);
  s.set_coeff(1, 1, 7.0);
  const ConstancyReport rep =
      constancy_check(s, {Complex(1e-2, 0.0), Complex(0.0, 1e-3)}, 0.9);
  CHECK(rep.pass());
  CHECK(rep.nodal_total == 2);
  for (int n : rep.fiber_counts) CHECK(n == 2);
  CHECK(rep.z_branch->order_at_origin == 1);
  CHECK(rep.w_branch->order_at_origin == 1);
}

TEST_CASE("branch orders split node multiplicity from punctured zeros") {
  // z^2 + z^3 on the z branch: double zero at the node, simple zero at -1.
  TwoVarSeries s(3, 0);
  s.set_coeff(2, 0, 1.0);
  s.set_coeff(3, 0, 1.0);
  const BranchOrderReport inside = nodal_branch_order(s, Branch::z, 0.9);
  CHECK(inside.order_at_origin == 2);
  CHECK(inside.zeros_in_punctured_disc == 0);
  const BranchOrderReport wide = nodal_branch_order(s, Branch::z, 1.5);
  CHECK(wide.order_at_origin == 2);
  CHECK(wide.zeros_in_punctured_disc == 1);
  CHECK_THROWS_AS(nodal_branch_order(s, Branch::w, 0.9), degenerate_divisor_error);
}

TEST_CASE("a vanishing branch restriction abstains from the verdict") {
  TwoVarSeries s(1, 0);
  s.set_coeff(1, 0, 1.0);  // f = z: trivial on the w branch
  const ConstancyReport rep = constancy_check(s, {Complex(1e-2, 0.0)}, 0.9);
  CHECK(rep.degenerate);
  CHECK_FALSE(rep.pass());
  REQUIRE(rep.fiber_counts.size() == 1);
  CHECK(rep.fiber_counts[0] == 0);  // F = ζ never vanishes on the annulus
}

TEST_CASE("zeros crossing the counting circles break constancy") {
  // z + w - 0.95: for small t both roots sit outside the counting annulus,
  // near t = 6e-2 they both sit inside.
  TwoVarSeries s(1, 1);
  s.set_coeff(0, 0, -0.95);
  s.set_coeff(1, 0, 1.0);
  s.set_coeff(0, 1, 1.0);
  const ConstancyReport rep =
      constancy_check(s, {Complex(1e-2, 0.0), Complex(6e-2, 0.0)}, 0.9);
  CHECK_FALSE(rep.degenerate);
  CHECK_FALSE(rep.counts_constant);
  CHECK_FALSE(rep.pass());
}
