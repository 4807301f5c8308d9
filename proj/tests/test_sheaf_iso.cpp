#include <doctest.h>

#include <cmath>
#include <vector>

#include "anndiff/rng.hpp"
#include "anndiff/sheaf_iso.hpp"

using namespace anndiff;

namespace {

std::vector<Point> cloud(Rng& rng, int count) {
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i)
    pts.push_back(embed(rng.annulus(0.3, 0.9), rng.annulus(0.01, 0.1)));
  return pts;
}

}  // namespace

TEST_CASE("coefficient transport round trips exactly") {
  Rng rng(51);
  for (int k : {1, 2, 3}) {
    const RelativeSection psi{k, random_two_var(rng, 3, 3)};
    const CanonicalForm Psi = psi_to_Psi(psi);
    CHECK(Psi.F == psi.f);
    const RelativeSection back = Psi_to_psi(Psi);
    CHECK(back.f == psi.f);
    CHECK(back.k == k);
  }
  CHECK_THROWS_AS(psi_to_Psi(RelativeSection{0, TwoVarSeries(1, 1)}),
                  precondition_error);
}

TEST_CASE("tau rescaling multiplies by h^k exactly") {
  Rng rng(52);
  for (int k : {1, 2, 3}) {
    const RelativeSection psi{k, random_two_var(rng, 2, 2)};
    const CanonicalForm doubled = canonical_with_tau(psi, 2.0);
    const double twok = detail::pow_int(2.0, k);
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        CHECK(doubled.F.coeff(m, n) == twok * psi.f.coeff(m, n));
  }
  CHECK_THROWS_AS(
      canonical_with_tau(RelativeSection{1, TwoVarSeries(1, 1)}, Complex(0.0)),
      precondition_error);
}

TEST_CASE("identity gauge reproduces the coefficient exactly") {
  Rng rng(53);
  const RelativeSection psi{2, random_two_var(rng, 3, 3)};
  GaugeFunction id;
  id.log_g = TwoVarSeries(0, 0);  // g = exp(0) = 1
  const auto pts = cloud(rng, 50);
  // Multiply-then-divide by the same wedge value: roundoff only.
  CHECK(gauge_invariance_check(psi, id, pts) <= 1e-13);
}

TEST_CASE("exponential gauge leaves the canonical coefficient invariant") {
  Rng rng(54);
  const RelativeSection psi{1, random_two_var(rng, 3, 3)};
  GaugeFunction gauge;
  gauge.log_g = TwoVarSeries(1, 1);
  gauge.log_g.set_coeff(1, 0, Complex(0.3));
  gauge.log_g.set_coeff(0, 1, Complex(-0.2));
  const auto pts = cloud(rng, 200);
  CHECK(gauge_invariance_check(psi, gauge, pts) <= 1e-10);
  // The gauged evaluation matches the plain coefficient when tau = dt.
  for (const Point& pt : pts) {
    const Complex via = canonical_coefficient_with_gauge(psi, gauge, pt);
    CHECK(std::abs(via - psi.f.eval(pt.z, pt.w)) <= 1e-12);
  }
}

TEST_CASE("tau scaling through the gauge route") {
  Rng rng(55);
  const RelativeSection psi{3, random_two_var(rng, 2, 2)};
  GaugeFunction tau2;
  tau2.log_g = TwoVarSeries(0, 0);
  tau2.tau_scale = [](Complex) { return Complex(2.0); };
  const auto pts = cloud(rng, 50);
  for (const Point& pt : pts) {
    const Complex via = canonical_coefficient_with_gauge(psi, tau2, pt);
    const Complex direct = detail::pow_int(2.0, 3) * psi.f.eval(pt.z, pt.w);
    CHECK(std::abs(via - direct) <= 1e-11);
  }
  // But the relative section itself is tau-independent.
  CHECK(gauge_invariance_check(psi, tau2, pts) <= 1e-11);
}

TEST_CASE("degenerate gauges are rejected") {
  Rng rng(56);
  const RelativeSection psi{1, random_two_var(rng, 2, 2)};
  GaugeFunction tiny;
  tiny.log_g = TwoVarSeries(0, 0);
  tiny.log_g.set_coeff(0, 0, Complex(-25.0));  // e^{-25} ~ 1.4e-11
  const Point pt = embed(0.5, 0.01);
  CHECK_THROWS_AS(canonical_coefficient_with_gauge(psi, tiny, pt),
                  precondition_error);
  GaugeFunction zero_tau;
  zero_tau.log_g = TwoVarSeries(0, 0);
  zero_tau.tau_scale = [](Complex) { return Complex(0.0); };
  CHECK_THROWS_AS(canonical_coefficient_with_gauge(psi, zero_tau, pt),
                  precondition_error);
}

TEST_CASE("residue representative solves the wedge equation") {
  Rng rng(57);
  const auto pts = cloud(rng, 200);
  const CanonicalForm Phi{1, random_two_var(rng, 5, 5)};
  const RelativeSection phi = poincare_residue(Phi);
  CHECK(residue_wedge_deviation(Phi, phi, pts) <= 1e-12);
  // The wrong sign misses by 4|F|, not roundoff.
  const RelativeSection wrong{1, Phi.F};
  CHECK(residue_wedge_deviation(Phi, wrong, pts) > 1e-3);
  // Sign relative to the coefficient transport: pairing with v flips.
  const RelativeSection psi = Psi_to_psi(Phi);
  for (const Point& pt : pts)
    CHECK(std::abs(phi.f.eval(pt.z, pt.w) + psi.f.eval(pt.z, pt.w)) <= 1e-15);
  CHECK_THROWS_AS(poincare_residue(CanonicalForm{2, TwoVarSeries(1, 1)}),
                  precondition_error);
}

TEST_CASE("zero form has zero residue") {
  const CanonicalForm Phi{1, TwoVarSeries(2, 2)};
  CHECK(poincare_residue(Phi).f.max_abs_coeff() == 0.0);
}

TEST_CASE("constant form residue against the hand solution") {
  // F = 1: the alpha-multiple with dπ∧(c·α) = 2dz∧dw is c = -1.
  TwoVarSeries one(0, 0);
  one.set_coeff(0, 0, 1.0);
  const RelativeSection phi = poincare_residue(CanonicalForm{1, one});
  CHECK(phi.f.coeff(0, 0) == Complex(-1.0));
}
