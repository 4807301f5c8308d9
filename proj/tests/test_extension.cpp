#include <doctest.h>

#include <cmath>
#include <numbers>

#include "anndiff/extension.hpp"
#include "anndiff/rng.hpp"

using namespace anndiff;

namespace {

TwoVarSeries hand_series() {
  // 1 + z - 2w + 0.5 z^2 w + i z w^2
  TwoVarSeries s(3, 2);
  s.set_coeff(0, 0, 1.0);
  s.set_coeff(1, 0, 1.0);
  s.set_coeff(0, 1, -2.0);
  s.set_coeff(2, 1, 0.5);
  s.set_coeff(1, 2, Complex(0.0, 1.0));
  return s;
}

}  // namespace

TEST_CASE("series storage and evaluation") {
  TwoVarSeries s(2, 1);
  s.set_coeff(0, 0, 1.0);
  s.set_coeff(1, 1, 2.0);
  CHECK(s.coeff(1, 1) == Complex(2.0));
  CHECK(s.coeff(5, 5) == Complex(0.0));
  CHECK_THROWS_AS(s.set_coeff(3, 0, 1.0), precondition_error);
  CHECK(s.eval_regular(2.0, 3.0) == Complex(13.0));
  const TwoVarSeries p = s.with_pole_order(1);
  CHECK(std::abs(p.eval(2.0, 3.0) - Complex(6.5)) <= 1e-15);
  CHECK_THROWS_AS(p.eval(Complex(0.0), 1.0), std::domain_error);
  const Complex zeta(0.5, 0.25), t(0.01, -0.02);
  CHECK(s.eval_fiber(zeta, t) == s.eval(zeta, t / zeta));
  CHECK_THROWS_AS(s.eval_fiber(Complex(0.0), t), std::domain_error);
  CHECK_THROWS_AS(TwoVarSeries(-1, 0), precondition_error);
}

TEST_CASE("sampling produces a valid uniform grid") {
  const FamilySamples fs = sample_family(hand_series(), 1, 0.5, 0.1, 8, 16);
  CHECK(fs.t_count() == 8);
  CHECK(fs.zeta_count() == 16);
  CHECK(fs.uniform_t());
  CHECK_NOTHROW(fs.validate());
  FamilySamples scrambled = fs;
  std::swap(scrambled.t_values[0], scrambled.t_values[3]);
  CHECK_FALSE(scrambled.uniform_t());
}

TEST_CASE("recovery from a uniform grid is exact to roundoff") {
  const TwoVarSeries truth = hand_series();
  const FamilySamples fs = sample_family(truth, 1, 0.5, 0.1, 8, 16);
  const TwoVarSeries rec = extend(fs, 3, 2);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 2; ++n)
      CHECK(std::abs(rec.coeff(m, n) - truth.coeff(m, n)) <= 1e-12);
  CHECK(reconstruction_error(fs, rec) <= 1e-12);
}

TEST_CASE("aliasing preconditions reject undersampled grids") {
  const FamilySamples fs = sample_family(hand_series(), 1, 0.5, 0.1, 8, 16);
  // zeta_count must reach 2(m+n)+1, t_count must reach n+1.
  CHECK_THROWS_AS(extend(fs, 9, 9), precondition_error);
  CHECK_THROWS_AS(extend(fs, 3, 9), precondition_error);
}

TEST_CASE("non-uniform parameter samples go through least squares") {
  Rng rng(31);
  const TwoVarSeries truth = random_two_var(rng, 4, 3);
  FamilySamples fs;
  fs.k = 1;
  fs.r_zeta = 0.5;
  fs.rho_t = 0.1;
  const int Nt = 12, Nz = 32;
  for (int l = 0; l < Nt; ++l) fs.t_values.push_back(rng.annulus(0.05, 0.1));
  for (int l = 0; l < Nt; ++l) {
    std::vector<Complex> row;
    for (int j = 0; j < Nz; ++j) {
      const Complex zeta = std::polar(0.5, 2.0 * std::numbers::pi * j / Nz);
      row.push_back(truth.eval_fiber(zeta, fs.t_values[l]));
    }
    fs.values.push_back(std::move(row));
  }
  CHECK_FALSE(fs.uniform_t());
  const TwoVarSeries rec = extend(fs, 4, 3);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(std::abs(rec.coeff(m, n) - truth.coeff(m, n)) <= 1e-9);

  // Collapsed parameter set cannot separate the t powers.
  FamilySamples degenerate = fs;
  for (auto& t : degenerate.t_values) t = Complex(0.08, 0.0);
  for (int l = 0; l < Nt; ++l)
    for (int j = 0; j < Nz; ++j) {
      const Complex zeta = std::polar(0.5, 2.0 * std::numbers::pi * j / Nz);
      degenerate.values[l][j] = truth.eval_fiber(zeta, Complex(0.08, 0.0));
    }
  CHECK_THROWS_AS(extend(degenerate, 4, 3), precondition_error);
}

TEST_CASE("inner-boundary pole bookkeeping") {
  // Samples of w/z = t/ζ^2 on fibers.
  const FiberFunction f = [](Complex z, Complex w) { return w / z; };
  const FamilySamples fs = sample_family(f, 1, 0.5, 0.1, 8, 16);

  // As g·z^{-1}: g = w, so the (0,1) coefficient carries it.
  const TwoVarSeries rec1 = extend_with_pole(fs, 1, 2, 2);
  CHECK(rec1.pole_order() == 1);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      const Complex want = (m == 0 && n == 1) ? Complex(1.0) : Complex(0.0);
      CHECK(std::abs(rec1.coeff(m, n) - want) <= 1e-12);
    }

  // As g·z^{-2}: g = zw, so the (1,1) coefficient carries it.
  const TwoVarSeries rec2 = extend_with_pole(fs, 2, 2, 2);
  CHECK(rec2.pole_order() == 2);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      const Complex want = (m == 1 && n == 1) ? Complex(1.0) : Complex(0.0);
      CHECK(std::abs(rec2.coeff(m, n) - want) <= 1e-12);
    }
  CHECK(reconstruction_error(fs, rec2) <= 1e-12);

  // Order zero is a plain extension, bit for bit.
  const FamilySamples g = sample_family(hand_series(), 1, 0.5, 0.1, 8, 16);
  CHECK(extend_with_pole(g, 0, 3, 2) == extend(g, 3, 2));
}

TEST_CASE("branch restrictions and the node residue") {
  TwoVarSeries s(1, 1);
  s.set_coeff(0, 0, 3.0);
  s.set_coeff(1, 0, 2.0);
  s.set_coeff(0, 1, 5.0);
  s.set_coeff(1, 1, 1.0);
  const PowerSeries fz = nodal_restriction(s, Branch::z, 1);
  CHECK(fz.coeff(0) == Complex(3.0));
  CHECK(fz.coeff(1) == Complex(2.0));
  const PowerSeries gw1 = nodal_restriction(s, Branch::w, 1);
  CHECK(gw1.coeff(0) == Complex(-3.0));
  CHECK(gw1.coeff(1) == Complex(-5.0));
  const PowerSeries gw2 = nodal_restriction(s, Branch::w, 2);
  CHECK(gw2.coeff(0) == Complex(3.0));
  CHECK(gw2.coeff(1) == Complex(5.0));

  const NodalKDifferential nd = nodal_differential(s, 1);
  CHECK(nd.fz.at_zero() == -nd.gw.at_zero());

  CHECK_THROWS_AS(nodal_restriction(s.with_pole_order(1), Branch::z, 1),
                  precondition_error);
}

TEST_CASE("family convergence to the nodal limit") {
  // For z + w the sup on 0.4 <= |ζ| <= 0.9 is |t|/0.4 in both charts.
  TwoVarSeries zpw(1, 1);
  zpw.set_coeff(1, 0, 1.0);
  zpw.set_coeff(0, 1, 1.0);
  const std::vector<Complex> ts{1e-1, 1e-2, 1e-3};
  const NormalFamiliesReport rep =
      verify_normal_families(zpw, ts, {AnnulusSpec{0.4, 0.9}});
  REQUIRE(rep.compacta.size() == 1);
  for (const auto& e : rep.compacta[0]) {
    CHECK(e.sup_z == doctest::Approx(std::abs(e.t) / 0.4).epsilon(1e-12));
    CHECK(e.sup_w == doctest::Approx(std::abs(e.t) / 0.4).epsilon(1e-12));
  }
  CHECK(rep.decreasing);
  CHECK_FALSE(rep.exact);
  CHECK(rep.order_z[0] == doctest::Approx(1.0).epsilon(1e-6));

  // A t-independent series is its own limit.
  TwoVarSeries constant(0, 0);
  constant.set_coeff(0, 0, 4.0);
  const NormalFamiliesReport flat =
      verify_normal_families(constant, ts, {AnnulusSpec{0.4, 0.9}});
  CHECK(flat.exact);

  CHECK_THROWS_AS(
      verify_normal_families(zpw.with_pole_order(1), ts, {AnnulusSpec{0.4, 0.9}}),
      precondition_error);
  CHECK_THROWS_AS(verify_normal_families(zpw, ts, {AnnulusSpec{0.0, 0.9}}),
                  precondition_error);
  CHECK_THROWS_AS(verify_normal_families(zpw, {Complex(0.5, 0.0)},
                                         {AnnulusSpec{0.4, 0.9}}),
                  precondition_error);
}
