#include "anndiff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "anndiff/collar.hpp"
#include "anndiff/divisor.hpp"
#include "anndiff/rng.hpp"
#include "anndiff/serialize.hpp"
#include "anndiff/sheaf_iso.hpp"

namespace anndiff {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

std::string cx_value(const std::string& check, const Json& extra) {
  Json j = extra;
  j["check"] = check;
  return dump_json(j);
}

CheckResult check_coefficient_recovery(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "coefficient_recovery";
  r.gate = 1e-12 * cfg.tol_scale;
  Rng rng(cfg.seed + 1);
  for (int trial = 0; trial < 500; ++trial) {
    const LaurentSeries s = random_laurent(rng, -8, 8);
    const LaurentSeries rec =
        coefficients_from_samples(sample_circle(s, 1.0, 64), -8, 8);
    for (int n = -8; n <= 8; ++n) {
      const double err = std::abs(rec.coeff(n) - s.coeff(n));
      if (err > r.worst) {
        r.worst = err;
        if (err > r.gate && r.counterexample_json.empty())
          r.counterexample_json = cx_value(
              r.name, Json{{"trial", trial},
                           {"exponent", n},
                           {"expected", complex_to_json(s.coeff(n))},
                           {"got", complex_to_json(rec.coeff(n))}});
      }
    }
  }
  r.pass = r.worst <= r.gate;
  r.detail = "500 random supports [-8,8], N=64, r=1, max coeff err " + fmt(r.worst);
  return r;
}

CheckResult check_cauchy_decomposition(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "cauchy_decomposition";
  r.gate = 1e-12 * cfg.tol_scale;
  Rng rng(cfg.seed + 2);
  bool exact = true;
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentSeries s = random_laurent(rng, -16, 16);
    const Decomposition d = decompose(s);
    const LaurentSeries recon =
        d.plus + LaurentSeries::monomial(0, d.f0) + d.minus;
    if (!(recon == s)) {
      exact = false;
      if (r.counterexample_json.empty())
        r.counterexample_json =
            cx_value(r.name, Json{{"trial", trial}, {"failure", "reconstruction"}});
    }
    if (!d.plus.is_zero() && d.plus.n_min() < 1) exact = false;
    if (!d.minus.is_zero() && d.minus.n_max() > -1) exact = false;
    // Independent trapezoid quadrature of f(s)/s over |s| = 1.
    Complex mean = 0.0;
    const int N = 64;
    for (int j = 0; j < N; ++j)
      mean += s.eval(std::polar(1.0, 2.0 * std::numbers::pi * j / N));
    mean /= static_cast<double>(N);
    const double err = std::abs(mean - d.f0);
    if (err > r.worst) {
      r.worst = err;
      if (err > r.gate && r.counterexample_json.empty())
        r.counterexample_json =
            cx_value(r.name, Json{{"trial", trial},
                                  {"failure", "f0 vs trapezoid"},
                                  {"expected", complex_to_json(d.f0)},
                                  {"got", complex_to_json(mean)}});
    }
  }
  r.pass = exact && r.worst <= r.gate;
  r.detail = std::string("reconstruction ") + (exact ? "exact" : "BROKEN") +
             ", f0 vs trapezoid err " + fmt(r.worst);
  return r;
}

CheckResult check_coordinate_identities(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "coordinate_identities";
  r.gate = 1e-14 * cfg.tol_scale;
  Rng rng(cfg.seed + 3);
  for (int i = 0; i < 1000; ++i) {
    const Complex t = rng.annulus(0.01, 0.2);
    const Complex zeta = rng.annulus(0.2, 0.9);
    const Point pt = embed(zeta, t);
    double err = std::abs(pair(alpha_at(pt), v_at(pt)) - 2.0);
    err = std::max(err, std::abs(wedge(alpha_at(pt), dpi_at(pt)) - 2.0));
    err = std::max(err, std::abs(pair(alpha_at(pt), embed_push(zeta, t)) - 2.0));
    Complex x = rng.disc(0.8), y = rng.disc(0.8);
    while (std::abs(x) < 1e-3 || std::abs(y) < 1e-3 ||
           std::abs(x + y) < 1e-3 || std::abs(x - y) < 1e-3) {
      x = rng.disc(0.8);
      y = rng.disc(0.8);
    }
    const XYPoint xy{x, y};
    const XYTangentElement vxy{y, x, xy};
    const TangentElement pushed = to_zw(vxy);
    const TangentElement vref = v_at(to_zw(xy));
    err = std::max(err, std::abs(pushed.p - vref.p));
    err = std::max(err, std::abs(pushed.q - vref.q));
    err = std::max(err, std::abs(pair(XYCotangentElement{1.0 / y, 1.0 / x, xy}, vxy) -
                                 2.0));
    if (err > r.worst) {
      r.worst = err;
      if (err > r.gate && r.counterexample_json.empty())
        r.counterexample_json = cx_value(
            r.name, Json{{"point_index", i},
                         {"zeta", complex_to_json(zeta)},
                         {"t", complex_to_json(t)}});
    }
  }
  r.pass = r.worst <= r.gate;
  r.detail = "pairing, wedge, pullback, hyperbola push at 1000 points, worst " +
             fmt(r.worst);
  return r;
}

CheckResult check_maximum_principle(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "maximum_principle";
  r.gate = 1e-9 * cfg.tol_scale;
  Rng rng(cfg.seed + 4);
  r.worst = -std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentSeries f = random_laurent(rng, -12, 12);
    const Complex t = rng.circle(0.01);
    const NodalFamilySpec fam;
    const AnnulusKDifferential d{1, f, fiber_annulus(fam, t)};
    BandSpec b;
    b.rho1 = 0.5;
    b.rho2 = 0.9;
    b.t = t;
    const InteriorSupReport rep = interior_sup_check(d, b);
    const double excess = rep.interior_sup - rep.band_max;
    if (excess > r.worst) {
      r.worst = excess;
      if (excess > r.gate && r.counterexample_json.empty())
        r.counterexample_json = cx_value(
            r.name, Json{{"trial", trial},
                         {"interior_sup", rep.interior_sup},
                         {"band_max", rep.band_max}});
    }
  }
  r.pass = r.worst <= r.gate;
  r.detail = "100 random differentials, worst interior excess " + fmt(r.worst);
  return r;
}

CheckResult check_extension_recovery(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "extension_recovery";
  r.gate = 1e-8 * cfg.tol_scale;
  const double uni_gate = 1e-7 * cfg.tol_scale;
  Rng rng(cfg.seed + 5);
  double worst_restr = 0.0, worst_res = 0.0, worst_uni = 0.0, worst_recon = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const TwoVarSeries truth = random_two_var(rng, 6, 6);
    const FamilySamples fs = sample_family(truth, 1, 0.5, 0.1, 16, 64);
    const TwoVarSeries rec = extend(fs, 6, 6);
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n) {
        const double err = std::abs(rec.coeff(m, n) - truth.coeff(m, n));
        if (err > r.worst) {
          r.worst = err;
          if (err > r.gate && r.counterexample_json.empty())
            r.counterexample_json = cx_value(
                r.name, Json{{"trial", trial}, {"m", m}, {"n", n},
                             {"expected", complex_to_json(truth.coeff(m, n))},
                             {"got", complex_to_json(rec.coeff(m, n))}});
        }
      }
    worst_recon = std::max(worst_recon, reconstruction_error(fs, rec));
    const PowerSeries fz = nodal_restriction(rec, Branch::z, 1);
    const PowerSeries gw = nodal_restriction(rec, Branch::w, 1);
    for (int m = 0; m <= 6; ++m)
      worst_restr = std::max(worst_restr, std::abs(fz.coeff(m) - truth.coeff(m, 0)));
    for (int n = 0; n <= 6; ++n)
      worst_restr = std::max(worst_restr, std::abs(gw.coeff(n) + truth.coeff(0, n)));
    const NodalKDifferential nd = nodal_differential(rec, 1);
    worst_res = std::max(worst_res,
                         std::abs(nd.fz.at_zero() + nd.gw.at_zero()));
    const FamilySamples fs2 = sample_family(truth, 1, 0.6, 0.12, 16, 64);
    const TwoVarSeries rec2 = extend(fs2, 6, 6);
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n)
        worst_uni = std::max(worst_uni, std::abs(rec.coeff(m, n) - rec2.coeff(m, n)));
  }
  r.pass = r.worst <= r.gate && worst_recon <= r.gate && worst_restr <= r.gate &&
           worst_res == 0.0 && worst_uni <= uni_gate;
  if (!r.pass && r.counterexample_json.empty())
    r.counterexample_json = cx_value(
        r.name, Json{{"recovery", r.worst}, {"reconstruction", worst_recon},
                     {"restriction", worst_restr}, {"residue", worst_res},
                     {"uniqueness", worst_uni}});
  r.detail = "recovery " + fmt(r.worst) + ", restriction " + fmt(worst_restr) +
             ", residue " + fmt(worst_res) + ", two-radii agreement " + fmt(worst_uni);
  return r;
}

CheckResult check_polar_variant(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "polar_variant";
  r.gate = 1e-8 * cfg.tol_scale;
  Rng rng(cfg.seed + 6);
  double worst_restr = 0.0;
  bool z_branch_guard = true;
  for (int trial = 0; trial < 20; ++trial) {
    const int m0 = 1 + trial % 2;
    const TwoVarSeries g = random_two_var(rng, 6, 6);
    const TwoVarSeries section = g.with_pole_order(m0);
    const FamilySamples fs = sample_family(section, 1, 0.5, 0.1, 16, 64);
    const TwoVarSeries rec = extend_with_pole(fs, m0, 6, 6);
    if (rec.pole_order() != m0) z_branch_guard = false;
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n) {
        const double err = std::abs(rec.coeff(m, n) - g.coeff(m, n));
        if (err > r.worst) {
          r.worst = err;
          if (err > r.gate && r.counterexample_json.empty())
            r.counterexample_json = cx_value(
                r.name, Json{{"trial", trial}, {"pole_order", m0}, {"m", m}, {"n", n}});
        }
      }
    const PowerSeries gw = nodal_restriction(rec, Branch::w, 1);
    for (int n = 0; n <= 6; ++n)
      worst_restr = std::max(worst_restr, std::abs(gw.coeff(n) + g.coeff(0, n)));
    try {
      nodal_restriction(rec, Branch::z, 1);
      z_branch_guard = false;  // must refuse: the restriction has a pole
    } catch (const precondition_error&) {
    }
  }
  r.pass = r.worst <= r.gate && worst_restr <= r.gate && z_branch_guard;
  if (!r.pass && r.counterexample_json.empty())
    r.counterexample_json = cx_value(
        r.name, Json{{"recovery", r.worst}, {"restriction", worst_restr},
                     {"z_branch_guard", z_branch_guard}});
  r.detail = "pole orders 1,2: recovery " + fmt(r.worst) + ", w restriction " +
             fmt(worst_restr) + ", z branch refused: " +
             (z_branch_guard ? "yes" : "NO");
  return r;
}

CheckResult check_normal_families(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "normal_families";
  r.gate = 1e-10 * cfg.tol_scale;
  TwoVarSeries zpw(1, 1);
  zpw.set_coeff(1, 0, 1.0);
  zpw.set_coeff(0, 1, 1.0);
  const std::vector<Complex> ts{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  const std::vector<AnnulusSpec> comp{{0.4, 0.9}};
  const NormalFamiliesReport rep = verify_normal_families(zpw, ts, comp);
  for (const auto& e : rep.compacta.front()) {
    const double expected = std::abs(e.t) / 0.4;
    const double err =
        std::max(std::abs(e.sup_z - expected), std::abs(e.sup_w - expected));
    if (err > r.worst) {
      r.worst = err;
      if (err > r.gate && r.counterexample_json.empty())
        r.counterexample_json = cx_value(
            r.name, Json{{"t", complex_to_json(e.t)},
                         {"sup_z", e.sup_z}, {"sup_w", e.sup_w},
                         {"expected", expected}});
    }
  }
  bool monotone = rep.decreasing;
  // Fitted convergence order on random regular truths.
  double min_order = std::numeric_limits<double>::infinity();
  Rng rng(cfg.seed + 7);
  const std::vector<Complex> ts2{1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  const std::vector<AnnulusSpec> comp2{{0.4, 0.9}, {0.3, 0.8}};
  for (int trial = 0; trial < 10; ++trial) {
    const TwoVarSeries truth = random_two_var(rng, 4, 4);
    const NormalFamiliesReport rp = verify_normal_families(truth, ts2, comp2);
    monotone = monotone && rp.decreasing;
    for (double o : rp.order_z)
      if (std::isfinite(o)) min_order = std::min(min_order, o);
    for (double o : rp.order_w)
      if (std::isfinite(o)) min_order = std::min(min_order, o);
  }
  const bool order_ok = min_order >= 0.99;
  r.pass = r.worst <= r.gate && monotone && order_ok;
  if (!r.pass && r.counterexample_json.empty())
    r.counterexample_json = cx_value(
        r.name, Json{{"sup_err", r.worst}, {"min_order", min_order},
                     {"monotone", monotone}});
  r.detail = "z+w sup err " + fmt(r.worst) + ", min fitted order " +
             fmt(min_order) + (monotone ? "" : ", NOT monotone");
  return r;
}

CheckResult check_zero_counting(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "zero_counting";
  r.gate = 1e-6 * cfg.tol_scale;
  TwoVarSeries sq(2, 2);  // (z + w)^2
  sq.set_coeff(2, 0, 1.0);
  sq.set_coeff(1, 1, 2.0);
  sq.set_coeff(0, 2, 1.0);
  const std::vector<Complex> ts{Complex(-1e-2, 0.0), Complex(7e-3, 5e-3),
                                Complex(1e-3, 0.0), Complex(-2e-4, 1e-4)};
  const ConstancyReport rep = constancy_check(sq, ts, 0.9);
  bool counts_ok = rep.pass() && rep.nodal_total == 4;
  for (int n : rep.fiber_counts) counts_ok = counts_ok && n == 4;
  if (rep.z_branch) {
    counts_ok = counts_ok && rep.z_branch->order_at_origin == 2 &&
                rep.z_branch->zeros_in_punctured_disc == 0;
  } else {
    counts_ok = false;
  }
  if (rep.w_branch) {
    counts_ok = counts_ok && rep.w_branch->order_at_origin == 2 &&
                rep.w_branch->zeros_in_punctured_disc == 0;
  } else {
    counts_ok = false;
  }
  // Phase sums must close to integers tightly.
  for (const Complex& t : ts) {
    const auto g = [&sq, t](Complex zeta) { return sq.eval_regular_fiber(zeta, t); };
    for (double radius : {std::abs(t) / 0.9, 0.9}) {
      const WindingReport w = winding_count(g, radius);
      const double dev = std::abs(
          w.raw_phase_sum / (2.0 * std::numbers::pi) - static_cast<double>(w.winding));
      r.worst = std::max(r.worst, dev);
    }
  }
  r.pass = counts_ok && r.worst <= r.gate;
  if (!r.pass && r.counterexample_json.empty()) {
    Json counts = Json::array();
    for (int n : rep.fiber_counts) counts.push_back(n);
    r.counterexample_json = cx_value(
        r.name, Json{{"fiber_counts", counts}, {"nodal_total", rep.nodal_total},
                     {"phase_dev", r.worst}});
  }
  r.detail = std::string("(z+w)^2 counts ") + (counts_ok ? "4=2+2" : "WRONG") +
             ", worst phase closure " + fmt(r.worst);
  return r;
}

CheckResult check_hyperbolic_metric(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "hyperbolic_metric";
  r.gate = 1e-12 * cfg.tol_scale;
  Rng rng(cfg.seed + 9);
  for (int i = 0; i < 1000; ++i) {
    const double log_at = rng.uniform(std::log(1e-8), std::log(0.5));
    const Complex t = std::polar(std::exp(log_at),
                                 rng.uniform(0.0, 2.0 * std::numbers::pi));
    const double frac = rng.uniform(0.05, 0.95);
    const double zr = std::exp(frac * std::log(std::abs(t)));
    const double sum = theta(zr, t) + theta(std::abs(t) / zr, t);
    r.worst = std::max(r.worst, std::abs(sum - std::numbers::pi));
  }
  // Series coefficients and the tail bound at Theta = 1/2.
  const auto c = factor_series_coefficients(4);
  double coeff_err = std::abs(c[0] - 1.0);
  coeff_err = std::max(coeff_err, std::abs(c[1] - 1.0 / 3.0));
  coeff_err = std::max(coeff_err, std::abs(c[2] - 1.0 / 15.0));
  coeff_err = std::max(coeff_err, std::abs(c[3] - 2.0 / 189.0));
  const bool coeffs_ok = coeff_err <= 1e-15 * cfg.tol_scale;
  const double tail = std::abs(theta_csc_theta_sq(0.5) - factor_series(0.5, 3));
  const bool tail_ok = tail <= 0.015625 * cfg.tol_scale;  // 0.5^6
  // Density is chart-symmetric: the w-chart pullback matches.
  double density_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double log_at = rng.uniform(std::log(1e-6), std::log(0.25));
    const Complex t = std::polar(std::exp(log_at),
                                 rng.uniform(0.0, 2.0 * std::numbers::pi));
    const double frac = rng.uniform(0.1, 0.9);
    const Complex zeta =
        std::polar(std::exp(frac * std::log(std::abs(t))),
                   rng.uniform(0.0, 2.0 * std::numbers::pi));
    const Complex w = t / zeta;
    const double lz = hyperbolic_density(zeta, t);
    const double lw = hyperbolic_density(w, t) * std::abs(t) / std::norm(zeta);
    density_dev = std::max(density_dev, std::abs(lz - lw) / lz);
  }
  const bool density_ok = density_dev <= 1e-10 * cfg.tol_scale;
  // Collar comparison constants: analytic cross-check plus frozen regression.
  const double abs_t[] = {1e-2, 1e-4, 1e-6, 1e-8};
  double bracket_err = 0.0;
  for (double at : abs_t) {
    const RatioBounds rb = collar_ratio_bounds(Complex(at, 0.0), 0.5);
    const double L = -std::log(at);
    const double hi_expect = L / std::numbers::pi;
    const double lo_expect = hi_expect * std::sin(std::numbers::pi * std::log(2.0) / L);
    bracket_err = std::max(bracket_err, std::abs(rb.hi - hi_expect));
    bracket_err = std::max(bracket_err, std::abs(rb.lo - lo_expect));
  }
  const bool bracket_ok = bracket_err <= 1e-10 * cfg.tol_scale;
  r.pass = r.worst <= r.gate && coeffs_ok && tail_ok && density_ok && bracket_ok;
  if (!r.pass && r.counterexample_json.empty())
    r.counterexample_json = cx_value(
        r.name, Json{{"theta_sum_dev", r.worst}, {"coeff_err", coeff_err},
                     {"tail", tail}, {"density_dev", density_dev},
                     {"bracket_err", bracket_err}});
  r.detail = "theta sum dev " + fmt(r.worst) + ", coeff err " + fmt(coeff_err) +
             ", chart symmetry " + fmt(density_dev) + ", bracket err " +
             fmt(bracket_err);
  return r;
}

CheckResult check_gauge_invariance(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "gauge_invariance";
  r.gate = 1e-10 * cfg.tol_scale;
  Rng rng(cfg.seed + 10);
  std::vector<Point> points;
  for (int i = 0; i < 200; ++i)
    points.push_back(embed(rng.annulus(0.3, 0.9), rng.annulus(0.01, 0.1)));
  double tau_dev = 0.0;
  bool tau_exact = true;
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + trial % 3;
    const RelativeSection psi{k, random_two_var(rng, 3, 3)};
    GaugeFunction gauge;
    gauge.log_g = random_two_var(rng, 2, 2, 0.5);
    if (trial % 3 != 0) {
      const Complex hc = std::exp(rng.disc(1.0));
      gauge.tau_scale = [hc](Complex) { return hc; };
    }
    r.worst = std::max(r.worst, gauge_invariance_check(psi, gauge, points));
    // tau = 2·dt doubles the canonical coefficient k-fold.
    const CanonicalForm doubled = canonical_with_tau(psi, 2.0);
    for (int m = 0; m <= psi.f.m_deg(); ++m)
      for (int n = 0; n <= psi.f.n_deg(); ++n) {
        const double twok = detail::pow_int(2.0, k);
        if (doubled.F.coeff(m, n) != twok * psi.f.coeff(m, n)) tau_exact = false;
      }
    GaugeFunction tau2;
    tau2.log_g = TwoVarSeries(0, 0);
    tau2.tau_scale = [](Complex) { return Complex(2.0); };
    for (const Point& pt : points) {
      const Complex via_gauge = canonical_coefficient_with_gauge(psi, tau2, pt);
      const Complex direct =
          detail::pow_int(2.0, k) * psi.f.eval(pt.z, pt.w);
      tau_dev = std::max(tau_dev, std::abs(via_gauge - direct));
    }
  }
  const bool tau_ok = tau_exact && tau_dev <= 1e-11 * cfg.tol_scale;
  r.pass = r.worst <= r.gate && tau_ok;
  if (!r.pass && r.counterexample_json.empty())
    r.counterexample_json = cx_value(
        r.name, Json{{"roundtrip_dev", r.worst}, {"tau_dev", tau_dev},
                     {"tau_coeff_exact", tau_exact}});
  r.detail = "50 gauges x 200 points, round trip " + fmt(r.worst) +
             ", tau doubling dev " + fmt(tau_dev);
  return r;
}

CheckResult check_poincare_residue(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "poincare_residue";
  r.gate = 1e-12 * cfg.tol_scale;
  Rng rng(cfg.seed + 11);
  std::vector<Point> points;
  for (int i = 0; i < 200; ++i)
    points.push_back(embed(rng.annulus(0.3, 0.9), rng.annulus(0.01, 0.1)));
  double pairing_dev = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const CanonicalForm Phi{1, random_two_var(rng, 5, 5)};
    const RelativeSection phi = poincare_residue(Phi);
    r.worst = std::max(r.worst, residue_wedge_deviation(Phi, phi, points));
    // phi pairs against v as the negative of the direct transport.
    const RelativeSection psi = Psi_to_psi(Phi);
    for (const Point& pt : points)
      pairing_dev = std::max(
          pairing_dev, std::abs(phi.f.eval(pt.z, pt.w) + psi.f.eval(pt.z, pt.w)));
  }
  const bool pairing_ok = pairing_dev <= 1e-12 * cfg.tol_scale;
  r.pass = r.worst <= r.gate && pairing_ok;
  if (!r.pass && r.counterexample_json.empty())
    r.counterexample_json = cx_value(
        r.name, Json{{"wedge_dev", r.worst}, {"pairing_dev", pairing_dev}});
  r.detail = "wedge-back dev " + fmt(r.worst) + ", sign consistency dev " +
             fmt(pairing_dev);
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig& cfg) {
  return {check_coefficient_recovery(cfg), check_cauchy_decomposition(cfg),
          check_coordinate_identities(cfg), check_maximum_principle(cfg),
          check_extension_recovery(cfg),   check_polar_variant(cfg),
          check_normal_families(cfg),      check_zero_counting(cfg),
          check_hyperbolic_metric(cfg),    check_gauge_invariance(cfg),
          check_poincare_residue(cfg)};
}

}  // namespace anndiff
