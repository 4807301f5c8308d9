// Python bindings for the annulus-differential toolkit. The surface mirrors
// the CLI: decomposition, family extension, zero counting, collar metrics,
// and the seeded verification suite, plus the fiber geometry primitives.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>

#include "anndiff/collar.hpp"
#include "anndiff/divisor.hpp"
#include "anndiff/serialize.hpp"
#include "anndiff/sheaf_iso.hpp"
#include "anndiff/verify.hpp"

namespace py = pybind11;
using namespace anndiff;

PYBIND11_MODULE(_core, m) {
  m.doc() = "holomorphic k-differentials on annuli degenerating to a node";
  m.attr("__version__") = "0.1.0";

  // Base classes first: translators run newest-first, so derived exceptions
  // (contour_error) land on the most specific registered ancestor.
  py::register_exception<io_error>(m, "IoError", PyExc_ValueError);
  py::register_exception<degenerate_divisor_error>(m, "DegenerateDivisorError",
                                                   PyExc_RuntimeError);
  py::register_exception<precondition_error>(m, "PreconditionError",
                                             PyExc_ValueError);

  py::enum_<Branch>(m, "Branch").value("z", Branch::z).value("w", Branch::w);

  py::class_<LaurentSeries>(m, "LaurentSeries")
      .def(py::init<>())
      .def(py::init<int, std::vector<Complex>>(), py::arg("n_min"),
           py::arg("coeffs"))
      .def_static("monomial", &LaurentSeries::monomial, py::arg("n"),
                  py::arg("c"))
      .def_static("from_map", &LaurentSeries::from_map, py::arg("coeffs"))
      .def("is_zero", &LaurentSeries::is_zero)
      .def("n_min", &LaurentSeries::n_min)
      .def("n_max", &LaurentSeries::n_max)
      .def("coeff", &LaurentSeries::coeff, py::arg("n"))
      .def("max_abs_coeff", &LaurentSeries::max_abs_coeff)
      .def("eval", &LaurentSeries::eval, py::arg("p"))
      .def("as_map", &LaurentSeries::as_map)
      .def("__add__", &LaurentSeries::operator+)
      .def("__eq__",
           [](const LaurentSeries& a, const LaurentSeries& b) { return a == b; });

  py::class_<PowerSeries>(m, "PowerSeries")
      .def(py::init<>())
      .def(py::init<std::vector<Complex>>(), py::arg("coeffs"))
      .def("is_zero", &PowerSeries::is_zero)
      .def("degree", &PowerSeries::degree)
      .def("coeff", &PowerSeries::coeff, py::arg("i"))
      .def("at_zero", &PowerSeries::at_zero)
      .def("dense", &PowerSeries::dense)
      .def("eval", &PowerSeries::eval, py::arg("x"));

  py::class_<CircleSamples>(m, "CircleSamples")
      .def(py::init<>())
      .def_readwrite("radius", &CircleSamples::radius)
      .def_readwrite("values", &CircleSamples::values)
      .def("count", &CircleSamples::count);
  m.def("sample_circle",
        py::overload_cast<const LaurentSeries&, double, int>(&sample_circle),
        py::arg("s"), py::arg("radius"), py::arg("count"));
  m.def("sample_circle",
        py::overload_cast<const std::function<Complex(Complex)>&, double, int>(
            &sample_circle),
        py::arg("f"), py::arg("radius"), py::arg("count"));
  m.def("coefficients_from_samples", &coefficients_from_samples, py::arg("cs"),
        py::arg("n_min"), py::arg("n_max"));

  py::class_<Decomposition>(m, "Decomposition")
      .def_readwrite("plus", &Decomposition::plus)
      .def_readwrite("f0", &Decomposition::f0)
      .def_readwrite("minus", &Decomposition::minus);
  m.def("decompose", &decompose, py::arg("s"));
  m.def("residue_f0", &residue_f0, py::arg("s"));

  py::class_<NodalFamilySpec>(m, "NodalFamilySpec")
      .def(py::init<>())
      .def(py::init([](double c, double c_prime) {
             return NodalFamilySpec{c, c_prime};
           }),
           py::arg("c") = 1.0, py::arg("c_prime") = 1.0)
      .def_readwrite("c", &NodalFamilySpec::c)
      .def_readwrite("c_prime", &NodalFamilySpec::c_prime)
      .def("base_radius", &NodalFamilySpec::base_radius)
      .def("validate", &NodalFamilySpec::validate);

  py::class_<AnnulusSpec>(m, "AnnulusSpec")
      .def(py::init([](double r_inner, double r_outer) {
             return AnnulusSpec{r_inner, r_outer};
           }),
           py::arg("r_inner") = 0.0, py::arg("r_outer") = 1.0)
      .def_readwrite("r_inner", &AnnulusSpec::r_inner)
      .def_readwrite("r_outer", &AnnulusSpec::r_outer)
      .def("contains", &AnnulusSpec::contains, py::arg("r"))
      .def("validate", &AnnulusSpec::validate);
  m.def("annulus_module", &annulus_module, py::arg("a"));
  m.def("fiber_annulus", &fiber_annulus, py::arg("fam"), py::arg("t"));

  py::class_<Point>(m, "Point")
      .def(py::init([](Complex z, Complex w) { return Point{z, w}; }),
           py::arg("z"), py::arg("w"))
      .def_readwrite("z", &Point::z)
      .def_readwrite("w", &Point::w);
  m.def("embed", &embed, py::arg("zeta"), py::arg("t"));

  py::class_<CotangentElement>(m, "CotangentElement")
      .def_readwrite("a", &CotangentElement::a)
      .def_readwrite("b", &CotangentElement::b)
      .def_readwrite("at", &CotangentElement::at);
  py::class_<TangentElement>(m, "TangentElement")
      .def_readwrite("p", &TangentElement::p)
      .def_readwrite("q", &TangentElement::q)
      .def_readwrite("at", &TangentElement::at);
  m.def("alpha_at", &alpha_at, py::arg("pt"));
  m.def("dpi_at", &dpi_at, py::arg("pt"));
  m.def("v_at", &v_at, py::arg("pt"));
  m.def("embed_push", &embed_push, py::arg("zeta"), py::arg("t"),
        py::arg("coeff") = Complex(1.0));
  m.def("pair",
        py::overload_cast<const CotangentElement&, const TangentElement&>(&pair),
        py::arg("form"), py::arg("vec"));
  m.def("wedge", &wedge, py::arg("u"), py::arg("v"));

  py::class_<AnnulusKDifferential>(m, "AnnulusKDifferential")
      .def(py::init([](int k, const LaurentSeries& f, const AnnulusSpec& a) {
             return AnnulusKDifferential{k, f, a};
           }),
           py::arg("k"), py::arg("f"), py::arg("annulus"))
      .def_readwrite("k", &AnnulusKDifferential::k)
      .def_readwrite("f", &AnnulusKDifferential::f)
      .def_readwrite("annulus", &AnnulusKDifferential::annulus)
      .def("validate", &AnnulusKDifferential::validate);

  py::enum_<Band>(m, "Band").value("inner", Band::inner).value("outer", Band::outer);
  py::class_<BandGrid>(m, "BandGrid")
      .def(py::init<>())
      .def_readwrite("circles", &BandGrid::circles)
      .def_readwrite("points", &BandGrid::points);
  py::class_<BandSpec>(m, "BandSpec")
      .def(py::init([](double rho1, double rho2, Complex t, double bound,
                       double c, double c_prime) {
             BandSpec b;
             b.rho1 = rho1;
             b.rho2 = rho2;
             b.t = t;
             b.bound = bound;
             b.c = c;
             b.c_prime = c_prime;
             return b;
           }),
           py::arg("rho1"), py::arg("rho2"), py::arg("t"),
           py::arg("bound") = 1.0, py::arg("c") = 1.0, py::arg("c_prime") = 1.0)
      .def_readwrite("rho1", &BandSpec::rho1)
      .def_readwrite("rho2", &BandSpec::rho2)
      .def_readwrite("bound", &BandSpec::bound)
      .def_readwrite("c", &BandSpec::c)
      .def_readwrite("c_prime", &BandSpec::c_prime)
      .def_readwrite("t", &BandSpec::t)
      .def("outer_band", &BandSpec::outer_band)
      .def("inner_band", &BandSpec::inner_band)
      .def("validate", &BandSpec::validate);
  m.def("band_sup", &band_sup, py::arg("d"), py::arg("b"), py::arg("which"),
        py::arg("grid") = BandGrid{});
  m.def("is_band_bounded", &is_band_bounded, py::arg("d"), py::arg("b"),
        py::arg("grid") = BandGrid{});
  py::class_<InteriorSupReport>(m, "InteriorSupReport")
      .def_readonly("interior_sup", &InteriorSupReport::interior_sup)
      .def_readonly("band_max", &InteriorSupReport::band_max);
  m.def("interior_sup_check", &interior_sup_check, py::arg("d"), py::arg("b"),
        py::arg("grid") = BandGrid{}, py::arg("interior_circles") = 16);

  py::class_<TwoVarSeries>(m, "TwoVarSeries")
      .def(py::init<>())
      .def(py::init<int, int, int>(), py::arg("m_deg"), py::arg("n_deg"),
           py::arg("pole_order") = 0)
      .def("m_deg", &TwoVarSeries::m_deg)
      .def("n_deg", &TwoVarSeries::n_deg)
      .def("pole_order", &TwoVarSeries::pole_order)
      .def("coeff", &TwoVarSeries::coeff, py::arg("m"), py::arg("n"))
      .def("set_coeff", &TwoVarSeries::set_coeff, py::arg("m"), py::arg("n"),
           py::arg("c"))
      .def("with_pole_order", &TwoVarSeries::with_pole_order,
           py::arg("pole_order"))
      .def("max_abs_coeff", &TwoVarSeries::max_abs_coeff)
      .def("eval", &TwoVarSeries::eval, py::arg("z"), py::arg("w"))
      .def("eval_regular", &TwoVarSeries::eval_regular, py::arg("z"), py::arg("w"))
      .def("eval_fiber", &TwoVarSeries::eval_fiber, py::arg("zeta"), py::arg("t"))
      .def("eval_regular_fiber", &TwoVarSeries::eval_regular_fiber,
           py::arg("zeta"), py::arg("t"))
      .def("__eq__",
           [](const TwoVarSeries& a, const TwoVarSeries& b) { return a == b; });

  py::class_<FamilySamples>(m, "FamilySamples")
      .def(py::init<>())
      .def_readwrite("k", &FamilySamples::k)
      .def_readwrite("r_zeta", &FamilySamples::r_zeta)
      .def_readwrite("rho_t", &FamilySamples::rho_t)
      .def_readwrite("c", &FamilySamples::c)
      .def_readwrite("c_prime", &FamilySamples::c_prime)
      .def_readwrite("t_values", &FamilySamples::t_values)
      .def_readwrite("values", &FamilySamples::values)
      .def("t_count", &FamilySamples::t_count)
      .def("zeta_count", &FamilySamples::zeta_count)
      .def("uniform_t", &FamilySamples::uniform_t)
      .def("validate", &FamilySamples::validate);
  m.def("sample_family",
        py::overload_cast<const TwoVarSeries&, int, double, double, int, int,
                          double, double>(&sample_family),
        py::arg("truth"), py::arg("k"), py::arg("r_zeta"), py::arg("rho_t"),
        py::arg("t_count"), py::arg("zeta_count"), py::arg("c") = 1.0,
        py::arg("c_prime") = 1.0);
  m.def("sample_family",
        py::overload_cast<const FiberFunction&, int, double, double, int, int,
                          double, double>(&sample_family),
        py::arg("f"), py::arg("k"), py::arg("r_zeta"), py::arg("rho_t"),
        py::arg("t_count"), py::arg("zeta_count"), py::arg("c") = 1.0,
        py::arg("c_prime") = 1.0);
  m.def("extend", &extend, py::arg("fs"), py::arg("m_deg"), py::arg("n_deg"));
  m.def("extend_with_pole", &extend_with_pole, py::arg("fs"),
        py::arg("pole_order"), py::arg("m_deg"), py::arg("n_deg"));
  m.def("reconstruction_error", &reconstruction_error, py::arg("fs"),
        py::arg("s"));
  m.def("nodal_restriction", &nodal_restriction, py::arg("s"), py::arg("branch"),
        py::arg("k"));

  py::class_<NodalKDifferential>(m, "NodalKDifferential")
      .def_readwrite("k", &NodalKDifferential::k)
      .def_readwrite("fz", &NodalKDifferential::fz)
      .def_readwrite("gw", &NodalKDifferential::gw);
  m.def("nodal_differential", &nodal_differential, py::arg("s"), py::arg("k"));
  m.def("nodal_residue_check", &nodal_residue_check, py::arg("d"),
        py::arg("tol") = 1e-12);

  py::class_<NormalFamiliesReport::Entry>(m, "NormalFamiliesEntry")
      .def_readonly("t", &NormalFamiliesReport::Entry::t)
      .def_readonly("sup_z", &NormalFamiliesReport::Entry::sup_z)
      .def_readonly("sup_w", &NormalFamiliesReport::Entry::sup_w);
  py::class_<NormalFamiliesReport>(m, "NormalFamiliesReport")
      .def_readonly("compacta", &NormalFamiliesReport::compacta)
      .def_readonly("order_z", &NormalFamiliesReport::order_z)
      .def_readonly("order_w", &NormalFamiliesReport::order_w)
      .def_readonly("decreasing", &NormalFamiliesReport::decreasing)
      .def_readonly("exact", &NormalFamiliesReport::exact);
  m.def("verify_normal_families", &verify_normal_families, py::arg("truth"),
        py::arg("t_sequence"), py::arg("compacta"), py::arg("circles") = 9,
        py::arg("points") = 128);

  py::class_<WindingOptions>(m, "WindingOptions")
      .def(py::init<>())
      .def_readwrite("initial_samples", &WindingOptions::initial_samples)
      .def_readwrite("max_samples", &WindingOptions::max_samples)
      .def_readwrite("min_magnitude", &WindingOptions::min_magnitude);
  py::class_<WindingReport>(m, "WindingReport")
      .def_readonly("radius", &WindingReport::radius)
      .def_readonly("winding", &WindingReport::winding)
      .def_readonly("raw_phase_sum", &WindingReport::raw_phase_sum)
      .def_readonly("samples_used", &WindingReport::samples_used);
  m.def("winding_count", &winding_count, py::arg("g"), py::arg("radius"),
        py::arg("opts") = WindingOptions{});
  m.def("fiber_zero_count", &fiber_zero_count, py::arg("s"), py::arg("t"),
        py::arg("r_in"), py::arg("r_out"), py::arg("opts") = WindingOptions{});
  py::class_<BranchOrderReport>(m, "BranchOrderReport")
      .def_readonly("order_at_origin", &BranchOrderReport::order_at_origin)
      .def_readonly("zeros_in_punctured_disc",
                    &BranchOrderReport::zeros_in_punctured_disc);
  m.def("nodal_branch_order", &nodal_branch_order, py::arg("s"),
        py::arg("branch"), py::arg("radius"), py::arg("opts") = WindingOptions{});
  py::class_<ConstancyReport>(m, "ConstancyReport")
      .def_readonly("t_values", &ConstancyReport::t_values)
      .def_readonly("fiber_counts", &ConstancyReport::fiber_counts)
      .def_readonly("degenerate", &ConstancyReport::degenerate)
      .def_readonly("z_branch", &ConstancyReport::z_branch)
      .def_readonly("w_branch", &ConstancyReport::w_branch)
      .def_readonly("nodal_total", &ConstancyReport::nodal_total)
      .def_readonly("counts_constant", &ConstancyReport::counts_constant)
      .def_readonly("matches_nodal", &ConstancyReport::matches_nodal)
      .def("passed", &ConstancyReport::pass);
  m.def("constancy_check", &constancy_check, py::arg("s"), py::arg("t_list"),
        py::arg("rho"), py::arg("c") = 1.0, py::arg("c_prime") = 1.0,
        py::arg("opts") = WindingOptions{});

  py::class_<CollarSpec>(m, "CollarSpec")
      .def(py::init([](Complex t, double rho) { return CollarSpec{t, rho}; }),
           py::arg("t"), py::arg("rho") = 0.5)
      .def_readwrite("t", &CollarSpec::t)
      .def_readwrite("rho", &CollarSpec::rho)
      .def("validate", &CollarSpec::validate);
  m.def("theta", &theta, py::arg("z_mag"), py::arg("t"));
  m.def("hyperbolic_density", &hyperbolic_density, py::arg("zeta"), py::arg("t"));
  m.def("theta_csc_theta_sq", &theta_csc_theta_sq, py::arg("th"));
  m.def("factor_series_coefficients", &factor_series_coefficients,
        py::arg("terms"));
  m.def("factor_series", &factor_series, py::arg("th"), py::arg("terms"));
  m.def("flat_to_hyperbolic_ratio", &flat_to_hyperbolic_ratio,
        py::arg("zeta_mag"), py::arg("t"));
  py::class_<RatioBounds>(m, "RatioBounds")
      .def_readonly("lo", &RatioBounds::lo)
      .def_readonly("hi", &RatioBounds::hi);
  m.def("collar_ratio_bounds", &collar_ratio_bounds, py::arg("t"), py::arg("rho"),
        py::arg("grid_circles") = 129);
  py::class_<CollarBandReport>(m, "CollarBandReport")
      .def_readonly("collar_sup", &CollarBandReport::collar_sup)
      .def_readonly("flat_sup", &CollarBandReport::flat_sup)
      .def_readonly("ratio", &CollarBandReport::ratio)
      .def_readonly("k", &CollarBandReport::k);
  m.def("collar_band_equivalence", &collar_band_equivalence, py::arg("d"),
        py::arg("collar"), py::arg("circles") = 65, py::arg("points") = 256);

  py::class_<RelativeSection>(m, "RelativeSection")
      .def(py::init([](int k, const TwoVarSeries& f) {
             return RelativeSection{k, f};
           }),
           py::arg("k"), py::arg("f"))
      .def_readwrite("k", &RelativeSection::k)
      .def_readwrite("f", &RelativeSection::f);
  py::class_<CanonicalForm>(m, "CanonicalForm")
      .def(py::init([](int k, const TwoVarSeries& F) {
             return CanonicalForm{k, F};
           }),
           py::arg("k"), py::arg("F"))
      .def_readwrite("k", &CanonicalForm::k)
      .def_readwrite("F", &CanonicalForm::F);
  m.def("psi_to_canonical", &psi_to_Psi, py::arg("psi"));
  m.def("canonical_to_psi", &Psi_to_psi, py::arg("canonical"));
  m.def("canonical_with_tau", &canonical_with_tau, py::arg("psi"), py::arg("h"));
  py::class_<GaugeFunction>(m, "GaugeFunction")
      .def(py::init<>())
      .def_readwrite("log_g", &GaugeFunction::log_g)
      .def_readwrite("tau_scale", &GaugeFunction::tau_scale)
      .def("g", &GaugeFunction::g, py::arg("pt"))
      .def("h", &GaugeFunction::h, py::arg("t"));
  m.def("canonical_coefficient_with_gauge", &canonical_coefficient_with_gauge,
        py::arg("psi"), py::arg("gauge"), py::arg("pt"));
  m.def(
      "gauge_invariance_check",
      [](const RelativeSection& psi, const GaugeFunction& gauge,
         const std::vector<Point>& points) {
        return gauge_invariance_check(psi, gauge,
                                      std::span<const Point>(points));
      },
      py::arg("psi"), py::arg("gauge"), py::arg("points"));
  m.def("poincare_residue", &poincare_residue, py::arg("canonical"));
  m.def(
      "residue_wedge_deviation",
      [](const CanonicalForm& Phi, const RelativeSection& phi,
         const std::vector<Point>& points) {
        return residue_wedge_deviation(Phi, phi, std::span<const Point>(points));
      },
      py::arg("canonical"), py::arg("phi"), py::arg("points"));

  // JSON interop with the CLI pipeline.
  m.def("dumps_two_var",
        [](const TwoVarSeries& s) { return dump_json(two_var_to_json(s)); },
        py::arg("s"));
  m.def("loads_two_var",
        [](const std::string& text) { return two_var_from_json(parse_json(text)); },
        py::arg("text"));
  m.def("dumps_family_samples",
        [](const FamilySamples& fs) {
          return dump_json(family_samples_to_json(fs));
        },
        py::arg("fs"));
  m.def("loads_family_samples",
        [](const std::string& text) {
          return family_samples_from_json(parse_json(text));
        },
        py::arg("text"));

  py::class_<VerifyConfig>(m, "VerifyConfig")
      .def(py::init<>())
      .def_readwrite("seed", &VerifyConfig::seed)
      .def_readwrite("tol_scale", &VerifyConfig::tol_scale);
  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::pass)
      .def_readonly("worst", &CheckResult::worst)
      .def_readonly("gate", &CheckResult::gate)
      .def_readonly("detail", &CheckResult::detail)
      .def_readonly("counterexample_json", &CheckResult::counterexample_json);
  m.def("run_verification", &run_verification, py::arg("cfg") = VerifyConfig{});
}
