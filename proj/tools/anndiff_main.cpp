// anndiff: batch front end for the annulus-differential toolkit.
//
// Subcommands: decompose, extend, zeros, collar, verify. Reports are columnar
// text (stdout, or --output FILE with a FILE.json sidecar); `extend` instead
// writes a series JSON that feeds straight into `zeros`.
//
// Exit codes: 0 pass, 1 invariant failure, 2 input error, 3 numerical
// precondition failure, 4 unexpected.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anndiff/collar.hpp"
#include "anndiff/divisor.hpp"
#include "anndiff/serialize.hpp"
#include "anndiff/verify.hpp"

namespace {

using namespace anndiff;

struct Options {
  std::string input;
  std::string output;
  std::string t_list;
  std::uint64_t seed = 42;
  int grid = 0;  // per-command default applied after parse
  double tol = 1.0;
  double rho = 0.0;
  double rho1 = 0.8;
  double rho2 = 0.95;
  int k = 0;  // 0 = take k from the input document
  int m_deg = 6;
  int n_deg = 6;
  int pole = 0;
};

std::string fnum(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string fcx(Complex c) {
  return fnum(c.real()) + (c.imag() < 0 ? " - " : " + ") +
         fnum(std::abs(c.imag())) + "i";
}

std::vector<Complex> parse_t_list(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    try {
      size_t used = 0;
      if (colon == std::string::npos) {
        const double re = std::stod(item, &used);
        if (used != item.size()) throw io_error("trailing characters");
        out.emplace_back(re, 0.0);
      } else {
        const std::string res = item.substr(0, colon), ims = item.substr(colon + 1);
        const double re = std::stod(res, &used);
        if (used != res.size()) throw io_error("trailing characters");
        const double im = std::stod(ims, &used);
        if (used != ims.size()) throw io_error("trailing characters");
        out.emplace_back(re, im);
      }
    } catch (const io_error&) {
      throw io_error("bad --t-list entry '" + item + "' (want re or re:im)");
    } catch (const std::exception&) {
      throw io_error("bad --t-list entry '" + item + "' (want re or re:im)");
    }
  }
  if (out.empty()) throw io_error("--t-list is empty");
  return out;
}

/// Text to stdout, or to `path` with a `path`.json structured sidecar.
void emit_report(const std::string& text, const Json& sidecar,
                 const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw io_error("cannot write " + path);
  f << text;
  if (!f.flush()) throw io_error("cannot write " + path);
  save_json(path + ".json", sidecar);
}

Json laurent_rows_json(const LaurentSeries& s) {
  Json j = Json::array();
  if (s.is_zero()) return j;
  for (int n = s.n_min(); n <= s.n_max(); ++n)
    j.push_back(Json::array({n, s.coeff(n).real(), s.coeff(n).imag()}));
  return j;
}

int cmd_decompose(const Options& opt) {
  if (opt.input.empty()) throw io_error("decompose needs --input");
  const AnnulusKDifferential d = differential_from_json(load_json(opt.input));
  const Decomposition dec = decompose(d.f);
  const int points = opt.grid > 0 ? opt.grid : 512;
  if (!(0.0 < opt.rho1 && opt.rho1 < opt.rho2 && opt.rho2 < 1.0))
    throw precondition_error("need 0 < rho1 < rho2 < 1");

  std::ostringstream os;
  os << "# decompose  k=" << d.k << "  annulus=[" << fnum(d.annulus.r_inner)
     << ", " << fnum(d.annulus.r_outer) << "]\n";
  os << "f0 (residue): " << fcx(dec.f0) << "\n";
  os << "modulus: " << fnum(annulus_module(d.annulus)) << "\n";
  auto series_block = [&os](const char* name, const LaurentSeries& s) {
    os << name << " terms: " << (s.is_zero() ? 0 : s.n_max() - s.n_min() + 1)
       << "\n";
    if (s.is_zero()) return;
    os << "# n  re  im\n";
    for (int n = s.n_min(); n <= s.n_max(); ++n)
      os << n << "  " << fnum(s.coeff(n).real()) << "  "
         << fnum(s.coeff(n).imag()) << "\n";
  };
  series_block("plus", dec.plus);
  series_block("minus", dec.minus);

  Json sidecar{{"kind", "decompose_report"},
               {"k", d.k},
               {"annulus", Json::array({d.annulus.r_inner, d.annulus.r_outer})},
               {"f0", complex_to_json(dec.f0)},
               {"plus", laurent_rows_json(dec.plus)},
               {"minus", laurent_rows_json(dec.minus)},
               {"rho1", opt.rho1},
               {"rho2", opt.rho2}};

  const double ro = d.annulus.r_outer, ri = d.annulus.r_inner;
  const double outer_sup =
      detail::annulus_sup(d.f, opt.rho1 * ro, opt.rho2 * ro, 8, points);
  os << "outer band [" << fnum(opt.rho1 * ro) << ", " << fnum(opt.rho2 * ro)
     << "]: sup|f| = " << fnum(outer_sup) << "\n";
  sidecar["band_sups"]["outer"] = outer_sup;
  if (ri > 0.0) {
    const double inner_sup =
        detail::annulus_sup(d.f, ri / opt.rho2, ri / opt.rho1, 8, points);
    os << "inner band [" << fnum(ri / opt.rho2) << ", " << fnum(ri / opt.rho1)
       << "]: sup|f| = " << fnum(inner_sup) << "\n";
    sidecar["band_sups"]["inner"] = inner_sup;
  } else {
    os << "inner band: none (punctured disc)\n";
    sidecar["band_sups"]["inner"] = nullptr;
  }

  emit_report(os.str(), sidecar, opt.output);
  return 0;
}

int cmd_extend(const Options& opt) {
  if (opt.input.empty()) throw io_error("extend needs --input");
  if (opt.output.empty()) throw io_error("extend needs --output for the series JSON");
  const FamilySamples fs = family_samples_from_json(load_json(opt.input));
  const TwoVarSeries rec = extend_with_pole(fs, opt.pole, opt.m_deg, opt.n_deg);
  const double recon = reconstruction_error(fs, rec);
  const int k = opt.k > 0 ? opt.k : fs.k;

  std::ostringstream os;
  os << "# extend  bidegree=(" << opt.m_deg << ", " << opt.n_deg
     << ")  pole_order=" << rec.pole_order() << "  k=" << k << "\n";
  os << "samples: " << fs.t_count() << " fibers x " << fs.zeta_count()
     << " points (r_zeta=" << fnum(fs.r_zeta) << ", rho_t=" << fnum(fs.rho_t)
     << ")\n";
  os << "reconstruction error: " << fnum(recon) << "\n";

  Json report{{"reconstruction_error", recon}, {"k", k}};
  const PowerSeries gw = nodal_restriction(rec, Branch::w, k);
  Json gw_rows = Json::array();
  os << "# w-branch restriction: n  re  im\n";
  for (int n = 0; n <= gw.degree(); ++n) {
    os << n << "  " << fnum(gw.coeff(n).real()) << "  "
       << fnum(gw.coeff(n).imag()) << "\n";
    gw_rows.push_back(Json::array({n, gw.coeff(n).real(), gw.coeff(n).imag()}));
  }
  report["gw"] = gw_rows;
  if (rec.pole_order() == 0) {
    const NodalKDifferential nd = nodal_differential(rec, k);
    Json fz_rows = Json::array();
    os << "# z-branch restriction: m  re  im\n";
    for (int m = 0; m <= nd.fz.degree(); ++m) {
      os << m << "  " << fnum(nd.fz.coeff(m).real()) << "  "
         << fnum(nd.fz.coeff(m).imag()) << "\n";
      fz_rows.push_back(
          Json::array({m, nd.fz.coeff(m).real(), nd.fz.coeff(m).imag()}));
    }
    const bool match = nodal_residue_check(nd, 1e-12 * opt.tol);
    os << "residue match fz(0) = (-1)^k gw(0): " << (match ? "yes" : "NO")
       << "\n";
    report["fz"] = fz_rows;
    report["residue_match"] = match;
    if (!match) {
      std::cout << os.str();
      return 1;
    }
  } else {
    os << "z-branch restriction: skipped (pole at the inner boundary)\n";
  }

  Json doc = two_var_to_json(rec);
  doc["report"] = report;
  save_json(opt.output, doc);
  std::cout << os.str();
  return 0;
}

int cmd_zeros(const Options& opt) {
  if (opt.input.empty()) throw io_error("zeros needs --input");
  const TwoVarSeries s = two_var_from_json(load_json(opt.input));
  const std::vector<Complex> ts =
      opt.t_list.empty() ? std::vector<Complex>{1e-2, 1e-3, 1e-4}
                         : parse_t_list(opt.t_list);
  const double rho = opt.rho > 0.0 ? opt.rho : 0.9;
  const ConstancyReport rep = constancy_check(s, ts, rho);

  std::ostringstream os;
  os << "# zeros  rho=" << fnum(rho) << "\n";
  os << "# t_re  t_im  count\n";
  Json rows = Json::array();
  for (size_t i = 0; i < rep.t_values.size(); ++i) {
    os << fnum(rep.t_values[i].real()) << "  " << fnum(rep.t_values[i].imag())
       << "  " << rep.fiber_counts[i] << "\n";
    rows.push_back(Json::array({rep.t_values[i].real(), rep.t_values[i].imag(),
                                rep.fiber_counts[i]}));
  }
  Json sidecar{{"kind", "zeros_report"}, {"rho", rho}, {"fibers", rows},
               {"degenerate", rep.degenerate}};
  if (rep.degenerate) {
    os << "a branch restriction vanishes identically: no constancy verdict\n";
    emit_report(os.str(), sidecar, opt.output);
    return 0;
  }
  os << "z branch: order " << rep.z_branch->order_at_origin << " at the node, "
     << rep.z_branch->zeros_in_punctured_disc << " zeros in the punctured disc\n";
  os << "w branch: order " << rep.w_branch->order_at_origin << " at the node, "
     << rep.w_branch->zeros_in_punctured_disc << " zeros in the punctured disc\n";
  os << "nodal total: " << rep.nodal_total << "\n";
  os << "counts constant: " << (rep.counts_constant ? "yes" : "NO") << "\n";
  os << "matches nodal count: " << (rep.matches_nodal ? "yes" : "NO") << "\n";
  sidecar["z_branch"] = Json{{"order", rep.z_branch->order_at_origin},
                             {"punctured", rep.z_branch->zeros_in_punctured_disc}};
  sidecar["w_branch"] = Json{{"order", rep.w_branch->order_at_origin},
                             {"punctured", rep.w_branch->zeros_in_punctured_disc}};
  sidecar["nodal_total"] = rep.nodal_total;
  sidecar["counts_constant"] = rep.counts_constant;
  sidecar["matches_nodal"] = rep.matches_nodal;
  sidecar["pass"] = rep.pass();
  emit_report(os.str(), sidecar, opt.output);
  return rep.pass() ? 0 : 1;
}

int cmd_collar(const Options& opt) {
  const std::vector<Complex> ts =
      opt.t_list.empty() ? std::vector<Complex>{1e-2, 1e-4, 1e-6, 1e-8}
                         : parse_t_list(opt.t_list);
  const double rho = opt.rho > 0.0 ? opt.rho : 0.5;
  const int grid = opt.grid > 0 ? opt.grid : 33;

  std::ostringstream os;
  os << "# collar  rho=" << fnum(rho) << "  grid=" << grid << "\n";
  Json sweeps = Json::array();
  for (const Complex& t : ts) {
    CollarSpec spec{t, rho};
    spec.validate();
    const RatioBounds rb = collar_ratio_bounds(t, rho, grid);
    os << "# t = " << fcx(t) << "  ratio in [" << fnum(rb.lo) << ", "
       << fnum(rb.hi) << "]\n";
    os << "# r  theta  density  flat_to_hyperbolic\n";
    Json rows = Json::array();
    const double at = std::abs(t);
    for (double r : detail::geometric_radii(at / rho, rho, grid)) {
      const double th = theta(r, t);
      const double lam = hyperbolic_density(Complex(r, 0.0), t);
      const double ratio = flat_to_hyperbolic_ratio(r, t);
      os << fnum(r) << "  " << fnum(th) << "  " << fnum(lam) << "  "
         << fnum(ratio) << "\n";
      rows.push_back(Json::array({r, th, lam, ratio}));
    }
    sweeps.push_back(Json{{"t", complex_to_json(t)},
                          {"lo", rb.lo},
                          {"hi", rb.hi},
                          {"rows", rows}});
  }
  Json sidecar{{"kind", "collar_report"}, {"rho", rho}, {"grid", grid},
               {"sweeps", sweeps}};
  emit_report(os.str(), sidecar, opt.output);
  return 0;
}

int cmd_verify(const Options& opt) {
  VerifyConfig cfg;
  cfg.seed = opt.seed;
  cfg.tol_scale = opt.tol;
  const std::vector<CheckResult> results = run_verification(cfg);

  std::ostringstream os;
  os << "# verify  seed=" << cfg.seed << "  tol_scale=" << fnum(cfg.tol_scale)
     << "\n";
  Json checks = Json::array();
  bool all_pass = true;
  std::string first_counterexample;
  for (const CheckResult& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  worst="
       << fnum(r.worst) << "  gate=" << fnum(r.gate) << "  " << r.detail
       << "\n";
    Json c{{"name", r.name}, {"pass", r.pass}, {"worst", r.worst},
           {"gate", r.gate}, {"detail", r.detail}};
    if (!r.pass) {
      all_pass = false;
      if (!r.counterexample_json.empty()) {
        c["counterexample"] = parse_json(r.counterexample_json);
        if (first_counterexample.empty())
          first_counterexample = r.counterexample_json;
      }
    }
    checks.push_back(c);
  }
  os << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
  if (!first_counterexample.empty())
    os << "first counterexample: " << first_counterexample << "\n";
  Json sidecar{{"kind", "verify_report"}, {"seed", cfg.seed},
               {"tol_scale", cfg.tol_scale}, {"all_pass", all_pass},
               {"checks", checks}};
  emit_report(os.str(), sidecar, opt.output);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holomorphic k-differentials on annuli degenerating to a node: "
               "Cauchy decomposition, family extension, zero counts, collar "
               "metrics, and a property-check suite"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub, bool with_output = true) {
    sub->add_option("--input", opt.input, "input JSON path");
    if (with_output)
      sub->add_option("--output", opt.output,
                      "write text here plus a .json sidecar (default stdout)");
  };

  CLI::App* dec = app.add_subcommand(
      "decompose", "split a differential into principal parts and a residue");
  add_common(dec);
  dec->add_option("--grid", opt.grid, "points per sampled circle (default 512)");
  dec->add_option("--rho1", opt.rho1, "inner band fraction (default 0.8)");
  dec->add_option("--rho2", opt.rho2, "outer band fraction (default 0.95)");

  CLI::App* ext = app.add_subcommand(
      "extend", "recover a two-variable series from fiber samples");
  ext->add_option("--input", opt.input, "family samples JSON");
  ext->add_option("--output", opt.output, "series JSON (required; feeds `zeros`)");
  ext->add_option("--mdeg", opt.m_deg, "z-degree bound (default 6)");
  ext->add_option("--ndeg", opt.n_deg, "t-degree bound (default 6)");
  ext->add_option("--pole", opt.pole, "inner-boundary pole order (default 0)");
  ext->add_option("--k", opt.k, "differential power for the restriction report");
  ext->add_option("--tol", opt.tol, "residue gate multiplier (default 1)");

  CLI::App* zer = app.add_subcommand(
      "zeros", "fiberwise zero counts against the central-fiber divisor");
  add_common(zer);
  zer->add_option("--t-list", opt.t_list,
                  "comma-separated fibers, re or re:im (default 1e-2,1e-3,1e-4)");
  zer->add_option("--rho", opt.rho, "counting annulus fraction (default 0.9)");

  CLI::App* col = app.add_subcommand(
      "collar", "hyperbolic density and flat-comparison tables on collars");
  add_common(col);
  col->add_option("--t-list", opt.t_list,
                  "comma-separated fibers (default 1e-2,1e-4,1e-6,1e-8)");
  col->add_option("--rho", opt.rho, "collar edge fraction (default 0.5)");
  col->add_option("--grid", opt.grid, "circles per sweep (default 33)");

  CLI::App* ver = app.add_subcommand(
      "verify", "run the seeded property-check suite");
  add_common(ver);
  ver->add_option("--seed", opt.seed, "suite seed (default 42)");
  ver->add_option("--tol", opt.tol, "tolerance gate multiplier (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dec->parsed()) return cmd_decompose(opt);
    if (ext->parsed()) return cmd_extend(opt);
    if (zer->parsed()) return cmd_zeros(opt);
    if (col->parsed()) return cmd_collar(opt);
    if (ver->parsed()) return cmd_verify(opt);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const degenerate_divisor_error& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical precondition: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "numerical precondition: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 4;
  }
}
