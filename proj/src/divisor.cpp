#include "anndiff/divisor.hpp"

#include <cmath>
#include <numbers>

#include "kahan_sum.hpp"

namespace anndiff {

WindingReport winding_count(const std::function<Complex(Complex)>& g, double radius,
                            const WindingOptions& opts) {
  if (!(radius > 0.0)) throw precondition_error("winding radius must be positive");
  if (opts.initial_samples < 4) throw precondition_error("too few winding samples");
  for (int N = opts.initial_samples;; N *= 2) {
    std::vector<Complex> v(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) {
      const double angle = 2.0 * std::numbers::pi * j / N;
      v[static_cast<size_t>(j)] = g(std::polar(radius, angle));
      const double mag = std::abs(v[static_cast<size_t>(j)]);
      if (mag <= opts.min_magnitude)
        throw contour_error("contour passes within min magnitude of a zero", angle, mag);
    }
    bool resolved = true;
    double bad_angle = 0.0;
    detail::NeumaierReal total;
    for (int j = 0; j < N; ++j) {
      const double step =
          std::arg(v[static_cast<size_t>((j + 1) % N)] / v[static_cast<size_t>(j)]);
      if (std::abs(step) > std::numbers::pi / 2.0) {
        resolved = false;
        bad_angle = 2.0 * std::numbers::pi * j / N;
        break;
      }
      total.add(step);
    }
    if (resolved) {
      WindingReport rep;
      rep.radius = radius;
      rep.raw_phase_sum = total.value();
      rep.winding = std::lround(rep.raw_phase_sum / (2.0 * std::numbers::pi));
      rep.samples_used = N;
      if (std::abs(rep.raw_phase_sum / (2.0 * std::numbers::pi) -
                   static_cast<double>(rep.winding)) > 1e-6)
        throw contour_error("phase sum failed to close to an integer", 0.0,
                            rep.raw_phase_sum);
      return rep;
    }
    if (2 * N > opts.max_samples)
      throw contour_error("phase steps above pi/2 at maximal refinement", bad_angle,
                          0.0);
  }
}

int fiber_zero_count(const TwoVarSeries& s, Complex t, double r_in, double r_out,
                     const WindingOptions& opts) {
  if (t == Complex(0.0)) throw precondition_error("fiber count needs t != 0");
  if (!(0.0 < r_in) || !(r_in < r_out))
    throw precondition_error("need 0 < r_in < r_out");
  const auto g = [&s, t](Complex zeta) { return s.eval_regular_fiber(zeta, t); };
  const WindingReport outer = winding_count(g, r_out, opts);
  const WindingReport inner = winding_count(g, r_in, opts);
  return static_cast<int>(outer.winding - inner.winding);
}

namespace {

PowerSeries branch_coefficients(const TwoVarSeries& s, Branch branch) {
  // Restriction threshold guards recovered series whose structural zeros are
  // populated with roundoff.
  const double floor = 1e-10 * std::max(1.0, s.max_abs_coeff());
  std::vector<Complex> c;
  if (branch == Branch::z) {
    c.resize(static_cast<size_t>(s.m_deg() + 1));
    for (int m = 0; m <= s.m_deg(); ++m) c[static_cast<size_t>(m)] = s.coeff(m, 0);
  } else {
    c.resize(static_cast<size_t>(s.n_deg() + 1));
    for (int n = 0; n <= s.n_deg(); ++n) c[static_cast<size_t>(n)] = s.coeff(0, n);
  }
  for (auto& x : c)
    if (std::abs(x) <= floor) x = 0.0;
  return PowerSeries(std::move(c));
}

}  // namespace

BranchOrderReport nodal_branch_order(const TwoVarSeries& s, Branch branch, double radius,
                                     const WindingOptions& opts) {
  if (!(radius > 0.0)) throw precondition_error("radius must be positive");
  const PowerSeries p = branch_coefficients(s, branch);
  if (p.is_zero())
    throw degenerate_divisor_error("branch restriction vanishes identically");
  int order = 0;
  while (p.coeff(order) == Complex(0.0)) ++order;
  const WindingReport w =
      winding_count([&p](Complex x) { return p.eval(x); }, radius, opts);
  return {order, w.winding - order};
}

ConstancyReport constancy_check(const TwoVarSeries& s, const std::vector<Complex>& t_list,
                                double rho, double c, double c_prime,
                                const WindingOptions& opts) {
  if (t_list.empty()) throw precondition_error("empty t list");
  if (!(rho > 0.0) || !(rho < 1.0)) throw precondition_error("need 0 < rho < 1");
  ConstancyReport rep;
  rep.t_values = t_list;
  for (const Complex& t : t_list) {
    const double r_in = std::abs(t) / (c_prime * rho);
    const double r_out = rho * c;
    if (!(r_in < r_out))
      throw precondition_error("counting annulus is empty: |t| too large for rho");
    rep.fiber_counts.push_back(fiber_zero_count(s, t, r_in, r_out, opts));
  }
  rep.counts_constant = true;
  for (int n : rep.fiber_counts)
    if (n != rep.fiber_counts.front()) rep.counts_constant = false;
  try {
    rep.z_branch = nodal_branch_order(s, Branch::z, rho * c, opts);
    rep.w_branch = nodal_branch_order(s, Branch::w, rho * c_prime, opts);
  } catch (const degenerate_divisor_error&) {
    rep.degenerate = true;
    return rep;
  }
  rep.nodal_total =
      static_cast<int>(rep.z_branch->order_at_origin + rep.z_branch->zeros_in_punctured_disc +
                       rep.w_branch->order_at_origin + rep.w_branch->zeros_in_punctured_disc);
  rep.matches_nodal =
      rep.counts_constant && rep.fiber_counts.front() == rep.nodal_total;
  return rep;
}

}  // namespace anndiff
