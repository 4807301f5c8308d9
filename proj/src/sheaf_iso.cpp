#include "anndiff/sheaf_iso.hpp"

#include <cmath>

namespace anndiff {

CanonicalForm psi_to_Psi(const RelativeSection& psi) {
  if (psi.k < 1) throw precondition_error("k must be >= 1");
  return {psi.k, psi.f};
}

RelativeSection Psi_to_psi(const CanonicalForm& Psi) {
  if (Psi.k < 1) throw precondition_error("k must be >= 1");
  return {Psi.k, Psi.F};
}

CanonicalForm canonical_with_tau(const RelativeSection& psi, Complex h) {
  if (h == Complex(0.0)) throw precondition_error("tau scale must not vanish");
  CanonicalForm out{psi.k, TwoVarSeries(psi.f.m_deg(), psi.f.n_deg(),
                                        psi.f.pole_order())};
  Complex hk = 1.0;
  for (int i = 0; i < psi.k; ++i) hk *= h;
  for (int m = 0; m <= psi.f.m_deg(); ++m)
    for (int n = 0; n <= psi.f.n_deg(); ++n)
      out.F.set_coeff(m, n, hk * psi.f.coeff(m, n));
  return out;
}

Complex GaugeFunction::g(const Point& pt) const {
  return std::exp(log_g.eval(pt.z, pt.w));
}

Complex GaugeFunction::h(Complex t) const { return tau_scale ? tau_scale(t) : 1.0; }

namespace {

Complex pow_k(Complex base, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

void check_gauge_value(Complex g) {
  if (std::abs(g) < 1e-9)
    throw precondition_error("gauge magnitude below 1e-9; beta is degenerate here");
}

}  // namespace

Complex canonical_coefficient_with_gauge(const RelativeSection& psi,
                                         const GaugeFunction& gauge, const Point& pt) {
  if (psi.k < 1) throw precondition_error("k must be >= 1");
  const Complex gv = gauge.g(pt);
  check_gauge_value(gv);
  const Complex hv = gauge.h(pt.z * pt.w);
  check_gauge_value(hv);
  const CotangentElement a = alpha_at(pt);
  const CotangentElement beta{gv * a.a, gv * a.b, pt};
  const CotangentElement dpi = dpi_at(pt);
  const CotangentElement pi_tau{hv * dpi.a, hv * dpi.b, pt};
  // beta∧π*tau on the 2·dz∧dw basis; psi·beta^{-k} = f/g^k pointwise.
  const Complex basis_coeff = wedge(beta, pi_tau) / 2.0;
  return psi.f.eval(pt.z, pt.w) / pow_k(gv, psi.k) * pow_k(basis_coeff, psi.k);
}

double gauge_invariance_check(const RelativeSection& psi, const GaugeFunction& gauge,
                              std::span<const Point> points) {
  double worst = 0.0;
  for (const Point& pt : points) {
    const Complex gv = gauge.g(pt);
    check_gauge_value(gv);
    const Complex hv = gauge.h(pt.z * pt.w);
    check_gauge_value(hv);
    const Complex canonical = canonical_coefficient_with_gauge(psi, gauge, pt);
    // Inverse transport Psi·beta^k/(beta∧π*tau)^k back to the alpha^k basis.
    // The tau factor cancels: basis_coeff already carries one h per power.
    const CotangentElement a = alpha_at(pt);
    const CotangentElement beta{gv * a.a, gv * a.b, pt};
    const CotangentElement dpi = dpi_at(pt);
    const CotangentElement pi_tau{hv * dpi.a, hv * dpi.b, pt};
    const Complex basis_coeff = wedge(beta, pi_tau) / 2.0;
    const Complex back =
        canonical / pow_k(basis_coeff, psi.k) * pow_k(gv, psi.k);
    worst = std::max(worst, std::abs(back - psi.f.eval(pt.z, pt.w)));
  }
  return worst;
}

RelativeSection poincare_residue(const CanonicalForm& Phi) {
  if (Phi.k != 1)
    throw precondition_error("the residue solve is implemented for k = 1");
  RelativeSection phi{1, TwoVarSeries(Phi.F.m_deg(), Phi.F.n_deg(),
                                      Phi.F.pole_order())};
  for (int m = 0; m <= Phi.F.m_deg(); ++m)
    for (int n = 0; n <= Phi.F.n_deg(); ++n)
      phi.f.set_coeff(m, n, -Phi.F.coeff(m, n));
  return phi;
}

double residue_wedge_deviation(const CanonicalForm& Phi, const RelativeSection& phi,
                               std::span<const Point> points) {
  if (Phi.k != 1 || phi.k != 1)
    throw precondition_error("the residue identity is checked for k = 1");
  double worst = 0.0;
  for (const Point& pt : points) {
    const Complex lhs =
        phi.f.eval(pt.z, pt.w) * wedge(dpi_at(pt), alpha_at(pt));
    const Complex rhs = 2.0 * Phi.F.eval(pt.z, pt.w);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace anndiff
