#pragma once

#include <functional>
#include <span>

#include "anndiff/extension.hpp"

namespace anndiff {

/// psi = f·alpha^k with alpha = dz/z - dw/w, a relative k-differential.
struct RelativeSection {
  int k = 1;
  TwoVarSeries f;
};

/// Psi = F·(2·dz∧dw)^k, the k-fold canonical form representative; the basis is
/// alpha∧dπ = 2·dz∧dw.
struct CanonicalForm {
  int k = 1;
  TwoVarSeries F;
};

/// psi -> psi·(alpha∧π*dt)^k / alpha^k. Pure coefficient transport in the
/// default gauge beta = alpha, tau = dt.
CanonicalForm psi_to_Psi(const RelativeSection& psi);

/// Inverse transport Psi -> Psi·beta^k / (beta∧π*tau)^k in the default gauge.
RelativeSection Psi_to_psi(const CanonicalForm& Psi);

/// tau-rescaled transport with constant h: tau = h·dt multiplies the
/// canonical coefficient by h^k, exactly at the coefficient level.
CanonicalForm canonical_with_tau(const RelativeSection& psi, Complex h);

/// beta = exp(log_g(z,w))·alpha and tau = tau_scale(t)·dt; nonvanishing by
/// construction. Empty tau_scale means tau = dt.
struct GaugeFunction {
  TwoVarSeries log_g;
  std::function<Complex(Complex)> tau_scale;
  Complex g(const Point& pt) const;
  Complex h(Complex t) const;
};

/// Canonical coefficient on the (2·dz∧dw)^k basis computed through the gauge
/// via pointwise wedges: psi·beta^{-k}·(beta∧π*tau)^k. Equals f·h(t)^k, with
/// every g dependence cancelling.
Complex canonical_coefficient_with_gauge(const RelativeSection& psi,
                                         const GaugeFunction& gauge, const Point& pt);

/// Max over the points of |round trip through the gauge - f|; gauge
/// independence makes this roundoff-small.
double gauge_invariance_check(const RelativeSection& psi, const GaugeFunction& gauge,
                              std::span<const Point> points);

/// The alpha-multiple phi with Phi = dπ∧phi, i.e. phi = -F·alpha (k = 1 only):
/// dπ∧alpha = -2·dz∧dw, so the sign flips relative to the alpha∧dπ ordering
/// used by psi_to_Psi.
RelativeSection poincare_residue(const CanonicalForm& Phi);

/// Max over the points of |dπ∧phi - Phi| on the dz∧dw basis, via pointwise
/// wedges.
double residue_wedge_deviation(const CanonicalForm& Phi, const RelativeSection& phi,
                               std::span<const Point> points);

}  // namespace anndiff
