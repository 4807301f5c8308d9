#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "anndiff/extension.hpp"
#include "anndiff/laurent.hpp"

namespace anndiff {

/// Deterministic draws: fixed transforms over mt19937_64 words, no
/// implementation-defined distributions, so seeded streams are portable.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Area-uniform in |p| < radius.
  Complex disc(double radius = 1.0) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }

  Complex circle(double radius) {
    return std::polar(radius, uniform(0.0, 2.0 * std::numbers::pi));
  }

  /// Radius uniform in [r_in, r_out], angle uniform.
  Complex annulus(double r_in, double r_out) {
    return std::polar(uniform(r_in, r_out), uniform(0.0, 2.0 * std::numbers::pi));
  }

private:
  std::mt19937_64 eng_;
};

/// Dense support [n_min, n_max], coefficients area-uniform in the unit disc.
inline LaurentSeries random_laurent(Rng& rng, int n_min, int n_max) {
  std::vector<Complex> c;
  c.reserve(static_cast<size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) c.push_back(rng.disc());
  return LaurentSeries(n_min, std::move(c));
}

/// Full bidegree box, coefficients area-uniform in |c| < coeff_radius.
inline TwoVarSeries random_two_var(Rng& rng, int m_deg, int n_deg,
                                   double coeff_radius = 1.0) {
  TwoVarSeries s(m_deg, n_deg);
  for (int m = 0; m <= m_deg; ++m)
    for (int n = 0; n <= n_deg; ++n) s.set_coeff(m, n, rng.disc(coeff_radius));
  return s;
}

}  // namespace anndiff
