#include "anndiff/nodal_family.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace anndiff {

void NodalFamilySpec::validate() const {
  if (!(c > 0.0) || !(c_prime > 0.0))
    throw precondition_error("disc radii must be positive");
}

void AnnulusSpec::validate() const {
  if (!(r_inner >= 0.0) || !(r_outer > r_inner))
    throw precondition_error("annulus radii must satisfy 0 <= r_inner < r_outer");
}

bool same_point(const Point& a, const Point& b) { return a.z == b.z && a.w == b.w; }

AnnulusSpec fiber_annulus(const NodalFamilySpec& fam, Complex t) {
  fam.validate();
  if (std::abs(t) >= fam.base_radius())
    throw precondition_error("parameter outside the base disc, fiber is empty");
  return {std::abs(t) / fam.c_prime, fam.c};
}

Point embed(Complex zeta, Complex t) {
  if (zeta == Complex(0.0)) throw precondition_error("fiber chart needs zeta != 0");
  return {zeta, t / zeta};
}

Complex pair(const CotangentElement& form, const TangentElement& vec) {
  if (!same_point(form.at, vec.at))
    throw precondition_error("pairing requires a common base point");
  return form.a * vec.p + form.b * vec.q;
}

Complex wedge(const CotangentElement& u, const CotangentElement& v) {
  if (!same_point(u.at, v.at))
    throw precondition_error("wedge requires a common base point");
  return u.a * v.b - u.b * v.a;
}

double annulus_module(const AnnulusSpec& a) {
  a.validate();
  if (a.r_inner == 0.0) return std::numeric_limits<double>::infinity();
  return std::log(a.r_outer / a.r_inner) / (2.0 * std::numbers::pi);
}

CotangentElement alpha_at(const Point& pt) {
  if (pt.z == Complex(0.0) || pt.w == Complex(0.0))
    throw precondition_error("alpha is defined off the branches z = 0, w = 0");
  return {1.0 / pt.z, -1.0 / pt.w, pt};
}

CotangentElement dpi_at(const Point& pt) { return {pt.w, pt.z, pt}; }

TangentElement v_at(const Point& pt) { return {pt.z, -pt.w, pt}; }

TangentElement embed_push(Complex zeta, Complex t, Complex coeff) {
  // z = ζ, w = t/ζ: ζ·dz/dζ = ζ, ζ·dw/dζ = -t/ζ = -w.
  const Point pt = embed(zeta, t);
  return {coeff * pt.z, -coeff * pt.w, pt};
}

Complex pair(const XYCotangentElement& form, const XYTangentElement& vec) {
  if (form.at.x != vec.at.x || form.at.y != vec.at.y)
    throw precondition_error("pairing requires a common base point");
  return form.a * vec.p + form.b * vec.q;
}

Point to_zw(const XYPoint& pt) { return {pt.x + pt.y, pt.x - pt.y}; }

TangentElement to_zw(const XYTangentElement& vec) {
  // d/dx = d/dz + d/dw, d/dy = d/dz - d/dw.
  return {vec.p + vec.q, vec.p - vec.q, to_zw(vec.at)};
}

CotangentElement to_zw(const XYCotangentElement& form) {
  // dx = (dz + dw)/2, dy = (dz - dw)/2.
  return {(form.a + form.b) / 2.0, (form.a - form.b) / 2.0, to_zw(form.at)};
}

}  // namespace anndiff
