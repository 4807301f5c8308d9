#pragma once

#include "anndiff/types.hpp"

namespace anndiff {

/// The model neighborhood {|z| < c, |w| < c'} fibered by zw = t over |t| < c·c'.
struct NodalFamilySpec {
  double c = 1.0;
  double c_prime = 1.0;
  double base_radius() const { return c * c_prime; }
  void validate() const;
};

/// r_inner < |p| < r_outer; r_inner = 0 encodes a punctured disc.
struct AnnulusSpec {
  double r_inner = 0.0;
  double r_outer = 1.0;
  bool contains(double r) const { return r > r_inner && r < r_outer; }
  void validate() const;
};

struct Point {
  Complex z, w;
};
bool same_point(const Point& a, const Point& b);

/// a·dz + b·dw at a base point.
struct CotangentElement {
  Complex a, b;
  Point at;
};

/// p·dz-direction + q·dw-direction at a base point.
struct TangentElement {
  Complex p, q;
  Point at;
};

/// The fiber of zw = t inside the neighborhood: |t|/c' < |z| < c.
AnnulusSpec fiber_annulus(const NodalFamilySpec& fam, Complex t);

/// The fiber chart z = ζ, w = t/ζ.
Point embed(Complex zeta, Complex t);

/// Contraction of a 1-form element with a vector element at the same point.
Complex pair(const CotangentElement& form, const TangentElement& vec);

/// Coefficient of the wedge on the dz∧dw basis.
Complex wedge(const CotangentElement& u, const CotangentElement& v);

/// log(r_outer/r_inner)/2π, +inf for the punctured disc.
double annulus_module(const AnnulusSpec& a);

/// dz/z - dw/w, the relative logarithmic form normalized so alpha(v) = 2.
CotangentElement alpha_at(const Point& pt);
/// d(zw) = w·dz + z·dw.
CotangentElement dpi_at(const Point& pt);
/// z·d/dz - w·d/dw, tangent to every fiber.
TangentElement v_at(const Point& pt);
/// Pushforward of coeff·ζ·d/dζ through the fiber chart; lands on v for coeff 1.
TangentElement embed_push(Complex zeta, Complex t, Complex coeff = 1.0);

// Hyperbola coordinates: z = x + y, w = x - y, so zw = x^2 - y^2.
struct XYPoint {
  Complex x, y;
};
struct XYCotangentElement {
  Complex a, b;  // a·dx + b·dy
  XYPoint at;
};
struct XYTangentElement {
  Complex p, q;  // p·d/dx + q·d/dy
  XYPoint at;
};

Complex pair(const XYCotangentElement& form, const XYTangentElement& vec);
Point to_zw(const XYPoint& pt);
TangentElement to_zw(const XYTangentElement& vec);
CotangentElement to_zw(const XYCotangentElement& form);

}  // namespace anndiff
