#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "anndiff/extension.hpp"

namespace anndiff {

/// The contour passes too close to a zero for a reliable winding number.
class contour_error : public precondition_error {
public:
  contour_error(const std::string& what, double angle, double magnitude)
      : precondition_error(what), angle_(angle), magnitude_(magnitude) {}
  double angle() const { return angle_; }
  double magnitude() const { return magnitude_; }

private:
  double angle_;
  double magnitude_;
};

/// A branch restriction vanishes identically; the divisor is not proper there.
class degenerate_divisor_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct WindingReport {
  double radius = 0.0;
  long winding = 0;
  double raw_phase_sum = 0.0;  // accumulated argument, winding·2π up to roundoff
  int samples_used = 0;
};

struct WindingOptions {
  int initial_samples = 4096;
  int max_samples = 1 << 20;
  double min_magnitude = 1e-9;
};

/// Argument-principle winding of g around |p| = radius. Sample count doubles
/// until every phase step is below π/2.
WindingReport winding_count(const std::function<Complex(Complex)>& g, double radius,
                            const WindingOptions& opts = {});

/// Zeros (with multiplicity) of the coefficient function of s on the fiber
/// sub-annulus r_in < |ζ| < r_out, as the winding difference of the two
/// boundary circles. The ζ^{-pole_order} factor is excluded: it never
/// vanishes on the fiber.
int fiber_zero_count(const TwoVarSeries& s, Complex t, double r_in, double r_out,
                     const WindingOptions& opts = {});

struct BranchOrderReport {
  int order_at_origin = 0;
  long zeros_in_punctured_disc = 0;
};

/// Vanishing order at the node plus zero count of the branch restriction in
/// 0 < |p| < radius. Coefficients below 1e-10 relative to the largest are
/// treated as zero; an identically zero restriction raises
/// degenerate_divisor_error.
BranchOrderReport nodal_branch_order(const TwoVarSeries& s, Branch branch,
                                     double radius, const WindingOptions& opts = {});

/// Fiberwise zero counts over a t list on the t-scaled annuli
/// |t|/(c'·rho) < |ζ| < rho·c, compared against the central-fiber divisor.
struct ConstancyReport {
  std::vector<Complex> t_values;
  std::vector<int> fiber_counts;
  bool degenerate = false;  // a branch restriction vanished identically; no verdict
  std::optional<BranchOrderReport> z_branch, w_branch;
  int nodal_total = 0;
  bool counts_constant = false;
  bool matches_nodal = false;
  bool pass() const { return !degenerate && counts_constant && matches_nodal; }
};

ConstancyReport constancy_check(const TwoVarSeries& s, const std::vector<Complex>& t_list,
                                double rho, double c = 1.0, double c_prime = 1.0,
                                const WindingOptions& opts = {});

}  // namespace anndiff
