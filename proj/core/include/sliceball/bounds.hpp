#pragma once

#include <functional>
#include <utility>

#include "sliceball/quaternion.hpp"
#include "sliceball/series.hpp"

namespace sliceball {

/// Injectivity radius together with the covering radius certified on it.
/// Every constructor-checked pair satisfies covering <= injectivity and
/// injectivity in (0, 1].
struct RadiusPair {
  double injectivity_radius;
  double covering_radius;

  RadiusPair(double injectivity, double covering);
};

/// Outcome of a 1-D maximization: the argmax bracket has width <= tolerance
/// and value >= objective(argmax +- tolerance) - 1e-9.
struct MaximizationResult {
  double argmax_r;
  double value;
  double tolerance;
};

/// Coarse grid scan (default step 1e-3) followed by golden-section
/// refinement of the best bracket down to `bracket_tol`. The grid stage
/// guards against multi-modality; endpoints are excluded.
MaximizationResult maximize_on_interval(
    const std::function<double(double)>& objective, double lo, double hi,
    double coarse_step = 1e-3, double bracket_tol = 1e-8);

/// Distortion lower bound (1 - sqrt(3) t) / (1 - t/sqrt(3))^3 on
/// [0, 1/sqrt(3)).
double bonk_bound(double t);

/// r_0 = alpha / (1 + sqrt(1 - alpha^2)) paired with R(r_0) = r_0^2.
RadiusPair landau_radii(double alpha);

/// R(r) = r (alpha - r) / (1 - alpha r) for 0 < r <= r_0(alpha).
double landau_covering(double alpha, double r);

double bloch_r_objective(double r);
double bloch_R_objective(double r);

/// Maximizes the two Bloch objectives over (0, 1); values land near
/// (0.3552, 0.2308).
RadiusPair bloch_constants();
std::pair<MaximizationResult, MaximizationResult> bloch_maximizations();

/// The Bergman covering objective circulates in two forms: one with
/// (1-r)^{-2/p} under the inner square root, and the symmetric form with
/// (1-r)^{-4/p} matching the r_p objective. The first grows like
/// (1-r)^{-6/p} toward r = 1 and has no maximizer, so constants are always
/// computed from the symmetric form; both forms remain available for
/// evaluation and sweeps.
enum class BergmanRpForm { kInnerLinear, kSymmetric };

double bergman_r_objective(double r, double p);
double bergman_R_objective(double r, double p,
                           BergmanRpForm form = BergmanRpForm::kInnerLinear);

/// (r_p, R_p) for p >= 1; R_p from the symmetric objective (see
/// BergmanRpForm).
RadiusPair bergman_constants(double p);
std::pair<MaximizationResult, MaximizationResult> bergman_maximizations(double p);

/// Growth bound 1/2 log((1+t)/(1-t)) for unit-seminorm Bloch functions.
double growth_bound_bloch(double t);
/// Growth bound (1-t)^{-2/p} for unit-norm Bergman functions.
double growth_bound_bergman(double t, double p);

/// The set { q : |q - a| <= t |q - b| } for t != 1 is a closed ball with
/// center (a - t^2 b)/(1 - t^2) and radius t |a - b| / |1 - t^2| (its
/// complement's boundary ball for t > 1). t = 1 is rejected: the bisector
/// is a hyperplane, not a ball.
Ball apollonius_ball(const Quaternion& a, const Quaternion& b, double t);

/// Data of the three Lindelof-type inequalities for a self-map of the unit
/// ball with value f0 at the origin, evaluated at |q| = t:
///   |f(q) - center_scale * f0| <= radius20,
///   lower21 <= |f(q)| <= upper21,
///   |f(q) - f0| <= bound22.
struct LindelofBounds {
  double center_scale;
  double radius20;
  double lower21;
  double upper21;
  double bound22;
};

LindelofBounds lindelof_bounds(const Quaternion& f0, double t);

/// The extremal self-map f_alpha(q) = q (q + alpha) / (1 + q alpha) as a
/// real-coefficient series: f(0) = 0, f'(0) = alpha, f'(-r_0) = 0.
SliceSeries extremal_f_alpha(double alpha, int order = SliceSeries::kMaxOrder);

/// Truncation order keeping the dropped f_alpha tail below `tol` at the
/// working radius, clamped to [48, kHardMaxOrder].
int extremal_f_alpha_order(double alpha, double radius, double tol = 1e-10);

/// The sharp covering family q (1 - q alpha e^{-I theta})^-* * (q - alpha
/// e^{I theta}) v.
SliceSeries extremal_cover(double alpha, const ImaginaryUnit& I, double theta,
                           const Quaternion& v,
                           int order = SliceSeries::kMaxOrder);

/// (3 - 2 sqrt 2, 5 - 2 sqrt 6, 5/2 - sqrt 6): the two local covering
/// coefficients and the universal rotation-covering radius.
struct RotationConstants {
  double r1_coeff;
  double r2_coeff;
  double final_radius;
};

RotationConstants rotation_covering_constants();

}  // namespace sliceball
