#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sliceball/bounds.hpp"
#include "sliceball/quaternion.hpp"
#include "sliceball/sampling.hpp"
#include "sliceball/series.hpp"

namespace sliceball {

/// Tolerances shared by the verification checks. A pass is sampling
/// evidence, never a proof.
namespace tolerances {
inline constexpr double kCollision = 1e-9;
inline constexpr double kCovering = 1e-9;
inline constexpr double kBonk = 1e-8;
inline constexpr double kLindelof = 1e-9;
inline constexpr double kMobiusEquality = 1e-6;
inline constexpr double kHypothesis = 1e-10;
inline constexpr double kSeminormSlack = 1e-6;
}  // namespace tolerances

/// Structured outcome of a sampling check. A failed check always carries a
/// witness; hypothesis_not_met means the input did not satisfy the check's
/// preconditions, which is reported separately from a genuine bound
/// violation.
struct VerificationReport {
  enum class Outcome { kPass, kFail, kHypothesisNotMet };

  Outcome outcome = Outcome::kPass;
  double margin = 0.0;
  std::optional<std::pair<Quaternion, Quaternion>> witness;
  std::size_t samples_used = 0;
  std::string note;

  bool passed() const { return outcome == Outcome::kPass; }
  bool hypothesis_not_met() const { return outcome == Outcome::kHypothesisNotMet; }

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

/// Near-pair search over image points via spatial hashing (cell size twice
/// the tolerance, 16-cell neighborhood probes). Returns the first index pair
/// whose images are within image_tol while the domain points are separated
/// by more than min_separation, plus the smallest candidate image distance
/// seen (2*image_tol when no candidate pair was probed).
struct NearPairResult {
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  double min_candidate_distance;
};
NearPairResult find_near_image_pair(const std::vector<Quaternion>& points,
                                    const std::vector<Quaternion>& images,
                                    double image_tol, double min_separation);

/// Deterministic fold search restricted to the real axis: grid-scan the
/// curve t -> f(t), refine the closest separated candidates by alternating
/// golden-section minimization, and return a collision pair if the image
/// distance can be driven below image_tol.
std::optional<std::pair<Quaternion, Quaternion>> find_axis_fold_collision(
    const SliceSeries& f, double radius, double min_separation,
    double image_tol = tolerances::kCollision);

/// Injectivity evidence on B(0, r): low-discrepancy samples, image hashing,
/// plus the axis fold probe (cfg.axis_probe). Failure witnesses are pairs
/// (p, q) with |f(p) - f(q)| < 1e-9 and |p - q| > min_separation.
VerificationReport check_injective(const SliceSeries& f, double r,
                                   const SampleConfig& cfg);

/// Ball-covering evidence: s = min |f(q) - f(0)| over the sampled sphere
/// |q| = r_domain must reach R_target (margin = s - R_target).
VerificationReport check_covering(const SliceSeries& f, double r_domain,
                                  double R_target, const SampleConfig& cfg);

/// Distortion bound check for normalized Bloch functions: requires f(0) = 0,
/// f'(0) = 1 and unit seminorm, then samples Re f'(q) >= bonk_bound(|q|)
/// on B(0, 1/sqrt(3)).
VerificationReport check_bonk(const SliceSeries& f, const SampleConfig& cfg);

/// Sampled sup of (1 - |q|^2) |f'(q)|; a lower bound of the true seminorm.
double bloch_seminorm(const SliceSeries& f, const SampleConfig& cfg);

/// sup over sampled slices of the normalized p-integral of |f| on the slice
/// disk (Gauss-Legendre radial x trapezoid angular quadrature).
double bergman_norm(const SliceSeries& f, double p, const SampleConfig& cfg);

/// Checks the three Lindelof-type inequalities on sampled points for a
/// self-map of the unit ball. With expect_mobius_equality the first
/// inequality must be an equality within 1e-6 everywhere sampled.
VerificationReport check_lindelof(const SliceSeries& f, const SampleConfig& cfg,
                                  bool expect_mobius_equality = false);

/// The rotation-covering procedure: maximize psi(q) = (1 - |q|) |f'(q)|,
/// rotate by u = a/|a|, and certify the ball of radius 5/2 - sqrt(6) around
/// f~(|a|) against the shrunken sphere of radius (1 - sqrt(6)/3) r. Requires
/// f'(0) = 1 and a series evaluable on the closed ball (polynomials).
VerificationReport check_rotation_covering(const SliceSeries& f,
                                           const SampleConfig& cfg);

/// Sharpness pipeline for the extremal family: derivative zero at -r_0,
/// the closed-form boundary values f_alpha(-r) = -R(r), injectivity just
/// below r_0, and an explicit collision pair just beyond r_0 found by
/// real-axis bisection.
VerificationReport landau_sharpness(double alpha, const SampleConfig& cfg);

/// Random-series identity suite: real symmetrization, *-associativity, the
/// pointwise *-product identity, T-transform inversion, and the reciprocal
/// residual. cfg.count is the number of random series.
VerificationReport check_algebra(const SampleConfig& cfg);

}  // namespace sliceball
