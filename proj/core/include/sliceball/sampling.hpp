#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sliceball/quaternion.hpp"

namespace sliceball {

/// Optional 1-D concentration window on the real axis: `fraction` of the
/// budget is spent on the segment [center - half_width, center + half_width]
/// (clipped to the ball). Used to hunt folds of slice-preserving maps.
struct AxisFocus {
  double center = 0.0;
  double half_width = 0.1;
  double fraction = 0.5;
};

/// Reproducible sampling plan: everything is derived from `seed`, so equal
/// configs give bitwise-equal sample sets and reports.
struct SampleConfig {
  std::size_t count = 4096;
  std::uint64_t seed = 42;
  double min_separation = 1e-4;
  std::optional<AxisFocus> axis_focus;
  /// Deterministic fold search along the real axis in check_injective.
  bool axis_probe = true;
};

/// Low-discrepancy additive-recurrence sequence in [0,1)^dim (seeded phase).
class KroneckerSequence {
 public:
  KroneckerSequence(int dim, std::uint64_t seed);
  void next(double* out);

 private:
  std::vector<double> alpha_;
  std::vector<double> state_;
};

/// `count` points of the solid ball B(0, radius); the first sample is the
/// origin and the remainder are low-discrepancy (direction via inverse
/// normal CDF, radius via the 4-D inverse radial CDF u^{1/4}).
std::vector<Quaternion> sample_ball(double radius, std::size_t count,
                                    std::uint64_t seed);

/// `count` points of the sphere |q| = radius. The two real poles +-radius
/// are always included (extrema of slice-symmetric functions sit on the
/// axis), the rest is a Gaussian-normalized low-discrepancy lattice.
std::vector<Quaternion> sample_sphere(double radius, std::size_t count,
                                      std::uint64_t seed);

/// `count` elements of S; the canonical units i, j, k come first.
std::vector<ImaginaryUnit> sample_imaginary_units(std::size_t count,
                                                  std::uint64_t seed);

/// Replaces the tail of `points` with the focus window's axis samples.
void apply_axis_focus(std::vector<Quaternion>& points, double ball_radius,
                      const AxisFocus& focus, std::uint64_t seed);

namespace detail {
/// Acklam's rational approximation of the standard normal quantile.
double inverse_normal_cdf(double p);
/// Unique positive root of x^{d+1} = x + 1 (generalized golden ratio).
double harmonious_root(int dim);
}  // namespace detail

}  // namespace sliceball
