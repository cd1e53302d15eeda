#include "sliceball/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sliceball {

namespace detail {

double inverse_normal_cdf(double p) {
  // Peter Acklam's rational approximation, |relative error| < 1.2e-9.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  p = std::clamp(p, 1e-15, 1.0 - 1e-15);
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double harmonious_root(int dim) {
  // Newton iteration for x^{dim+1} = x + 1, starting above the root.
  double x = 2.0;
  for (int it = 0; it < 64; ++it) {
    const double f = std::pow(x, dim + 1) - x - 1.0;
    const double df = (dim + 1) * std::pow(x, dim) - 1.0;
    const double next = x - f / df;
    if (std::abs(next - x) < 1e-15) {
      return next;
    }
    x = next;
  }
  return x;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace
}  // namespace detail

KroneckerSequence::KroneckerSequence(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw std::invalid_argument("KroneckerSequence: dim must be >= 1");
  }
  const double phi = detail::harmonious_root(dim);
  alpha_.resize(static_cast<std::size_t>(dim));
  state_.resize(static_cast<std::size_t>(dim));
  double a = 1.0;
  std::uint64_t s = seed;
  for (int k = 0; k < dim; ++k) {
    a /= phi;
    alpha_[static_cast<std::size_t>(k)] = a;
    state_[static_cast<std::size_t>(k)] =
        detail::unit_double(detail::splitmix64(s));
  }
}

void KroneckerSequence::next(double* out) {
  for (std::size_t k = 0; k < alpha_.size(); ++k) {
    state_[k] += alpha_[k];
    if (state_[k] >= 1.0) {
      state_[k] -= 1.0;
    }
    out[k] = state_[k];
  }
}

std::vector<Quaternion> sample_ball(double radius, std::size_t count,
                                    std::uint64_t seed) {
  if (!(radius >= 0.0)) {
    throw std::invalid_argument("sample_ball: negative radius");
  }
  std::vector<Quaternion> out;
  out.reserve(count);
  if (count == 0) {
    return out;
  }
  out.push_back(Quaternion::zero());
  KroneckerSequence seq(5, seed);
  double u[5];
  while (out.size() < count) {
    seq.next(u);
    Quaternion g{detail::inverse_normal_cdf(u[0]), detail::inverse_normal_cdf(u[1]),
                 detail::inverse_normal_cdf(u[2]), detail::inverse_normal_cdf(u[3])};
    const double n = g.norm();
    if (!(n > 1e-12)) {
      g = Quaternion::one();
    }
    const double r = radius * std::pow(u[4], 0.25);
    out.push_back(g * (r / std::max(n, 1e-12)));
  }
  return out;
}

std::vector<Quaternion> sample_sphere(double radius, std::size_t count,
                                      std::uint64_t seed) {
  if (!(radius >= 0.0)) {
    throw std::invalid_argument("sample_sphere: negative radius");
  }
  std::vector<Quaternion> out;
  out.reserve(count);
  if (count == 0) {
    return out;
  }
  out.push_back(Quaternion(radius));
  if (count > 1) {
    out.push_back(Quaternion(-radius));
  }
  KroneckerSequence seq(4, seed);
  double u[4];
  while (out.size() < count) {
    seq.next(u);
    Quaternion g{detail::inverse_normal_cdf(u[0]), detail::inverse_normal_cdf(u[1]),
                 detail::inverse_normal_cdf(u[2]), detail::inverse_normal_cdf(u[3])};
    const double n = g.norm();
    if (!(n > 1e-12)) {
      g = Quaternion::one();
    }
    out.push_back(g * (radius / std::max(n, 1e-12)));
  }
  return out;
}

std::vector<ImaginaryUnit> sample_imaginary_units(std::size_t count,
                                                  std::uint64_t seed) {
  std::vector<ImaginaryUnit> out;
  out.reserve(count);
  const ImaginaryUnit canonical[3] = {ImaginaryUnit::i(), ImaginaryUnit::j(),
                                      ImaginaryUnit::k()};
  for (std::size_t k = 0; k < count && k < 3; ++k) {
    out.push_back(canonical[k]);
  }
  KroneckerSequence seq(3, seed);
  double u[3];
  while (out.size() < count) {
    seq.next(u);
    Quaternion g{0.0, detail::inverse_normal_cdf(u[0]),
                 detail::inverse_normal_cdf(u[1]), detail::inverse_normal_cdf(u[2])};
    if (!(g.imag_norm() > 1e-12)) {
      g = Quaternion::i();
    }
    out.push_back(ImaginaryUnit::normalized(g));
  }
  return out;
}

void apply_axis_focus(std::vector<Quaternion>& points, double ball_radius,
                      const AxisFocus& focus, std::uint64_t seed) {
  if (!(focus.fraction > 0.0) || points.empty()) {
    return;
  }
  const double lo = std::max(-ball_radius, focus.center - focus.half_width);
  const double hi = std::min(ball_radius, focus.center + focus.half_width);
  if (!(hi > lo)) {
    return;
  }
  const std::size_t m = std::min(
      points.size(),
      static_cast<std::size_t>(std::clamp(focus.fraction, 0.0, 1.0) *
                               static_cast<double>(points.size())));
  KroneckerSequence seq(1, seed ^ 0xabcdef1234567890ULL);
  double u;
  for (std::size_t k = points.size() - m; k < points.size(); ++k) {
    seq.next(&u);
    points[k] = Quaternion(lo + u * (hi - lo));
  }
}

}  // namespace sliceball
