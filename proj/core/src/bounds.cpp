#include "sliceball/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sliceball {

namespace {

constexpr double kInvSqrt3 = 0.5773502691896257645091487805019;

// x - sqrt(x^2 - r^2) without cancellation near small r.
double subtract_sqrt(double x, double x_sq, double r) {
  const double inner = std::max(x_sq - r * r, 0.0);
  return r * r / (x + std::sqrt(inner));
}

double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

RadiusPair::RadiusPair(double injectivity, double covering)
    : injectivity_radius(injectivity), covering_radius(covering) {
  if (!(injectivity > 0.0 && injectivity <= 1.0 + 1e-12)) {
    throw std::logic_error("RadiusPair: injectivity radius outside (0, 1]");
  }
  if (!(covering > 0.0 && covering <= injectivity + 1e-12)) {
    throw std::logic_error("RadiusPair: covering radius must lie in (0, injectivity]");
  }
}

MaximizationResult maximize_on_interval(
    const std::function<double(double)>& objective, double lo, double hi,
    double coarse_step, double bracket_tol) {
  if (!(hi > lo)) {
    throw std::domain_error("maximize_on_interval: empty interval");
  }
  double best_r = 0.0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (double r = lo + coarse_step; r < hi - 0.5 * coarse_step; r += coarse_step) {
    const double v = objective(r);
    if (v > best_v) {
      best_v = v;
      best_r = r;
    }
  }
  const double a = std::max(lo + 0.25 * coarse_step, best_r - coarse_step);
  const double b = std::min(hi - 0.25 * coarse_step, best_r + coarse_step);
  const double r_star = golden_section_max(objective, a, b, bracket_tol);
  return MaximizationResult{r_star, objective(r_star), bracket_tol};
}

double bonk_bound(double t) {
  if (!(t >= 0.0) || !(t < kInvSqrt3)) {
    throw std::domain_error("bonk_bound: t must lie in [0, 1/sqrt(3))");
  }
  const double den = 1.0 - t * kInvSqrt3;
  return (1.0 - std::sqrt(3.0) * t) / (den * den * den);
}

RadiusPair landau_radii(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("landau_radii: alpha must lie in (0, 1]");
  }
  const double r0 = alpha / (1.0 + std::sqrt(1.0 - alpha * alpha));
  return RadiusPair(r0, landau_covering(alpha, r0));
}

double landau_covering(double alpha, double r) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("landau_covering: alpha must lie in (0, 1]");
  }
  const double r0 = alpha / (1.0 + std::sqrt(1.0 - alpha * alpha));
  if (!(r > 0.0 && r <= r0 * (1.0 + 1e-12))) {
    throw std::domain_error("landau_covering: r must lie in (0, r_0]");
  }
  if (alpha == 1.0) {
    return r;  // (1 - r)/(1 - r) cancels; the identity map case
  }
  return r * (alpha - r) / (1.0 - alpha * r);
}

double bloch_r_objective(double r) {
  const double x = 0.5 * std::log((1.0 + r) / (1.0 - r));
  return subtract_sqrt(x, x * x, r);
}

double bloch_R_objective(double r) {
  const double x = 0.5 * std::log((1.0 + r) / (1.0 - r));
  const double d = subtract_sqrt(x, x * x, r);
  return x * d * d / (r * r);
}

std::pair<MaximizationResult, MaximizationResult> bloch_maximizations() {
  return {maximize_on_interval(bloch_r_objective, 0.0, 1.0),
          maximize_on_interval(bloch_R_objective, 0.0, 1.0)};
}

RadiusPair bloch_constants() {
  const auto [r, R] = bloch_maximizations();
  return RadiusPair(r.value, R.value);
}

double bergman_r_objective(double r, double p) {
  if (!(p >= 1.0)) {
    throw std::domain_error("bergman: p must be >= 1");
  }
  const double x = std::pow(1.0 - r, -2.0 / p);
  return subtract_sqrt(x, x * x, r);
}

double bergman_R_objective(double r, double p, BergmanRpForm form) {
  if (!(p >= 1.0)) {
    throw std::domain_error("bergman: p must be >= 1");
  }
  const double x = std::pow(1.0 - r, -2.0 / p);
  double d;
  if (form == BergmanRpForm::kSymmetric) {
    d = subtract_sqrt(x, x * x, r);
  } else {
    // Inner square root of x - r^2 rather than x^2 - r^2.
    d = (x * x - x + r * r) / (x + std::sqrt(std::max(x - r * r, 0.0)));
  }
  return x * d * d / (r * r);
}

std::pair<MaximizationResult, MaximizationResult> bergman_maximizations(double p) {
  if (!(p >= 1.0)) {
    throw std::domain_error("bergman: p must be >= 1");
  }
  return {maximize_on_interval([p](double r) { return bergman_r_objective(r, p); },
                               0.0, 1.0),
          maximize_on_interval(
              [p](double r) {
                return bergman_R_objective(r, p, BergmanRpForm::kSymmetric);
              },
              0.0, 1.0)};
}

RadiusPair bergman_constants(double p) {
  const auto [r, R] = bergman_maximizations(p);
  return RadiusPair(r.value, R.value);
}

double growth_bound_bloch(double t) {
  if (!(t >= 0.0 && t < 1.0)) {
    throw std::domain_error("growth_bound_bloch: t must lie in [0, 1)");
  }
  return 0.5 * std::log((1.0 + t) / (1.0 - t));
}

double growth_bound_bergman(double t, double p) {
  if (!(t >= 0.0 && t < 1.0)) {
    throw std::domain_error("growth_bound_bergman: t must lie in [0, 1)");
  }
  if (!(p >= 1.0)) {
    throw std::domain_error("growth_bound_bergman: p must be >= 1");
  }
  return std::pow(1.0 - t, -2.0 / p);
}

Ball apollonius_ball(const Quaternion& a, const Quaternion& b, double t) {
  if (!(t >= 0.0)) {
    throw std::domain_error("apollonius_ball: t must be non-negative");
  }
  if (std::abs(t - 1.0) <= 1e-9) {
    throw std::domain_error("bisector is a hyperplane, not a ball");
  }
  const double den = 1.0 - t * t;
  const Quaternion center = (a - b * (t * t)) / den;
  const double radius = t * distance_between(a, b) / std::abs(den);
  return Ball(center, radius);
}

LindelofBounds lindelof_bounds(const Quaternion& f0, double t) {
  const double m = f0.norm();
  if (!(m < 1.0)) {
    throw std::domain_error("lindelof_bounds: |f(0)| must be < 1");
  }
  if (!(t >= 0.0 && t < 1.0)) {
    throw std::domain_error("lindelof_bounds: t must lie in [0, 1)");
  }
  const double den20 = 1.0 - t * t * m * m;
  LindelofBounds out;
  out.center_scale = (1.0 - t * t) / den20;
  out.radius20 = t * (1.0 - m * m) / den20;
  out.lower21 = std::max(0.0, (m - t) / (1.0 - t * m));
  out.upper21 = (t + m) / (1.0 + t * m);
  out.bound22 = t * (1.0 - m * m) / (1.0 - t * m);
  return out;
}

SliceSeries extremal_f_alpha(double alpha, int order) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("extremal_f_alpha: alpha must lie in (0, 1)");
  }
  const int n_out = std::clamp(order, 2, SliceSeries::kHardMaxOrder);
  // q (q + alpha) sum_n (-alpha)^n q^n: c_1 = alpha,
  // c_n = (1 - alpha^2)(-alpha)^{n-2} for n >= 2.
  std::vector<Quaternion> c(static_cast<std::size_t>(n_out) + 1,
                            Quaternion::zero());
  c[1] = Quaternion(alpha);
  double factor = 1.0 - alpha * alpha;
  for (int n = 2; n <= n_out; ++n) {
    c[static_cast<std::size_t>(n)] = Quaternion(factor);
    factor *= -alpha;
  }
  // The coefficients decay like alpha^n, so with an escalated order the
  // truncation stays trustworthy well past the default radius; sharpness
  // work at alpha near 1 needs evaluations just beyond r_0(alpha).
  return SliceSeries(std::move(c), 0.985, /*exact=*/false);
}

int extremal_f_alpha_order(double alpha, double radius, double tol) {
  const double base = alpha * radius;
  int order = 48;
  while (order < SliceSeries::kHardMaxOrder) {
    // sum_{n > N} (1 - a^2) a^{n-2} rho^n = (1 - a^2) rho^2 (a rho)^{N-1} / (1 - a rho)
    const double tail = (1.0 - alpha * alpha) * radius * radius *
                        std::pow(base, order - 1) / (1.0 - base);
    if (tail < tol) {
      break;
    }
    order = std::min(order * 2, SliceSeries::kHardMaxOrder);
  }
  return order;
}

SliceSeries extremal_cover(double alpha, const ImaginaryUnit& I, double theta,
                           const Quaternion& v, int order) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("extremal_cover: alpha must lie in (0, 1)");
  }
  const Quaternion u = exp_I(I, theta) * alpha;
  return premultiply_by_q(mobius(u, v, order));
}

RotationConstants rotation_covering_constants() {
  return RotationConstants{3.0 - 2.0 * std::sqrt(2.0),
                           5.0 - 2.0 * std::sqrt(6.0),
                           2.5 - std::sqrt(6.0)};
}

}  // namespace sliceball
