#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "sliceball/quaternion.hpp"

namespace sliceball {

/// Truncated power series f(q) = sum_n q^n a_n with quaternion coefficients,
/// the working representation of a slice regular function on a ball around
/// the origin.
///
/// A series is either `exact` (the coefficient list defines the function
/// completely, i.e. a polynomial) or a truncation of an infinite expansion.
/// Evaluation is restricted to |q| <= eval_radius() for truncated series so
/// the dropped tail stays below the tail_bound() estimate; exact series
/// evaluate on any bounded ball.
class SliceSeries {
 public:
  /// Default order clamp for *-products.
  static constexpr int kMaxOrder = 64;
  /// Hard cap used by order-escalating callers.
  static constexpr int kHardMaxOrder = 512;
  static constexpr double kDefaultEvalRadius = 0.95;

  /// The zero series [0].
  SliceSeries() : coeffs_{Quaternion::zero()} {}

  explicit SliceSeries(std::vector<Quaternion> coeffs,
                       double eval_radius = kDefaultEvalRadius,
                       bool exact = true);

  static SliceSeries identity() {
    return SliceSeries({Quaternion::zero(), Quaternion::one()});
  }
  static SliceSeries constant(const Quaternion& c) { return SliceSeries({c}); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  /// Coefficient a_n, zero past the stored order.
  Quaternion coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(coeffs_.size()))
               ? coeffs_[static_cast<std::size_t>(n)]
               : Quaternion::zero();
  }

  double eval_radius() const { return eval_radius_; }
  bool exact() const { return exact_; }
  /// True when some *-product along the way clamped the order.
  bool truncated() const { return truncated_; }
  double effective_eval_radius() const { return exact_ ? kExactEvalRadius : eval_radius_; }

  /// max_n |a_n| times the geometric tail past order(); 0 for exact series,
  /// +inf at radius >= 1 for truncated ones.
  double tail_bound(double radius) const;

  /// Horner evaluation a_0 + q (a_1 + q (a_2 + ...)).
  /// Throws std::domain_error("outside evaluation radius") past the allowed
  /// radius.
  Quaternion eval(const Quaternion& q) const;
  Quaternion operator()(const Quaternion& q) const { return eval(q); }

  /// Slice derivative: coefficients (n+1) a_{n+1}.
  SliceSeries derivative() const;

  SliceSeries& set_truncated(bool t) {
    truncated_ = t;
    return *this;
  }

 private:
  static constexpr double kExactEvalRadius = 2.0;

  std::vector<Quaternion> coeffs_;
  double eval_radius_ = kDefaultEvalRadius;
  bool exact_ = true;
  bool truncated_ = false;
};

/// Coefficient convolution sum_k a_k b_{n-k}; the order clamps to
/// min(order_f + order_g, max_order) and the result records whether the
/// clamp dropped anything.
SliceSeries star_product(const SliceSeries& f, const SliceSeries& g,
                         int max_order = SliceSeries::kMaxOrder);

/// Pointwise form of the *-product: f(q) g(f(q)^-1 q f(q)) when f(q) != 0,
/// else 0.
Quaternion pointwise_star(const SliceSeries& f, const SliceSeries& g,
                          const Quaternion& q);

/// Coefficient-wise conjugate: coefficients conj(a_n).
SliceSeries regular_conjugate(const SliceSeries& f);

/// f * f^c; all coefficients are real up to roundoff.
SliceSeries symmetrization(const SliceSeries& f,
                           int max_order = SliceSeries::kMaxOrder);

/// (f^s)^-1 f^c as a series truncated at `order`. Requires a_0 != 0
/// (otherwise the origin lies in the zero set of f^s).
SliceSeries regular_reciprocal(const SliceSeries& f, int order);

/// T_f(q) = f^c(q)^-1 q f^c(q). Throws when |f^c(q)| <= 1e-12.
Quaternion transform_T(const SliceSeries& f, const Quaternion& q);

/// Regular Moebius transformation (1 - q conj(u))^-* * (q - u) v of the unit
/// ball, |u| < 1, |v| = 1.
SliceSeries mobius(const Quaternion& u, const Quaternion& v,
                   int order = SliceSeries::kMaxOrder);

/// Slice regular rotation: coefficients u^n a_n for |u| = 1.
SliceSeries rotation(const SliceSeries& f, const Quaternion& u);

/// q * f, i.e. shift every coefficient up one degree.
SliceSeries premultiply_by_q(const SliceSeries& f);

/// Holomorphic series on a slice C_I, stored as real coefficient pairs
/// c_n = re[n] + I im[n] against the basis {1, I}.
struct SlicePlaneSeries {
  std::vector<double> re;
  std::vector<double> im;

  int order() const { return static_cast<int>(re.size()) - 1; }
  std::complex<double> coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(re.size()))
               ? std::complex<double>(re[static_cast<std::size_t>(n)],
                                      im[static_cast<std::size_t>(n)])
               : std::complex<double>(0.0, 0.0);
  }
  std::complex<double> eval(std::complex<double> z) const;
};

/// Splitting of f on the slice C_I against an orthogonal J:
/// f_I(z) = F(z) + G(z) J.
struct SplitPair {
  SlicePlaneSeries F;
  SlicePlaneSeries G;
};

/// Resolves each coefficient in the orthonormal basis {1, I, J, IJ}.
/// Requires <I, J> = 0 within 1e-12.
SplitPair split(const SliceSeries& f, const ImaginaryUnit& I,
                const ImaginaryUnit& J);

/// Evaluator for one slice: receives (x, y) and returns f(x + y I).
using SliceEvaluator = std::function<Quaternion(double, double)>;

/// Representation formula: rebuilds f(q) for q = x + y I_q from the values
/// on a single slice C_I,
///   f(q) = 1/2 (1 - I_q I) f(x + yI) + 1/2 (1 + I_q I) f(x - yI).
Quaternion represent(const SliceEvaluator& f_on_slice, const ImaginaryUnit& I,
                     const Quaternion& q);
Quaternion represent(const SliceSeries& f, const ImaginaryUnit& I,
                     const Quaternion& q);

}  // namespace sliceball
