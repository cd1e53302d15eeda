#include "sliceball/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sliceball {

namespace {

int clamp_order(int requested) {
  return std::clamp(requested, 0, SliceSeries::kHardMaxOrder);
}

}  // namespace

SliceSeries::SliceSeries(std::vector<Quaternion> coeffs, double eval_radius,
                         bool exact)
    : coeffs_(std::move(coeffs)), eval_radius_(eval_radius), exact_(exact) {
  if (coeffs_.empty()) {
    coeffs_.push_back(Quaternion::zero());
  }
  for (const Quaternion& c : coeffs_) {
    if (!c.is_finite()) {
      throw std::domain_error("SliceSeries: non-finite coefficient");
    }
  }
  if (!(eval_radius_ > 0.0) || !std::isfinite(eval_radius_)) {
    throw std::domain_error("SliceSeries: invalid evaluation radius");
  }
}

double SliceSeries::tail_bound(double radius) const {
  if (exact_) {
    return 0.0;
  }
  if (radius >= 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  double max_norm = 0.0;
  for (const Quaternion& c : coeffs_) {
    max_norm = std::max(max_norm, c.norm());
  }
  // sum_{n > N} r^n = r^{N+1} / (1 - r)
  return max_norm * std::pow(radius, order() + 1) / (1.0 - radius);
}

Quaternion SliceSeries::eval(const Quaternion& q) const {
  if (q.norm() > effective_eval_radius() + 1e-12) {
    throw std::domain_error("outside evaluation radius");
  }
  Quaternion acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    acc = *it + q * acc;
  }
  return acc;
}

SliceSeries SliceSeries::derivative() const {
  std::vector<Quaternion> d;
  if (coeffs_.size() > 1) {
    d.reserve(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      d.push_back(coeffs_[n] * static_cast<double>(n));
    }
  } else {
    d.push_back(Quaternion::zero());
  }
  SliceSeries out(std::move(d), eval_radius_, exact_);
  out.truncated_ = truncated_;
  return out;
}

SliceSeries star_product(const SliceSeries& f, const SliceSeries& g,
                         int max_order) {
  const int cap = clamp_order(max_order);
  const int full = f.order() + g.order();
  const int n_out = std::min(full, cap);
  std::vector<Quaternion> c(static_cast<std::size_t>(n_out) + 1,
                            Quaternion::zero());
  for (int i = 0; i <= f.order(); ++i) {
    const Quaternion& a = f.coeffs()[static_cast<std::size_t>(i)];
    const int j_max = std::min(g.order(), n_out - i);
    for (int j = 0; j <= j_max; ++j) {
      c[static_cast<std::size_t>(i + j)] +=
          a * g.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  const bool clipped = full > cap;
  SliceSeries out(std::move(c), std::min(f.eval_radius(), g.eval_radius()),
                  f.exact() && g.exact() && !clipped);
  out.set_truncated(clipped || f.truncated() || g.truncated());
  return out;
}

Quaternion pointwise_star(const SliceSeries& f, const SliceSeries& g,
                          const Quaternion& q) {
  const Quaternion fq = f.eval(q);
  if (fq.norm_sq() == 0.0) {
    return Quaternion::zero();
  }
  const Quaternion conjugated = fq.inverse() * q * fq;
  return fq * g.eval(conjugated);
}

SliceSeries regular_conjugate(const SliceSeries& f) {
  std::vector<Quaternion> c;
  c.reserve(f.coeffs().size());
  for (const Quaternion& a : f.coeffs()) {
    c.push_back(a.conj());
  }
  SliceSeries out(std::move(c), f.eval_radius(), f.exact());
  out.set_truncated(f.truncated());
  return out;
}

SliceSeries symmetrization(const SliceSeries& f, int max_order) {
  return star_product(f, regular_conjugate(f), max_order);
}

SliceSeries regular_reciprocal(const SliceSeries& f, int order) {
  const int n_out = clamp_order(order);
  if (f.coeff(0).norm_sq() < std::numeric_limits<double>::min()) {
    throw std::domain_error("reciprocal pole at origin");
  }
  const SliceSeries fc = regular_conjugate(f);
  const SliceSeries fs = star_product(f, fc, n_out);

  // f^s has real (hence central) coefficients, so the classical power-series
  // recursion applies: b_0 = 1/c_0, b_n = -(1/c_0) sum_{k=1..n} c_k b_{n-k}.
  std::vector<double> c(static_cast<std::size_t>(n_out) + 1, 0.0);
  for (int n = 0; n <= n_out; ++n) {
    c[static_cast<std::size_t>(n)] = fs.coeff(n).w;
  }
  std::vector<double> b(static_cast<std::size_t>(n_out) + 1, 0.0);
  b[0] = 1.0 / c[0];
  for (int n = 1; n <= n_out; ++n) {
    double s = 0.0;
    for (int k = 1; k <= n; ++k) {
      s += c[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
    }
    b[static_cast<std::size_t>(n)] = -s / c[0];
  }
  std::vector<Quaternion> inv;
  inv.reserve(b.size());
  for (double v : b) {
    inv.push_back(Quaternion(v));
  }
  SliceSeries inv_series(std::move(inv),
                         std::min(f.eval_radius(), SliceSeries::kDefaultEvalRadius),
                         /*exact=*/false);
  return star_product(inv_series, fc, n_out);
}

Quaternion transform_T(const SliceSeries& f, const Quaternion& q) {
  const Quaternion w = regular_conjugate(f).eval(q);
  if (w.norm() <= 1e-12) {
    throw std::domain_error("zero divisor in T_f");
  }
  return w.inverse() * q * w;
}

SliceSeries mobius(const Quaternion& u, const Quaternion& v, int order) {
  if (!(u.norm() < 1.0)) {
    throw std::domain_error("mobius: |u| must be < 1");
  }
  if (std::abs(v.norm() - 1.0) >= 1e-12) {
    throw std::domain_error("mobius: |v| must be 1");
  }
  const int n_out = clamp_order(order);
  const SliceSeries denom({Quaternion::one(), -u.conj()});
  const SliceSeries numer({-(u * v), v});
  return star_product(regular_reciprocal(denom, n_out), numer, n_out);
}

SliceSeries rotation(const SliceSeries& f, const Quaternion& u) {
  if (std::abs(u.norm() - 1.0) >= 1e-12) {
    throw std::domain_error("rotation: |u| must be 1");
  }
  std::vector<Quaternion> c;
  c.reserve(f.coeffs().size());
  Quaternion power = Quaternion::one();
  for (const Quaternion& a : f.coeffs()) {
    c.push_back(power * a);
    power = power * u;
  }
  SliceSeries out(std::move(c), f.eval_radius(), f.exact());
  out.set_truncated(f.truncated());
  return out;
}

SliceSeries premultiply_by_q(const SliceSeries& f) {
  std::vector<Quaternion> c;
  c.reserve(f.coeffs().size() + 1);
  c.push_back(Quaternion::zero());
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  SliceSeries out(std::move(c), f.eval_radius(), f.exact());
  out.set_truncated(f.truncated());
  return out;
}

std::complex<double> SlicePlaneSeries::eval(std::complex<double> z) const {
  std::complex<double> acc(0.0, 0.0);
  for (int n = order(); n >= 0; --n) {
    acc = acc * z + coeff(n);
  }
  return acc;
}

SplitPair split(const SliceSeries& f, const ImaginaryUnit& I,
                const ImaginaryUnit& J) {
  if (std::abs(dot4(I.value(), J.value())) > 1e-12) {
    throw std::domain_error("split: J must be orthogonal to I");
  }
  const Quaternion K = I.value() * J.value();
  const std::size_t n = f.coeffs().size();
  SplitPair out;
  out.F.re.resize(n);
  out.F.im.resize(n);
  out.G.re.resize(n);
  out.G.im.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    // a = alpha + beta I + gamma J + delta IJ in the orthonormal basis
    // {1, I, J, IJ}; then q^m a contributes (alpha + beta I) + (gamma +
    // delta I) J on the slice.
    const Quaternion& a = f.coeffs()[m];
    out.F.re[m] = a.w;
    out.F.im[m] = dot4(a, I.value());
    out.G.re[m] = dot4(a, J.value());
    out.G.im[m] = dot4(a, K);
  }
  return out;
}

Quaternion represent(const SliceEvaluator& f_on_slice, const ImaginaryUnit& I,
                     const Quaternion& q) {
  const SliceDecomposition d = decompose(q);
  const Quaternion plus = f_on_slice(d.x, d.y);
  const Quaternion minus = f_on_slice(d.x, -d.y);
  const Quaternion iq_i = d.axis.value() * I.value();
  const Quaternion half_minus = (Quaternion::one() - iq_i) * 0.5;
  const Quaternion half_plus = (Quaternion::one() + iq_i) * 0.5;
  return half_minus * plus + half_plus * minus;
}

Quaternion represent(const SliceSeries& f, const ImaginaryUnit& I,
                     const Quaternion& q) {
  return represent(
      [&](double x, double y) {
        return f.eval(Quaternion(x) + I.value() * y);
      },
      I, q);
}

}  // namespace sliceball
