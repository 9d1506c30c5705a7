#pragma once

// Norms on finite real sequences: Weyl's discrepancy (window-sum and
// prefix-range forms), the Alexiewicz norm, total variation and p-norms.
// All functions accept any Eigen vector expression; integer scalars are
// evaluated in exact integer arithmetic.

#include "discnorm/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace disc {

/// Max and min of the partial sums S_0 = 0, S_k = x_1 + ... + x_k.
template <typename Scalar>
struct PrefixRange {
  Scalar max = Scalar(0);
  Scalar min = Scalar(0);

  Scalar width() const { return max - min; }
};

template <typename Derived>
PrefixRange<typename Derived::Scalar> prefix_range(const Eigen::MatrixBase<Derived>& x) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(Derived);
  using Scalar = typename Derived::Scalar;
  PrefixRange<Scalar> out;
  Scalar sum(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    sum += x(i);
    out.max = std::max(out.max, sum);
    out.min = std::min(out.min, sum);
  }
  return out;
}

/// Discrepancy norm by direct enumeration of all windows n1 <= n2, O(n^2).
template <typename Derived>
typename Derived::Scalar discrepancy_naive(const Eigen::MatrixBase<Derived>& x) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(Derived);
  using Scalar = typename Derived::Scalar;
  Scalar best(0);
  for (Eigen::Index lo = 0; lo < x.size(); ++lo) {
    Scalar sum(0);
    for (Eigen::Index hi = lo; hi < x.size(); ++hi) {
      sum += x(hi);
      best = std::max(best, sum < Scalar(0) ? Scalar(-sum) : sum);
    }
  }
  return best;
}

/// Discrepancy norm in O(n) as the range of the prefix-sum walk,
/// max{0, max_k S_k} - min{0, min_k S_k}.
template <typename Derived>
typename Derived::Scalar discrepancy(const Eigen::MatrixBase<Derived>& x) {
  return prefix_range(x).width();
}

/// Alexiewicz norm: max_k |S_k|. Satisfies |x|_D / 2 <= |x|_A <= |x|_D.
template <typename Derived>
typename Derived::Scalar alexiewicz(const Eigen::MatrixBase<Derived>& x) {
  const auto r = prefix_range(x);
  return std::max(r.max, static_cast<typename Derived::Scalar>(-r.min));
}

/// Sum of |x_{i+1} - x_i|. Throws DomainError on an empty sequence.
template <typename Derived>
typename Derived::Scalar total_variation(const Eigen::MatrixBase<Derived>& x) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(Derived);
  if (x.size() == 0) throw DomainError("total variation of an empty sequence is undefined");
  const Eigen::Index n = x.size();
  return (x.tail(n - 1) - x.head(n - 1)).cwiseAbs().sum();
}

template <typename Derived>
typename Derived::Scalar sup_norm(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  return x.size() == 0 ? Scalar(0) : x.cwiseAbs().maxCoeff();
}

/// (sum |x_i|^p)^(1/p); p = +inf gives the sup norm. Throws DomainError for p < 1.
template <typename Derived>
real_t<typename Derived::Scalar> p_norm(const Eigen::MatrixBase<Derived>& x, double p) {
  using Real = real_t<typename Derived::Scalar>;
  if (std::isnan(p) || p < 1.0) throw DomainError("p-norm requires p >= 1");
  const auto a = x.template cast<Real>().cwiseAbs();
  if (std::isinf(p)) return a.size() == 0 ? Real(0) : a.maxCoeff();
  if (p == 1.0) return a.sum();
  if (p == 2.0) return std::sqrt(a.squaredNorm());
  return std::pow(a.array().pow(Real(p)).sum(), Real(1.0 / p));
}

struct NormKind {
  enum class Tag { Discrepancy, Alexiewicz, TotalVariation, P, Sup };

  Tag tag = Tag::Discrepancy;
  double p = 2.0;

  static NormKind discrepancy() { return {Tag::Discrepancy}; }
  static NormKind alexiewicz() { return {Tag::Alexiewicz}; }
  static NormKind total_variation() { return {Tag::TotalVariation}; }
  static NormKind sup() { return {Tag::Sup}; }
  static NormKind lp(double p) {
    if (std::isnan(p) || p < 1.0) throw DomainError("p-norm requires p >= 1");
    return {Tag::P, p};
  }
};

template <typename Derived>
real_t<typename Derived::Scalar> norm(const Eigen::MatrixBase<Derived>& x, const NormKind& kind) {
  using Real = real_t<typename Derived::Scalar>;
  switch (kind.tag) {
    case NormKind::Tag::Discrepancy: return static_cast<Real>(discrepancy(x));
    case NormKind::Tag::Alexiewicz: return static_cast<Real>(alexiewicz(x));
    case NormKind::Tag::TotalVariation: return static_cast<Real>(total_variation(x));
    case NormKind::Tag::Sup: return static_cast<Real>(sup_norm(x));
    case NormKind::Tag::P: return p_norm(x, kind.p);
  }
  return Real(0);
}

/// True when every entry is an integer value, so a double sequence can be
/// routed through the exact integer path.
template <typename Derived>
bool is_integer_valued(const Eigen::MatrixBase<Derived>& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double v = static_cast<double>(x(i));
    if (!std::isfinite(v) || v != std::trunc(v) || std::abs(v) > 9.0e15) return false;
  }
  return true;
}

/// Discrepancy of a double sequence, exact when all entries are integers.
inline double discrepancy_exact_if_integral(const SequenceD& x) {
  if (is_integer_valued(x)) return static_cast<double>(discrepancy(x.cast<std::int64_t>()));
  return discrepancy(x);
}

}  // namespace disc
