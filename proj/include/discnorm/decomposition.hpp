#pragma once

// Jordan-type decompositions for bounded discrepancy.
//
// Discrete: eta(k) = (chi2(k) - chi2(k-1)) - (chi1(k) - chi1(k-1)) with
// chi1, chi2 nondecreasing and |chi2 - chi1|_inf <= |eta|_D / 2.
// Continuous: f = h2' - h1' with h1, h2 nondecreasing and
// |h2 - h1|_inf <= |f|_{D,lambda} / 2.
//
// Inputs are finite, so every liminf in the unbounded-domain statements
// reduces to a plain cumulative sum or integral.

#include "discnorm/common.hpp"
#include "discnorm/norms.hpp"
#include "discnorm/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace disc {

/// chi1, chi2 have length n + 1 and are indexed from k = 0, with
/// chi1(0) = 0 and chi2(0) = -alpha.
template <typename Real>
struct DiscreteJordan {
  Sequence<Real> chi1;
  Sequence<Real> chi2;
  Real alpha = Real(0);
  Real r = Real(0);
};

template <typename Derived>
DiscreteJordan<real_t<typename Derived::Scalar>> jordan_discrete(const Eigen::MatrixBase<Derived>& eta) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(Derived);
  using Real = real_t<typename Derived::Scalar>;
  const Eigen::Index n = eta.size();
  DiscreteJordan<Real> out;
  out.chi1.resize(n + 1);
  out.chi2.resize(n + 1);
  out.chi1(0) = Real(0);
  out.chi2(0) = Real(0);
  for (Eigen::Index k = 1; k <= n; ++k) {
    const Real v = static_cast<Real>(eta(k - 1));
    out.chi2(k) = out.chi2(k - 1) + std::max(Real(0), v);
    out.chi1(k) = out.chi1(k - 1) - std::min(Real(0), v);
  }
  // chi2 - chi1 is the prefix-sum walk; centring it on the midpoint of its
  // range bounds the gap by half the range.
  const auto range = prefix_range(eta);
  out.r = static_cast<Real>(range.width());
  out.alpha = (static_cast<Real>(range.max) + static_cast<Real>(range.min)) / Real(2);
  out.chi2.array() -= out.alpha;
  return out;
}

/// Inverts the decomposition: eta(k) = diff(chi2)(k) - diff(chi1)(k), k = 1..n.
template <typename Real>
Sequence<Real> reconstruct(const DiscreteJordan<Real>& j) {
  const Eigen::Index n = j.chi1.size() - 1;
  if (n <= 0) return Sequence<Real>(0);
  return (j.chi2.tail(n) - j.chi2.head(n)) - (j.chi1.tail(n) - j.chi1.head(n));
}

template <typename Derived>
bool is_nondecreasing(const Eigen::MatrixBase<Derived>& x) {
  for (Eigen::Index i = 1; i < x.size(); ++i)
    if (x(i) < x(i - 1)) return false;
  return true;
}

/// Converse direction: nondecreasing chi1, chi2 with |chi2 - chi1|_inf <= s
/// certify |eta|_D <= 2 s for the sequence they encode. Returns that 2 s
/// (using the tightest s). Throws DomainError on non-monotone input.
template <typename D1, typename D2>
real_t<typename D1::Scalar> certified_discrepancy_bound(const Eigen::MatrixBase<D1>& chi1,
                                                        const Eigen::MatrixBase<D2>& chi2) {
  using Real = real_t<typename D1::Scalar>;
  if (chi1.size() != chi2.size()) throw DomainError("chi1 and chi2 differ in length");
  if (!is_nondecreasing(chi1) || !is_nondecreasing(chi2)) throw DomainError("Jordan parts must be nondecreasing");
  if (chi1.size() == 0) return Real(0);
  return Real(2) * static_cast<Real>((chi2 - chi1).cwiseAbs().maxCoeff());
}

/// h1, h2 sampled on the n + 1 grid points t0 + k dt, k = 0..n.
struct ContinuousJordan {
  SequenceD h1;
  SequenceD h2;
  double c_star = 0.0;
  double r = 0.0;
  double t0 = 0.0;
  double dt = 1.0;
  /// Maximizing window [a*, b*] of |int f| on the grid.
  double a_star = 0.0;
  double b_star = 0.0;
};

/// Splits f into f+ = max(f, 0) and f- = min(f, 0) and integrates both
/// from the half-mass point c* of a maximizing window. Requires >= 2 samples.
ContinuousJordan jordan_continuous(const Signal& f);

/// max_k |((h2 - h1)(k+1) - (h2 - h1)(k)) / dt - f_k|.
double derivative_residual(const ContinuousJordan& j, const Signal& f);

/// g = Gamma - c with Gamma the cumulative integral (Gamma(t0) = 0) and
/// c = min Gamma, so that g ranges exactly over [0, r].
struct RangeFunction {
  SequenceD g;
  SequenceD gamma;
  double c = 0.0;
  double r = 0.0;
};

/// Requires >= 2 samples.
RangeFunction range_function(const Signal& f);

}  // namespace disc
