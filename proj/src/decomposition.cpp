#include "discnorm/decomposition.hpp"

namespace disc {

ContinuousJordan jordan_continuous(const Signal& f) {
  if (f.size() < 2) throw DomainError("continuous Jordan decomposition needs at least two samples");
  const Eigen::Index n = f.size();
  const auto& x = f.samples();
  const SequenceD F = cumulative_integral(f);

  ContinuousJordan out;
  out.t0 = f.t0();
  out.dt = f.dt();
  out.h1 = SequenceD::Zero(n + 1);
  out.h2 = SequenceD::Zero(n + 1);

  Eigen::Index imax = 0;
  Eigen::Index imin = 0;
  F.maxCoeff(&imax);
  F.minCoeff(&imin);
  out.r = F(imax) - F(imin);
  if (out.r == 0.0) {
    out.c_star = out.a_star = out.b_star = f.t0();
    return out;
  }

  const Eigen::Index a = std::min(imax, imin);
  const Eigen::Index b = std::max(imax, imin);
  out.a_star = f.t0() + static_cast<double>(a) * f.dt();
  out.b_star = f.t0() + static_cast<double>(b) * f.dt();

  // F is piecewise linear between grid points; find the first cell in
  // [a*, b*] where it crosses the half-mass level.
  const double target = (F(imax) + F(imin)) / 2.0;
  const double direction = F(b) > F(a) ? 1.0 : -1.0;
  Eigen::Index cell = b - 1;
  for (Eigen::Index k = a + 1; k <= b; ++k) {
    if (direction * (F(k) - target) >= 0.0) {
      cell = k - 1;
      break;
    }
  }
  const double slope = F(cell + 1) - F(cell);
  const double frac = slope != 0.0 ? std::clamp((target - F(cell)) / slope, 0.0, 1.0) : 0.0;
  out.c_star = f.t0() + (static_cast<double>(cell) + frac) * f.dt();

  SequenceD pos(n + 1);
  SequenceD neg(n + 1);
  pos(0) = neg(0) = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    pos(i + 1) = pos(i) + std::max(x(i), 0.0) * f.dt();
    neg(i + 1) = neg(i) + std::min(x(i), 0.0) * f.dt();
  }
  const double pos_c = pos(cell) + std::max(x(cell), 0.0) * frac * f.dt();
  const double neg_c = neg(cell) + std::min(x(cell), 0.0) * frac * f.dt();
  out.h2 = pos.array() - pos_c;
  out.h1 = -(neg.array() - neg_c);
  return out;
}

double derivative_residual(const ContinuousJordan& j, const Signal& f) {
  const Eigen::Index n = f.size();
  if (j.h1.size() != n + 1 || j.h2.size() != n + 1) throw DomainError("decomposition does not match signal grid");
  const SequenceD gap = j.h2 - j.h1;
  const SequenceD deriv = (gap.tail(n) - gap.head(n)) / f.dt();
  return (deriv - f.samples()).cwiseAbs().maxCoeff();
}

RangeFunction range_function(const Signal& f) {
  if (f.size() < 2) throw DomainError("range function needs at least two samples");
  RangeFunction out;
  out.gamma = cumulative_integral(f);
  out.c = out.gamma.minCoeff();
  out.g = out.gamma.array() - out.c;
  out.r = out.g.maxCoeff();
  return out;
}

}  // namespace disc
