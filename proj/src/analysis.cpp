#include "discnorm/analysis.hpp"

#include "discnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace disc {

SequenceD shifted_difference(const SequenceD& x, Eigen::Index k) {
  const Eigen::Index n = x.size();
  if (n == 0) return SequenceD(0);
  auto padded = [&](Eigen::Index i) { return i >= 0 && i < n ? x(i) : 0.0; };
  const Eigen::Index lo = std::min<Eigen::Index>(0, -k);
  const Eigen::Index hi = std::max<Eigen::Index>(n - 1, n - 1 - k);
  SequenceD y(hi - lo + 1);
  for (Eigen::Index i = lo; i <= hi; ++i) y(i - lo) = padded(i + k) - padded(i);
  return y;
}

double MisalignmentProfile::at(Eigen::Index k) const {
  const Eigen::Index k_max = (deltas.size() - 1) / 2;
  if (k < -k_max || k > k_max) throw std::out_of_range("shift outside misalignment profile");
  return deltas(k + k_max);
}

MisalignmentProfile misalignment(const SequenceD& x, Eigen::Index k_max) {
  if (k_max < 0) k_max = x.size();
  MisalignmentProfile p;
  p.deltas.resize(2 * k_max + 1);
  p.deltas_l2.resize(2 * k_max + 1);
  for (Eigen::Index k = -k_max; k <= k_max; ++k) {
    const SequenceD y = shifted_difference(x, k);
    p.k_values.push_back(k);
    p.deltas(k + k_max) = discrepancy(y);
    p.deltas_l2(k + k_max) = y.norm();
  }
  if (x.size() > 0) p.lipschitz_L = std::max(x.maxCoeff(), 0.0) - std::min(x.minCoeff(), 0.0);
  return p;
}

bool check_p4_lipschitz(const SequenceD& x, Eigen::Index k_max, double tol) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  const auto p = misalignment(x, k_max);
  for (Eigen::Index k = -k_max; k <= k_max; ++k)
    if (p.at(k) > static_cast<double>(std::abs(k)) * p.lipschitz_L + tol) return false;
  return true;
}

bool check_p5_symmetric(const SequenceD& x, Eigen::Index k_max, double tol) {
  const auto p = misalignment(x, k_max);
  for (Eigen::Index k = 1; k <= k_max; ++k)
    if (std::abs(p.at(k) - p.at(-k)) > tol) return false;
  return true;
}

bool check_p6_monotone(const SequenceD& x, Eigen::Index k_max, double tol) {
  if (x.size() > 0 && x.minCoeff() < 0.0) throw DomainError("monotone misalignment requires nonnegative entries");
  const auto p = misalignment(x, k_max);
  for (Eigen::Index k = 1; k <= k_max; ++k)
    if (p.at(k) + tol < p.at(k - 1)) return false;
  return true;
}

HeisenbergReport heisenberg_check(const SequenceD& x, double tol) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) != -1.0 && x(i) != 0.0 && x(i) != 1.0) throw DomainError("entries must lie in {-1, 0, 1}");
  if (x.size() == 0) throw DomainError("empty sequence");
  const SequenceI xi = x.cast<std::int64_t>();

  HeisenbergReport rep;
  const std::int64_t bv = total_variation(xi);
  if (bv == 0) throw DomainError("inequality requires a non-constant sequence");
  const std::int64_t l1 = xi.cwiseAbs().sum();
  const std::int64_t disc = discrepancy(xi);
  rep.l1 = static_cast<double>(l1);
  rep.disc = static_cast<double>(disc);
  rep.bv = static_cast<double>(bv);
  rep.slack = static_cast<double>(disc * bv - l1);
  rep.holds = rep.slack >= -tol;

  std::vector<std::int64_t> nonzero;
  for (Eigen::Index i = 0; i < xi.size(); ++i)
    if (xi(i) != 0) nonzero.push_back(xi(i));
  std::int64_t bv_hat = 0;
  for (std::size_t i = 1; i < nonzero.size(); ++i) {
    if (nonzero[i] != nonzero[i - 1]) ++rep.S;
    bv_hat += std::abs(nonzero[i] - nonzero[i - 1]);
  }
  rep.bv_cancelled = static_cast<double>(bv_hat);
  return rep;
}

}  // namespace disc
