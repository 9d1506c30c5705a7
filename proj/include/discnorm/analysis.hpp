#pragma once

// Misalignment function Delta_x(k) = |(x_{i+k} - x_i)_i|_D of a zero-padded
// sequence, its structural properties, and the discrepancy/variation
// inequality |x|_1 <= |x|_D |x|_BV for x in {-1, 0, 1}^n.

#include "discnorm/common.hpp"

#include <vector>

namespace disc {

/// x_{i+k} - x_i over the indices where at least one operand lies in the
/// support of x; everything outside is 0 - 0 and cannot change a window sum.
SequenceD shifted_difference(const SequenceD& x, Eigen::Index k);

struct MisalignmentProfile {
  std::vector<Eigen::Index> k_values;  ///< -k_max .. k_max
  SequenceD deltas;                    ///< discrepancy misalignment
  SequenceD deltas_l2;                 ///< Euclidean misalignment, for comparison
  double lipschitz_L = 0.0;            ///< max x_i - min x_i over the padded sequence

  /// Delta at shift k; throws std::out_of_range outside the profile.
  double at(Eigen::Index k) const;
};

/// Negative k_max selects the default k_max = x.size().
MisalignmentProfile misalignment(const SequenceD& x, Eigen::Index k_max = -1);

/// Delta_x(k) <= |k| L + tol for all |k| <= k_max, L including padded zeros.
bool check_p4_lipschitz(const SequenceD& x, Eigen::Index k_max, double tol = kDefaultTol);

/// Delta_x(k) = Delta_x(-k) within tol for all |k| <= k_max.
bool check_p5_symmetric(const SequenceD& x, Eigen::Index k_max, double tol = kDefaultTol);

/// Delta_x(0) <= Delta_x(1) <= ... <= Delta_x(k_max) (tol). Requires x >= 0,
/// throws DomainError otherwise.
bool check_p6_monotone(const SequenceD& x, Eigen::Index k_max, double tol = kDefaultTol);

struct HeisenbergReport {
  double l1 = 0.0;
  double disc = 0.0;
  double bv = 0.0;
  bool holds = false;
  double slack = 0.0;  ///< disc * bv - l1
  int S = 0;           ///< sign changes among the nonzero entries
  double bv_cancelled = 0.0;  ///< variation after removing zeros, equals 2 S
};

/// Requires entries in {-1, 0, 1} and a non-constant x; DomainError otherwise.
HeisenbergReport heisenberg_check(const SequenceD& x, double tol = kDefaultTol);

}  // namespace disc
