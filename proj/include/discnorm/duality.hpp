#pragma once

// Linear functionals on event sequences induced by pointwise weights,
//   L_f(eta) = sum_k f(t_k) eta(t_k),
// their dual norms w.r.t. the discrepancy and Alexiewicz norms, and the
// monotonicity measure mu_mon(f) = |f|_D* / |f|_BV.
//
// The dual norms are taken over zero-sum event sequences (sum eta = 0).
// On that subspace L_f depends on f only up to an additive constant, which
// is what makes |f|_BV / 2 <= |f|_D* <= |f|_BV and |f|_A* = |f|_BV hold;
// over all sequences a constant f = c would have dual norm |c|.

#include "discnorm/common.hpp"
#include "discnorm/events.hpp"

#include <optional>
#include <vector>

namespace disc {

/// Weights f(t_i) at strictly increasing times t_i.
class FunctionalWeights {
 public:
  /// Throws DomainError on length mismatch, non-increasing times or non-finite weights.
  FunctionalWeights(std::vector<double> times, SequenceD weights);

  /// Times 0, 1, ..., n - 1.
  explicit FunctionalWeights(SequenceD weights);

  const std::vector<double>& times() const noexcept { return times_; }
  const SequenceD& weights() const noexcept { return weights_; }
  Eigen::Index size() const noexcept { return weights_.size(); }

 private:
  std::vector<double> times_;
  SequenceD weights_;
};

/// sum over events of f(t) * v. Throws DomainError when an event time has no weight.
double apply_functional(const FunctionalWeights& f, const EventSequence& eta);

/// Dual value together with an event-value vector (one entry per weight)
/// attaining it.
struct DualWitness {
  double value = 0.0;
  SequenceI witness;
};

/// |f|_D* in O(n): maximum of sum f * eta over eta in {-1, 0, 1}^n whose
/// nonzero entries alternate in sign and sum to zero. These are the
/// vertices of the zero-sum slice of the discrepancy unit ball. Requires n >= 1.
DualWitness dual_discrepancy_fast(const FunctionalWeights& f);

enum class OracleMode {
  UnitSteps,  ///< eta in {-1, 0, 1}^n, n <= 12
  Extended    ///< eta in {-2, ..., 2}^n, n <= 8
};

/// Brute force: max |sum f * eta| / |eta|_D over all nonzero zero-sum eta
/// of the chosen alphabet. Throws DomainError when n exceeds the mode's limit.
double dual_discrepancy_oracle(const FunctionalWeights& f, OracleMode mode = OracleMode::UnitSteps);

/// |f|_A* = |f|_BV, with the witness built from the local extrema of f:
/// -+1 at the first extremum, -+2 alternating at interior extrema and -+1 at
/// the last one, so every partial sum is +-1 or 0. Plateaus count once, at
/// their first index.
DualWitness alexiewicz_dual(const FunctionalWeights& f);

/// Indices of the local extrema of f (endpoints included), plateaus
/// collapsed to their first index. Empty for constant f.
std::vector<Eigen::Index> local_extrema(const SequenceD& f);

/// mu_mon(f) = |f|_D* / |f|_BV in [1/2, 1]. Throws DomainError for constant f.
double monotonicity_measure(const FunctionalWeights& f, double tol = kDefaultTol);

struct DualNormReport {
  double dual_d = 0.0;
  double bv = 0.0;
  double dual_a = 0.0;
  std::optional<double> mu_mon;  ///< empty for constant f
  SequenceI witness;             ///< attains dual_d
  SequenceI witness_a;           ///< attains dual_a
};

DualNormReport dual_norm_report(const FunctionalWeights& f, double tol = kDefaultTol);

/// Bound M with |L_f(eta)| <= M |eta|_D. For zero-sum eta M = |f|_BV; for
/// arbitrary eta the boundary term adds min(|f_first|, |f_last|).
struct BoundednessReport {
  bool bounded = true;
  double bound = 0.0;
  double bound_any = 0.0;
};

BoundednessReport boundedness_check(const FunctionalWeights& f);

/// Checks |L_f(eta)| <= M |eta|_D + tol with the M appropriate for eta.
bool satisfies_bound(const FunctionalWeights& f, const EventSequence& eta, const BoundednessReport& report,
                     double tol = kDefaultTol);

/// Places a witness vector on the weight times.
EventSequence witness_events(const FunctionalWeights& f, const SequenceI& witness);

}  // namespace disc
