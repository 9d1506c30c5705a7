#include "discnorm/duality.hpp"

#include "discnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace disc {

FunctionalWeights::FunctionalWeights(std::vector<double> times, SequenceD weights)
    : times_(std::move(times)), weights_(std::move(weights)) {
  if (times_.size() != static_cast<std::size_t>(weights_.size()))
    throw DomainError("times and weights differ in length");
  for (std::size_t i = 1; i < times_.size(); ++i)
    if (!(times_[i] > times_[i - 1])) throw DomainError("weight times must be strictly increasing");
  if (!weights_.allFinite()) throw DomainError("weights must be finite");
}

FunctionalWeights::FunctionalWeights(SequenceD weights) : weights_(std::move(weights)) {
  if (!weights_.allFinite()) throw DomainError("weights must be finite");
  times_.resize(static_cast<std::size_t>(weights_.size()));
  for (std::size_t i = 0; i < times_.size(); ++i) times_[i] = static_cast<double>(i);
}

double apply_functional(const FunctionalWeights& f, const EventSequence& eta) {
  const auto& times = f.times();
  double acc = 0.0;
  for (const auto& e : eta.events()) {
    const auto it = std::lower_bound(times.begin(), times.end(), e.t);
    if (it == times.end() || *it != e.t) throw DomainError("event at t = " + std::to_string(e.t) + " has no weight");
    acc += f.weights()(it - times.begin()) * static_cast<double>(e.v);
  }
  return acc;
}

DualWitness dual_discrepancy_fast(const FunctionalWeights& f) {
  const Eigen::Index n = f.size();
  if (n < 1) throw DomainError("dual norm needs at least one weight");
  const auto& w = f.weights();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  DualWitness best{0.0, SequenceI::Zero(n)};
  // For a fixed leading sign s the walk of partial sums toggles between 0
  // (closed) and s (open). Two-state DP, with choices kept for backtracking.
  for (const int s : {+1, -1}) {
    double closed = 0.0;
    double open = kNegInf;
    // take_open[i]: at index i the best "open" value came from opening here;
    // take_closed[i]: the best "closed" value came from closing here.
    std::vector<char> took_open(static_cast<std::size_t>(n), 0);
    std::vector<char> took_closed(static_cast<std::size_t>(n), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double v = s * w(i);
      const double open_new = closed + v;
      const double closed_new = open - v;
      if (open_new > open) {
        took_open[static_cast<std::size_t>(i)] = 1;
      }
      if (closed_new > closed) {
        took_closed[static_cast<std::size_t>(i)] = 1;
      }
      const double prev_closed = closed;
      closed = std::max(closed, closed_new);
      open = std::max(open, prev_closed + v);
    }
    if (closed > best.value) {
      best.value = closed;
      best.witness.setZero();
      bool in_open = false;
      for (Eigen::Index i = n - 1; i >= 0; --i) {
        const auto u = static_cast<std::size_t>(i);
        if (!in_open && took_closed[u]) {
          best.witness(i) = -s;
          in_open = true;
        } else if (in_open && took_open[u]) {
          best.witness(i) = s;
          in_open = false;
        }
      }
    }
  }
  if (best.value == 0.0 && n >= 2) {
    // Constant weights: any adjacent +1, -1 pair attains the value 0.
    best.witness(0) = 1;
    best.witness(1) = -1;
  }
  return best;
}

namespace {

/// Visits every vector of {lo..hi}^n in odometer order.
template <typename Visit>
void enumerate(Eigen::Index n, int lo, int hi, Visit visit) {
  SequenceI eta = SequenceI::Constant(n, lo);
  while (true) {
    visit(eta);
    Eigen::Index i = 0;
    while (i < n && eta(i) == hi) eta(i++) = lo;
    if (i == n) return;
    ++eta(i);
  }
}

}  // namespace

double dual_discrepancy_oracle(const FunctionalWeights& f, OracleMode mode) {
  const Eigen::Index n = f.size();
  const Eigen::Index limit = mode == OracleMode::UnitSteps ? 12 : 8;
  if (n > limit) throw DomainError("dual oracle limited to n <= " + std::to_string(limit));
  const int amp = mode == OracleMode::UnitSteps ? 1 : 2;
  const SequenceD& w = f.weights();
  double best = 0.0;
  enumerate(n, -amp, amp, [&](const SequenceI& eta) {
    if (eta.sum() != 0) return;
    const std::int64_t d = discrepancy_naive(eta);
    if (d == 0) return;
    const double value = std::abs(w.dot(eta.cast<double>())) / static_cast<double>(d);
    best = std::max(best, value);
  });
  return best;
}

std::vector<Eigen::Index> local_extrema(const SequenceD& f) {
  // Collapse plateaus to their first index.
  std::vector<Eigen::Index> runs;
  for (Eigen::Index i = 0; i < f.size(); ++i)
    if (i == 0 || f(i) != f(i - 1)) runs.push_back(i);
  if (runs.size() < 2) return {};
  std::vector<Eigen::Index> out{runs.front()};
  for (std::size_t k = 1; k + 1 < runs.size(); ++k) {
    const double prev = f(runs[k - 1]);
    const double cur = f(runs[k]);
    const double next = f(runs[k + 1]);
    if ((cur > prev) != (next > cur)) out.push_back(runs[k]);
  }
  out.push_back(runs.back());
  return out;
}

DualWitness alexiewicz_dual(const FunctionalWeights& f) {
  const SequenceD& w = f.weights();
  if (w.size() < 1) throw DomainError("dual norm needs at least one weight");
  DualWitness out{total_variation(w), SequenceI::Zero(w.size())};
  const auto ext = local_extrema(w);
  if (ext.empty()) return out;
  // First extremum is a minimum iff the function rises after it.
  std::int64_t sign = w(ext[1]) > w(ext[0]) ? -1 : +1;
  for (std::size_t k = 0; k < ext.size(); ++k) {
    const bool boundary = k == 0 || k + 1 == ext.size();
    out.witness(ext[k]) = sign * (boundary ? 1 : 2);
    sign = -sign;
  }
  return out;
}

double monotonicity_measure(const FunctionalWeights& f, double tol) {
  if (f.size() < 1) throw DomainError("monotonicity measure needs at least one weight");
  const double bv = total_variation(f.weights());
  if (bv == 0.0) throw DomainError("monotonicity measure is undefined for constant input");
  const double mu = dual_discrepancy_fast(f).value / bv;
  if (mu < 0.5 - tol || mu > 1.0 + tol)
    throw std::logic_error("monotonicity measure " + std::to_string(mu) + " outside [1/2, 1]");
  return std::clamp(mu, 0.5, 1.0);
}

DualNormReport dual_norm_report(const FunctionalWeights& f, double tol) {
  DualNormReport rep;
  const auto d = dual_discrepancy_fast(f);
  const auto a = alexiewicz_dual(f);
  rep.dual_d = d.value;
  rep.witness = d.witness;
  rep.dual_a = a.value;
  rep.witness_a = a.witness;
  rep.bv = total_variation(f.weights());
  if (rep.bv > 0.0) rep.mu_mon = monotonicity_measure(f, tol);
  return rep;
}

BoundednessReport boundedness_check(const FunctionalWeights& f) {
  const SequenceD& w = f.weights();
  BoundednessReport rep;
  if (w.size() == 0) return rep;
  rep.bound = total_variation(w);
  rep.bound_any = rep.bound + std::min(std::abs(w(0)), std::abs(w(w.size() - 1)));
  rep.bounded = std::isfinite(rep.bound_any);
  return rep;
}

bool satisfies_bound(const FunctionalWeights& f, const EventSequence& eta, const BoundednessReport& report,
                     double tol) {
  const double m = eta.values().sum() == 0 ? report.bound : report.bound_any;
  return std::abs(apply_functional(f, eta)) <= m * static_cast<double>(event_discrepancy(eta)) + tol;
}

EventSequence witness_events(const FunctionalWeights& f, const SequenceI& witness) {
  return EventSequence::from_values(f.times(), witness);
}

}  // namespace disc
