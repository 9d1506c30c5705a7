#pragma once

// Threshold-based encoders (send-on-delta, integrate-and-fire) mapping
// uniformly sampled signals to event sequences, the matching input-space
// metrics, and verification of the quasi-isometry bounds
//   d_in / A - B <= d_out <= A d_in + B,   A = 1, B = 4 theta.

#include "discnorm/common.hpp"
#include "discnorm/events.hpp"

#include <vector>

namespace disc {

/// Uniformly sampled signal: samples[i] is the value at t0 + i * dt.
class Signal {
 public:
  /// Throws DomainError unless dt > 0, samples is nonempty and finite.
  Signal(double t0, double dt, SequenceD samples);

  double t0() const noexcept { return t0_; }
  double dt() const noexcept { return dt_; }
  const SequenceD& samples() const noexcept { return samples_; }
  Eigen::Index size() const noexcept { return samples_.size(); }
  double time(Eigen::Index i) const noexcept { return t0_ + static_cast<double>(i) * dt_; }

  /// Samples f(t0 + i dt) for i = 0 .. n-1.
  template <typename F>
  static Signal sample(F&& f, double t0, double dt, Eigen::Index n) {
    SequenceD s(n);
    for (Eigen::Index i = 0; i < n; ++i) s(i) = f(t0 + static_cast<double>(i) * dt);
    return Signal(t0, dt, std::move(s));
  }

 private:
  double t0_;
  double dt_;
  SequenceD samples_;
};

/// True when both signals live on the same grid (t0, dt within tol, equal length).
bool same_grid(const Signal& f, const Signal& g, double tol = kDefaultTol);

/// Sample-wise f - g. Throws DomainError on mismatched grids.
Signal operator-(const Signal& f, const Signal& g);

enum class Scheme { SendOnDelta, IntegrateAndFire };

/// What the integrator does after firing.
enum class IfReset {
  Subtract,  ///< u <- u - theta per event (residual carried over)
  Zero       ///< u <- 0 after the events of a sample
};

struct SamplerConfig {
  Scheme scheme = Scheme::SendOnDelta;
  double theta = 1.0;
  IfReset reset = IfReset::Subtract;

  /// Throws DomainError unless theta > 0.
  void validate() const;
};

/// Send-on-delta: reference level starts at samples[0]; every sample moves
/// it by +-theta per emitted event until |x - y| < theta.
EventSequence sod_encode(const Signal& f, double theta);

/// Integrate-and-fire with left rectangle rule u += x dt per sample.
EventSequence if_encode(const Signal& f, double theta, IfReset reset = IfReset::Subtract);

EventSequence encode(const Signal& f, const SamplerConfig& cfg);

/// max(samples) - min(samples).
double range_seminorm(const Signal& f);

/// Cumulative integral on the n + 1 grid points t0, t0 + dt, ..., t0 + n dt
/// with F(t0) = 0 (left rectangle rule).
SequenceD cumulative_integral(const Signal& f);

/// sup over [a, b] of |int_a^b f|, computed as max F - min F of the cumulative integral.
double integral_discrepancy(const Signal& f);

struct QuasiIsometryReport {
  double d_input = 0.0;
  double d_output = 0.0;
  double A = 1.0;
  double B = 0.0;
  bool lower_ok = false;
  bool upper_ok = false;
  /// min of the slacks of both inequalities; negative when a bound is violated.
  double margin = 0.0;
};

/// Encodes f and g, compares input distance (range seminorm for SOD,
/// integral discrepancy for IF) against theta * |eta_f - eta_g|_D.
QuasiIsometryReport quasi_isometry_check(const Signal& f, const Signal& g, const SamplerConfig& cfg,
                                         double tol = kDefaultTol);

/// SOD(theta = 1) images of all vertices of {0,1}^n, each written as a
/// vector of length n - 1 (entry i - 1 is the event emitted at sample i).
/// Sorted, without duplicates. Requires 1 <= n <= 12.
std::vector<SequenceI> sod_hypercube_image(int n);

}  // namespace disc
