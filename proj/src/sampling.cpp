#include "discnorm/sampling.hpp"

#include "discnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace disc {

Signal::Signal(double t0, double dt, SequenceD samples) : t0_(t0), dt_(dt), samples_(std::move(samples)) {
  if (!std::isfinite(t0_)) throw DomainError("signal start time must be finite");
  if (!(dt_ > 0.0) || !std::isfinite(dt_)) throw DomainError("signal spacing dt must be positive");
  if (samples_.size() == 0) throw DomainError("signal needs at least one sample");
  if (!samples_.allFinite()) throw DomainError("signal samples must be finite");
}

bool same_grid(const Signal& f, const Signal& g, double tol) {
  return f.size() == g.size() && std::abs(f.t0() - g.t0()) <= tol && std::abs(f.dt() - g.dt()) <= tol;
}

Signal operator-(const Signal& f, const Signal& g) {
  if (!same_grid(f, g)) throw DomainError("signals are not sampled on the same grid");
  return Signal(f.t0(), f.dt(), f.samples() - g.samples());
}

void SamplerConfig::validate() const {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw DomainError("threshold theta must be positive");
}

EventSequence sod_encode(const Signal& f, double theta) {
  SamplerConfig{Scheme::SendOnDelta, theta}.validate();
  const auto& x = f.samples();
  std::vector<Event> events;
  // Reference level y = x0 + level * theta, recomputed to avoid drift.
  const double x0 = x(0);
  std::int64_t level = 0;
  auto ref = [&] { return x0 + static_cast<double>(level) * theta; };
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    const double t = f.time(i);
    std::uint32_t ordinal = 0;
    while (x(i) - ref() >= theta) {
      ++level;
      events.push_back({t, +1, ordinal++});
    }
    while (x(i) - ref() <= -theta) {
      --level;
      events.push_back({t, -1, ordinal++});
    }
  }
  return EventSequence(std::move(events));
}

EventSequence if_encode(const Signal& f, double theta, IfReset reset) {
  SamplerConfig{Scheme::IntegrateAndFire, theta}.validate();
  const auto& x = f.samples();
  std::vector<Event> events;
  double u = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    u += x(i) * f.dt();
    const double t = f.time(i);
    std::uint32_t ordinal = 0;
    bool fired = false;
    while (u >= theta) {
      u -= theta;
      events.push_back({t, +1, ordinal++});
      fired = true;
    }
    while (u <= -theta) {
      u += theta;
      events.push_back({t, -1, ordinal++});
      fired = true;
    }
    if (fired && reset == IfReset::Zero) u = 0.0;
  }
  return EventSequence(std::move(events));
}

EventSequence encode(const Signal& f, const SamplerConfig& cfg) {
  cfg.validate();
  return cfg.scheme == Scheme::SendOnDelta ? sod_encode(f, cfg.theta) : if_encode(f, cfg.theta, cfg.reset);
}

double range_seminorm(const Signal& f) { return f.samples().maxCoeff() - f.samples().minCoeff(); }

SequenceD cumulative_integral(const Signal& f) {
  const Eigen::Index n = f.size();
  SequenceD F(n + 1);
  F(0) = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) F(i + 1) = F(i) + f.samples()(i) * f.dt();
  return F;
}

double integral_discrepancy(const Signal& f) {
  const SequenceD F = cumulative_integral(f);
  return F.maxCoeff() - F.minCoeff();
}

QuasiIsometryReport quasi_isometry_check(const Signal& f, const Signal& g, const SamplerConfig& cfg,
                                         double tol) {
  cfg.validate();
  const Signal h = f - g;
  QuasiIsometryReport rep;
  rep.A = 1.0;
  rep.B = 4.0 * cfg.theta;
  rep.d_input = cfg.scheme == Scheme::SendOnDelta ? range_seminorm(h) : integral_discrepancy(h);
  // Each event carries an amplitude of theta in signal units.
  rep.d_output = cfg.theta * static_cast<double>(event_distance(encode(f, cfg), encode(g, cfg)));
  const double lower_slack = rep.d_output - (rep.d_input / rep.A - rep.B);
  const double upper_slack = rep.A * rep.d_input + rep.B - rep.d_output;
  rep.lower_ok = lower_slack >= -tol;
  rep.upper_ok = upper_slack >= -tol;
  rep.margin = std::min(lower_slack, upper_slack);
  return rep;
}

std::vector<SequenceI> sod_hypercube_image(int n) {
  if (n < 1) throw DomainError("hypercube dimension must be at least 1");
  if (n > 12) throw DomainError("hypercube dimension above 12 is not enumerated");
  std::set<std::vector<std::int64_t>> images;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    SequenceD vertex(n);
    for (int i = 0; i < n; ++i) vertex(i) = static_cast<double>((mask >> i) & 1u);
    const EventSequence eta = sod_encode(Signal(0.0, 1.0, vertex), 1.0);
    std::vector<std::int64_t> image(static_cast<std::size_t>(n - 1), 0);
    // Sample i sits at t = i; at most one event per sample on the cube.
    for (const auto& e : eta.events()) image[static_cast<std::size_t>(std::lround(e.t)) - 1] += e.v;
    images.insert(std::move(image));
  }
  std::vector<SequenceI> out;
  out.reserve(images.size());
  for (const auto& img : images)
    out.push_back(Eigen::Map<const SequenceI>(img.data(), static_cast<Eigen::Index>(img.size())));
  return out;
}

}  // namespace disc
