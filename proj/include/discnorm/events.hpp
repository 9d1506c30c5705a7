#pragma once

#include "discnorm/common.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace disc {

/// One event (t, v). Several events may share a timestamp; they are then
/// ordered by `ordinal`, so the ordering key is the pair (t, ordinal).
struct Event {
  double t = 0.0;
  std::int64_t v = 0;
  std::uint32_t ordinal = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Finite, time-ordered sequence of nonzero integer-valued events.
///
/// Invariants: keys (t, ordinal) strictly increasing, every v != 0,
/// every t finite.
class EventSequence {
 public:
  EventSequence() = default;

  /// Validates the invariants; throws DomainError when they are violated.
  explicit EventSequence(std::vector<Event> events);

  /// Builds from (t, v) pairs. Equal consecutive timestamps are numbered
  /// 0, 1, ... in order of appearance. Zero-valued pairs are dropped.
  static EventSequence from_pairs(std::initializer_list<std::pair<double, std::int64_t>> pairs);
  static EventSequence from_pairs(const std::vector<std::pair<double, std::int64_t>>& pairs);

  /// Places value[i] at times[i], skipping zeros.
  static EventSequence from_values(const std::vector<double>& times, const SequenceI& values);

  const std::vector<Event>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }

  /// Event amplitudes in key order.
  SequenceI values() const;

  friend bool operator==(const EventSequence&, const EventSequence&) = default;

 private:
  std::vector<Event> events_;
};

/// Discrepancy norm of the value sequence; timestamps only fix the order.
std::int64_t event_discrepancy(const EventSequence& eta);

/// Events with a <= t <= b. Throws DomainError when a > b.
EventSequence restrict(const EventSequence& eta, double a, double b);

/// Pointwise eta1 - eta2 on the merged (t, ordinal) timeline; zero results are dropped.
EventSequence difference(const EventSequence& eta1, const EventSequence& eta2);

/// Pointwise eta1 + eta2 on the merged timeline.
EventSequence sum(const EventSequence& eta1, const EventSequence& eta2);

/// d(eta1, eta2) = |eta1 - eta2|_D.
std::int64_t event_distance(const EventSequence& eta1, const EventSequence& eta2);

}  // namespace disc
