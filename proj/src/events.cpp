#include "discnorm/events.hpp"

#include "discnorm/norms.hpp"

#include <cmath>
#include <tuple>

namespace disc {
namespace {

bool key_less(const Event& a, const Event& b) {
  return std::tie(a.t, a.ordinal) < std::tie(b.t, b.ordinal);
}

template <typename Combine>
EventSequence merge(const EventSequence& lhs, const EventSequence& rhs, Combine combine) {
  const auto& a = lhs.events();
  const auto& b = rhs.events();
  std::vector<Event> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    Event e;
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      e = a[i++];
      e.v = combine(e.v, 0);
    } else if (i == a.size() || key_less(b[j], a[i])) {
      e = b[j++];
      e.v = combine(0, e.v);
    } else {
      e = a[i];
      e.v = combine(a[i].v, b[j].v);
      ++i;
      ++j;
    }
    if (e.v != 0) out.push_back(e);
  }
  return EventSequence(std::move(out));
}

}  // namespace

EventSequence::EventSequence(std::vector<Event> events) : events_(std::move(events)) {
  for (std::size_t k = 0; k < events_.size(); ++k) {
    if (!std::isfinite(events_[k].t)) throw DomainError("event time must be finite");
    if (events_[k].v == 0) throw DomainError("event values must be nonzero");
    if (k > 0 && !key_less(events_[k - 1], events_[k]))
      throw DomainError("event times must be increasing");
  }
}

EventSequence EventSequence::from_pairs(std::initializer_list<std::pair<double, std::int64_t>> pairs) {
  return from_pairs(std::vector<std::pair<double, std::int64_t>>(pairs));
}

EventSequence EventSequence::from_pairs(const std::vector<std::pair<double, std::int64_t>>& pairs) {
  std::vector<Event> events;
  events.reserve(pairs.size());
  for (const auto& [t, v] : pairs) {
    std::uint32_t ordinal = 0;
    if (!events.empty() && events.back().t == t) ordinal = events.back().ordinal + 1;
    if (v != 0) events.push_back({t, v, ordinal});
  }
  return EventSequence(std::move(events));
}

EventSequence EventSequence::from_values(const std::vector<double>& times, const SequenceI& values) {
  if (times.size() != static_cast<std::size_t>(values.size()))
    throw DomainError("times and values differ in length");
  std::vector<std::pair<double, std::int64_t>> pairs;
  pairs.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) pairs.emplace_back(times[i], values(static_cast<Eigen::Index>(i)));
  return from_pairs(pairs);
}

SequenceI EventSequence::values() const {
  SequenceI out(static_cast<Eigen::Index>(events_.size()));
  for (std::size_t k = 0; k < events_.size(); ++k) out(static_cast<Eigen::Index>(k)) = events_[k].v;
  return out;
}

std::int64_t event_discrepancy(const EventSequence& eta) { return discrepancy(eta.values()); }

EventSequence restrict(const EventSequence& eta, double a, double b) {
  if (a > b) throw DomainError("restrict requires a <= b");
  std::vector<Event> kept;
  for (const auto& e : eta.events())
    if (e.t >= a && e.t <= b) kept.push_back(e);
  return EventSequence(std::move(kept));
}

EventSequence difference(const EventSequence& eta1, const EventSequence& eta2) {
  return merge(eta1, eta2, [](std::int64_t x, std::int64_t y) { return x - y; });
}

EventSequence sum(const EventSequence& eta1, const EventSequence& eta2) {
  return merge(eta1, eta2, [](std::int64_t x, std::int64_t y) { return x + y; });
}

std::int64_t event_distance(const EventSequence& eta1, const EventSequence& eta2) {
  return event_discrepancy(difference(eta1, eta2));
}

}  // namespace disc
