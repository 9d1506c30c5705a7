#include "discnorm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace disc::io {
namespace {

constexpr double kGridTol = 1e-9;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> to_double(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::int64_t> to_int(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

struct Line {
  std::size_t number;
  std::vector<std::string> cells;
};

double cell_double(const Line& l, std::size_t i) {
  if (i >= l.cells.size()) throw ParseError("missing column " + std::to_string(i + 1), l.number);
  const auto v = to_double(l.cells[i]);
  if (!v) throw ParseError("not a finite number: '" + l.cells[i] + "'", l.number);
  return *v;
}

void expect_columns(const Line& l, std::size_t n) {
  if (l.cells.size() != n)
    throw ParseError("expected " + std::to_string(n) + " column(s), got " + std::to_string(l.cells.size()), l.number);
}

SequenceD read_values(const std::vector<Line>& rows, bool flatten) {
  std::vector<double> v;
  for (const auto& l : rows) {
    if (!flatten) expect_columns(l, 1);
    for (std::size_t i = 0; i < l.cells.size(); ++i) v.push_back(cell_double(l, i));
  }
  return Eigen::Map<SequenceD>(v.data(), static_cast<Eigen::Index>(v.size()));
}

EventSequence read_events(const std::vector<Line>& rows) {
  std::vector<std::pair<double, std::int64_t>> pairs;
  for (const auto& l : rows) {
    expect_columns(l, 2);
    const double t = cell_double(l, 0);
    const auto v = to_int(l.cells[1]);
    if (!v) throw ParseError("event value must be an integer: '" + l.cells[1] + "'", l.number);
    if (!pairs.empty() && t < pairs.back().first) throw ParseError("event times must be non-decreasing", l.number);
    pairs.emplace_back(t, *v);
  }
  return EventSequence::from_pairs(pairs);
}

Signal read_signal_two_column(const std::vector<Line>& rows, GridDefaults grid) {
  if (rows.empty()) throw ParseError("signal needs at least one sample");
  std::vector<double> t;
  std::vector<double> x;
  for (const auto& l : rows) {
    expect_columns(l, 2);
    t.push_back(cell_double(l, 0));
    x.push_back(cell_double(l, 1));
  }
  const std::size_t n = t.size();
  double dt = grid.dt;
  if (n >= 2) {
    dt = (t.back() - t.front()) / static_cast<double>(n - 1);
    if (!(dt > 0.0)) throw ParseError("signal times must be increasing", rows[1].number);
    for (std::size_t i = 1; i < n; ++i) {
      const double expected = t.front() + static_cast<double>(i) * dt;
      if (std::abs(t[i] - expected) > kGridTol)
        throw ParseError("non-uniform sample spacing (jitter above 1e-9)", rows[i].number);
    }
  }
  return Signal(t.front(), dt, Eigen::Map<SequenceD>(x.data(), static_cast<Eigen::Index>(n)));
}

Input parse_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return events_from_json(j);
}

}  // namespace

Input parse(const std::string& text, InputKind as, GridDefaults grid) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    if (as != InputKind::Auto && as != InputKind::Events) throw ParseError("JSON input holds events");
    return parse_json(text);
  }

  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back({number, split(line)});
  }

  if (lines.empty()) {
    if (as == InputKind::Events) return EventSequence{};
    if (as == InputKind::Signal) throw ParseError("signal needs at least one sample");
    return SequenceD(0);
  }

  const auto& head = lines.front().cells;
  const bool has_header = std::any_of(head.begin(), head.end(), [](const std::string& c) { return !to_double(c); });
  std::vector<Line> rows(lines.begin() + (has_header ? 1 : 0), lines.end());

  InputKind kind = as;
  if (kind == InputKind::Auto) {
    if (!has_header) {
      kind = InputKind::Values;
    } else if (head.size() == 1) {
      kind = InputKind::Values;
    } else if (head.size() == 2) {
      std::string second = head[1];
      std::transform(second.begin(), second.end(), second.begin(), [](unsigned char c) { return std::tolower(c); });
      kind = second == "v" ? InputKind::Events : InputKind::Signal;
    } else {
      throw ParseError("cannot infer input kind from header with " + std::to_string(head.size()) + " columns",
                       lines.front().number);
    }
  }

  switch (kind) {
    case InputKind::Values:
      return read_values(rows, !has_header);
    case InputKind::Events:
      return read_events(rows);
    case InputKind::Signal: {
      const std::size_t cols = rows.empty() ? head.size() : rows.front().cells.size();
      if (cols == 2) return read_signal_two_column(rows, grid);
      const SequenceD x = read_values(rows, false);
      if (x.size() == 0) throw ParseError("signal needs at least one sample");
      return Signal(grid.t0, grid.dt, x);
    }
    case InputKind::Auto:
      break;
  }
  throw ParseError("unsupported input kind");
}

Input parse(std::istream& in, InputKind as, GridDefaults grid) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), as, grid);
}

Input parse_file(const std::filesystem::path& path, InputKind as, GridDefaults grid) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return parse(in, as, grid);
}

SequenceD as_values(const Input& input) {
  if (const auto* x = std::get_if<SequenceD>(&input)) return *x;
  if (const auto* e = std::get_if<EventSequence>(&input)) return e->values().cast<double>();
  return std::get<Signal>(input).samples();
}

Signal as_signal(const Input& input, GridDefaults grid) {
  if (const auto* s = std::get_if<Signal>(&input)) return *s;
  if (const auto* x = std::get_if<SequenceD>(&input)) {
    if (x->size() == 0) throw ParseError("signal needs at least one sample");
    return Signal(grid.t0, grid.dt, *x);
  }
  throw ParseError("expected a signal, got events");
}

EventSequence as_events(const Input& input) {
  if (const auto* e = std::get_if<EventSequence>(&input)) return *e;
  throw ParseError("expected events");
}

namespace {

std::string exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string write_values_csv(const SequenceD& x) {
  std::string out = "x\n";
  for (Eigen::Index i = 0; i < x.size(); ++i) out += exact(x(i)) + "\n";
  return out;
}

std::string write_events_csv(const EventSequence& eta) {
  std::string out = "t,v\n";
  for (const auto& e : eta.events()) out += exact(e.t) + "," + std::to_string(e.v) + "\n";
  return out;
}

std::string write_signal_csv(const Signal& f) {
  std::string out = "t,x\n";
  for (Eigen::Index i = 0; i < f.size(); ++i) out += exact(f.time(i)) + "," + exact(f.samples()(i)) + "\n";
  return out;
}

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double rounded = std::strtod(buf, nullptr);
  if (rounded == std::trunc(rounded) && std::abs(rounded) < 9.0e15) return static_cast<std::int64_t>(rounded);
  return rounded;
}

Json numbers(const SequenceD& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(number(v(i)));
  return arr;
}

Json numbers(const SequenceI& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Json to_json(const EventSequence& eta) {
  Json events = Json::array();
  for (const auto& e : eta.events()) events.push_back(Json{{"t", number(e.t)}, {"v", e.v}});
  return Json{{"events", events}};
}

EventSequence events_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("events") || !j["events"].is_array())
    throw ParseError("expected an object with an \"events\" array");
  std::vector<std::pair<double, std::int64_t>> pairs;
  std::size_t idx = 0;
  for (const auto& e : j["events"]) {
    const std::string where = "event #" + std::to_string(idx++) + ": ";
    if (!e.is_object() || !e.contains("t") || !e.contains("v")) throw ParseError(where + "needs \"t\" and \"v\"");
    if (!e["t"].is_number()) throw ParseError(where + "\"t\" must be a number");
    if (!e["v"].is_number_integer()) throw ParseError(where + "\"v\" must be an integer");
    const double t = e["t"].get<double>();
    if (!std::isfinite(t)) throw ParseError(where + "\"t\" must be finite");
    if (!pairs.empty() && t < pairs.back().first) throw ParseError(where + "times must be non-decreasing");
    pairs.emplace_back(t, e["v"].get<std::int64_t>());
  }
  return EventSequence::from_pairs(pairs);
}

Json to_json(const DiscreteJordan<double>& j) {
  return Json{{"alpha", number(j.alpha)}, {"r", number(j.r)}, {"chi1", numbers(j.chi1)}, {"chi2", numbers(j.chi2)}};
}

Json to_json(const ContinuousJordan& j) {
  return Json{{"c_star", number(j.c_star)},
              {"r", number(j.r)},
              {"h1", numbers(j.h1)},
              {"h2", numbers(j.h2)},
              {"grid", Json{{"t0", number(j.t0)}, {"dt", number(j.dt)}, {"n", j.h1.size()}}}};
}

Json to_json(const RangeFunction& g) {
  return Json{{"c", number(g.c)}, {"r", number(g.r)}, {"g", numbers(g.g)}};
}

Json to_json(const DualNormReport& r) {
  return Json{{"dual_d", number(r.dual_d)},
              {"bv", number(r.bv)},
              {"dual_a", number(r.dual_a)},
              {"mu_mon", r.mu_mon ? number(*r.mu_mon) : Json(nullptr)},
              {"witness", numbers(r.witness)}};
}

Json to_json(const MisalignmentProfile& p) {
  Json ks = Json::array();
  for (auto k : p.k_values) ks.push_back(k);
  return Json{{"lipschitz_L", number(p.lipschitz_L)},
              {"k", ks},
              {"delta", numbers(p.deltas)},
              {"delta_l2", numbers(p.deltas_l2)}};
}

Json to_json(const HeisenbergReport& r) {
  return Json{{"l1", number(r.l1)},         {"disc", number(r.disc)}, {"bv", number(r.bv)},
              {"holds", r.holds},           {"slack", number(r.slack)}, {"S", r.S},
              {"bv_cancelled", number(r.bv_cancelled)}};
}

Json to_json(const QuasiIsometryReport& r) {
  return Json{{"d_input", number(r.d_input)}, {"d_output", number(r.d_output)}, {"A", number(r.A)},
              {"B", number(r.B)},             {"lower_ok", r.lower_ok},          {"upper_ok", r.upper_ok},
              {"margin", number(r.margin)}};
}

}  // namespace disc::io
