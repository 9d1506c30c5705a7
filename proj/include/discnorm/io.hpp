#pragma once

// File formats.
//
//   values   single column with header, e.g. "x\n1\n-1\n"; a headerless file
//            of numbers (one or more per line, comma separated) also reads as values
//   events   "t,v" CSV with non-decreasing t and integer v, or JSON
//            {"events": [{"t": 0.5, "v": 1}, ...]}; equal consecutive
//            timestamps are successive events at the same time
//   signal   "t,x" CSV on a uniform grid (spacing checked to 1e-9), or a
//            single column of samples with t0/dt supplied separately

#include "discnorm/analysis.hpp"
#include "discnorm/common.hpp"
#include "discnorm/decomposition.hpp"
#include "discnorm/duality.hpp"
#include "discnorm/events.hpp"
#include "discnorm/sampling.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

namespace disc::io {

using Json = nlohmann::ordered_json;

enum class InputKind { Auto, Values, Events, Signal };

struct GridDefaults {
  double t0 = 0.0;
  double dt = 1.0;
};

using Input = std::variant<SequenceD, EventSequence, Signal>;

/// Throws ParseError naming the offending line.
Input parse(std::istream& in, InputKind as = InputKind::Auto, GridDefaults grid = {});
Input parse(const std::string& text, InputKind as = InputKind::Auto, GridDefaults grid = {});
/// Throws ParseError when the file cannot be opened.
Input parse_file(const std::filesystem::path& path, InputKind as = InputKind::Auto, GridDefaults grid = {});

/// Values of any input kind (event amplitudes, signal samples).
SequenceD as_values(const Input& input);
/// Throws ParseError when the input is not a signal; values become a
/// signal on the default grid.
Signal as_signal(const Input& input, GridDefaults grid = {});
EventSequence as_events(const Input& input);

std::string write_values_csv(const SequenceD& x);
std::string write_events_csv(const EventSequence& eta);
std::string write_signal_csv(const Signal& f);

/// Round to 12 significant digits; integral results become JSON integers.
Json number(double v);
Json numbers(const SequenceD& v);
Json numbers(const SequenceI& v);

Json to_json(const EventSequence& eta);
EventSequence events_from_json(const Json& j);
Json to_json(const DiscreteJordan<double>& j);
Json to_json(const ContinuousJordan& j);
Json to_json(const RangeFunction& g);
Json to_json(const DualNormReport& r);
Json to_json(const MisalignmentProfile& p);
Json to_json(const HeisenbergReport& r);
Json to_json(const QuasiIsometryReport& r);

}  // namespace disc::io
