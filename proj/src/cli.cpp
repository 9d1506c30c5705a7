#include "discnorm/cli.hpp"

#include "discnorm/analysis.hpp"
#include "discnorm/decomposition.hpp"
#include "discnorm/duality.hpp"
#include "discnorm/io.hpp"
#include "discnorm/norms.hpp"
#include "discnorm/sampling.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace disc::cli {
namespace {

using io::Json;

struct Options {
  std::vector<std::string> inputs;
  std::string as = "auto";
  double t0 = 0.0;
  double dt = 1.0;
  double tol = kDefaultTol;
  std::string output;
  std::string format = "json";

  std::string kind = "d";
  double p = 2.0;
  std::string scheme = "sod";
  double theta = 0.0;
  std::string reset = "subtract";
  std::string mode = "discrete";
  long k_max = -1;
};

/// Report body: JSON document or CSV text.
struct Report {
  Json json;
  std::string csv;
};

std::string fmt12(double v) {
  const Json n = io::number(v);
  return n.is_null() ? "nan" : n.dump();
}

std::string csv_fields(const Json& obj) {
  std::string out = "field,value\n";
  for (const auto& [key, value] : obj.items())
    if (!value.is_array() && !value.is_object()) out += key + "," + value.dump() + "\n";
  return out;
}

io::InputKind input_kind(const std::string& as) {
  static const std::map<std::string, io::InputKind> kinds{{"auto", io::InputKind::Auto},
                                                          {"value", io::InputKind::Values},
                                                          {"values", io::InputKind::Values},
                                                          {"events", io::InputKind::Events},
                                                          {"signal", io::InputKind::Signal}};
  return kinds.at(as);
}

io::Input load(const Options& o, std::size_t idx, io::InputKind fallback = io::InputKind::Auto) {
  if (idx >= o.inputs.size()) throw ParseError("missing input file");
  io::InputKind kind = input_kind(o.as);
  if (kind == io::InputKind::Auto) kind = fallback;
  return io::parse_file(o.inputs[idx], kind, {o.t0, o.dt});
}

SamplerConfig sampler(const Options& o) {
  SamplerConfig cfg;
  cfg.scheme = o.scheme == "if" ? Scheme::IntegrateAndFire : Scheme::SendOnDelta;
  cfg.theta = o.theta;
  cfg.reset = o.reset == "zero" ? IfReset::Zero : IfReset::Subtract;
  cfg.validate();
  return cfg;
}

FunctionalWeights weights(const io::Input& in) {
  if (const auto* s = std::get_if<Signal>(&in)) {
    std::vector<double> times(static_cast<std::size_t>(s->size()));
    for (Eigen::Index i = 0; i < s->size(); ++i) times[static_cast<std::size_t>(i)] = s->time(i);
    return FunctionalWeights(std::move(times), s->samples());
  }
  return FunctionalWeights(io::as_values(in));
}

Report cmd_norm(const Options& o) {
  const SequenceD x = io::as_values(load(o, 0));
  double value = 0.0;
  if (o.kind == "d") {
    value = discrepancy_exact_if_integral(x);
  } else if (o.kind == "naive") {
    value = discrepancy_naive(x);
  } else if (o.kind == "a") {
    value = is_integer_valued(x) ? static_cast<double>(alexiewicz(x.cast<std::int64_t>())) : alexiewicz(x);
  } else if (o.kind == "tv") {
    value = total_variation(x);
  } else if (o.kind == "sup") {
    value = sup_norm(x);
  } else {
    value = p_norm(x, o.p);
  }
  return {Json{{"value", io::number(value)}}, "value\n" + fmt12(value) + "\n"};
}

Report cmd_sample(const Options& o) {
  const Signal f = io::as_signal(load(o, 0, io::InputKind::Signal), {o.t0, o.dt});
  const EventSequence eta = encode(f, sampler(o));
  return {io::to_json(eta), io::write_events_csv(eta)};
}

Report cmd_decompose(const Options& o) {
  if (o.mode == "discrete") {
    const auto j = jordan_discrete(io::as_values(load(o, 0)));
    std::string csv = "k,chi1,chi2\n";
    for (Eigen::Index k = 0; k < j.chi1.size(); ++k)
      csv += std::to_string(k) + "," + fmt12(j.chi1(k)) + "," + fmt12(j.chi2(k)) + "\n";
    return {io::to_json(j), csv};
  }
  const Signal f = io::as_signal(load(o, 0, io::InputKind::Signal), {o.t0, o.dt});
  if (o.mode == "continuous") {
    const auto j = jordan_continuous(f);
    std::string csv = "t,h1,h2\n";
    for (Eigen::Index k = 0; k < j.h1.size(); ++k)
      csv += fmt12(j.t0 + static_cast<double>(k) * j.dt) + "," + fmt12(j.h1(k)) + "," + fmt12(j.h2(k)) + "\n";
    return {io::to_json(j), csv};
  }
  const auto g = range_function(f);
  std::string csv = "t,g\n";
  for (Eigen::Index k = 0; k < g.g.size(); ++k)
    csv += fmt12(f.t0() + static_cast<double>(k) * f.dt()) + "," + fmt12(g.g(k)) + "\n";
  return {io::to_json(g), csv};
}

Report cmd_dual(const Options& o) {
  const Json j = io::to_json(dual_norm_report(weights(load(o, 0)), o.tol));
  return {j, csv_fields(j)};
}

Report cmd_monotonicity(const Options& o) {
  const double mu = monotonicity_measure(weights(load(o, 0)), o.tol);
  return {Json{{"mu_mon", io::number(mu)}}, "mu_mon\n" + fmt12(mu) + "\n"};
}

Report cmd_misalign(const Options& o) {
  const SequenceD x = io::as_values(load(o, 0));
  const Eigen::Index k_max = o.k_max < 0 ? x.size() : static_cast<Eigen::Index>(o.k_max);
  const auto profile = misalignment(x, k_max);
  Json j = io::to_json(profile);
  j["p4_ok"] = k_max >= 1 ? Json(check_p4_lipschitz(x, k_max, o.tol)) : Json(nullptr);
  j["p5_ok"] = check_p5_symmetric(x, k_max, o.tol);
  j["p6_ok"] = x.size() > 0 && x.minCoeff() < 0.0 ? Json(nullptr) : Json(check_p6_monotone(x, k_max, o.tol));
  std::string csv = "k,delta\n";
  for (std::size_t i = 0; i < profile.k_values.size(); ++i)
    csv += std::to_string(profile.k_values[i]) + "," + fmt12(profile.deltas(static_cast<Eigen::Index>(i))) + "\n";
  return {j, csv};
}

Report cmd_heisenberg(const Options& o) {
  const Json j = io::to_json(heisenberg_check(io::as_values(load(o, 0)), o.tol));
  return {j, csv_fields(j)};
}

Report cmd_quasi(const Options& o) {
  if (o.inputs.size() != 2) throw ParseError("quasi needs exactly two signal files");
  const Signal f = io::as_signal(load(o, 0, io::InputKind::Signal), {o.t0, o.dt});
  const Signal g = io::as_signal(load(o, 1, io::InputKind::Signal), {o.t0, o.dt});
  const Json j = io::to_json(quasi_isometry_check(f, g, sampler(o), o.tol));
  return {j, csv_fields(j)};
}

void report_error(std::ostream& err, const Options& o, const std::string& code, const std::string& message) {
  if (o.format == "json") {
    err << Json{{"error", Json{{"code", code}, {"message", message}}}}.dump() << "\n";
  } else {
    err << "error: " << message << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("DISC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) o.tol = v;
  }

  CLI::App app{"Discrepancy norm toolkit for event sequences", "discnorm"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, std::size_t n_inputs) {
    sub->add_option("input", o.inputs, "Input file(s)")->required()->expected(static_cast<int>(n_inputs));
    sub->add_option("--as", o.as, "Input kind")->check(CLI::IsMember({"auto", "value", "values", "events", "signal"}));
    sub->add_option("--t0", o.t0, "Start time for single-column signals");
    sub->add_option("--dt", o.dt, "Sample spacing for single-column signals")->check(CLI::PositiveNumber);
    sub->add_option("--tol", o.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto threshold = [&](CLI::App* sub) {
    sub->add_option("--scheme", o.scheme, "Sampling scheme")->check(CLI::IsMember({"sod", "if"}));
    sub->add_option("--theta", o.theta, "Threshold")->required()->check(CLI::PositiveNumber);
    sub->add_option("--reset", o.reset, "Integrate-and-fire reset rule")->check(CLI::IsMember({"subtract", "zero"}));
  };

  auto* norm = app.add_subcommand("norm", "Norm of a sequence");
  common(norm, 1);
  norm->add_option("--kind", o.kind, "d | naive | a | tv | p | sup")
      ->check(CLI::IsMember({"d", "naive", "a", "tv", "p", "sup"}));
  norm->add_option("--p", o.p, "Exponent for --kind p (>= 1, or inf)");

  auto* sample = app.add_subcommand("sample", "Encode a signal into events");
  common(sample, 1);
  threshold(sample);

  auto* decompose = app.add_subcommand("decompose", "Jordan-type decomposition");
  common(decompose, 1);
  decompose->add_option("--mode", o.mode, "discrete | continuous | range")
      ->check(CLI::IsMember({"discrete", "continuous", "range"}));

  auto* dual = app.add_subcommand("dual", "Dual norms of the functional induced by weights");
  common(dual, 1);

  auto* mono = app.add_subcommand("monotonicity", "Monotonicity measure mu_mon");
  common(mono, 1);

  auto* misalign = app.add_subcommand("misalign", "Misalignment profile");
  common(misalign, 1);
  misalign->add_option("--k-max", o.k_max, "Largest shift (default: sequence length)")->check(CLI::NonNegativeNumber);

  auto* heis = app.add_subcommand("check-heisenberg", "Check |x|_1 <= |x|_D |x|_BV");
  common(heis, 1);

  auto* quasi = app.add_subcommand("quasi", "Quasi-isometry check for a signal pair");
  common(quasi, 2);
  threshold(quasi);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, o, "usage_error", e.what());
    return kIoError;
  }

  try {
    Report report;
    if (norm->parsed()) report = cmd_norm(o);
    else if (sample->parsed()) report = cmd_sample(o);
    else if (decompose->parsed()) report = cmd_decompose(o);
    else if (dual->parsed()) report = cmd_dual(o);
    else if (mono->parsed()) report = cmd_monotonicity(o);
    else if (misalign->parsed()) report = cmd_misalign(o);
    else if (heis->parsed()) report = cmd_heisenberg(o);
    else report = cmd_quasi(o);

    const std::string text = o.format == "json" ? report.json.dump() + "\n" : report.csv;
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output);
      if (!file || !(file << text)) throw ParseError("cannot write '" + o.output + "'");
    }
    return kOk;
  } catch (const DomainError& e) {
    report_error(err, o, "domain_error", e.what());
    return kDomainError;
  } catch (const ParseError& e) {
    report_error(err, o, "parse_error", e.what());
    return kIoError;
  }
}

}  // namespace disc::cli
