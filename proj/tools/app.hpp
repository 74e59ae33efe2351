#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cobz/cobz.hpp"

namespace cobz::cli {

using Json = nlohmann::ordered_json;

// --- structured output: field-for-field mirrors of the text forms --------
// Integer and rational values are emitted as strings so nothing is ever
// rounded or reformatted by a JSON reader.

inline Json to_json(const ScalarMultiset& s) {
  Json labels = Json::array();
  for (const Int& l : s.labels()) labels.push_back(to_string(l));
  return labels;
}

inline Json to_json(const Bordism& b) {
  Json arcs = Json::array();
  for (const Arc& a : b.arcs())
    arcs.push_back(Json::array({to_string(a.lo()), to_string(a.hi()), to_string(a.label())}));
  return Json{{"src", b.source().to_string()},
              {"tgt", b.target().to_string()},
              {"arcs", std::move(arcs)},
              {"circles", to_json(b.circles())}};
}

inline Json to_json(const MatrixMorphism& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline Json to_json(const CheckReport& r) {
  return Json{{"suite", r.suite},
              {"cases", r.cases},
              {"failures", r.failures},
              {"details", r.details}};
}

// --- subcommand bodies ----------------------------------------------------

inline int cmd_normalize(const std::string& term_text, const std::string& format,
                         std::ostream& out) {
  const Bordism b = denote(parse_term(term_text));
  if (format == "text")
    out << b.to_string() << "\n";
  else
    out << to_json(b).dump() << "\n";
  return 0;
}

/**
 * The multiset of trace values over an exponent family. Invertible
 * endomorphisms act through the canonical-point machinery; non-invertible
 * ones are still traceable for nonnegative exponents, where no inverse is
 * ever formed.
 */
inline ScalarMultiset traces_of(const Bordism& b, const ThetaSpec& spec) {
  if (b.source() != b.target())
    throw NotEndomorphism("trace requires an endomorphism, got " + b.source().to_string() +
                          " -> " + b.target().to_string());
  if (is_invertible(b)) return act_on_theta(AutomorphismPoint(b.source(), b), spec);
  ScalarMultiset out;
  for (const Int& k : spec.exponents.labels()) {
    if (k < 0)
      throw NotInvertible("exponent " + to_string(k) +
                          " requires an invertible endomorphism");
    out = out.united(trace_close(power(b, k)).circles());
  }
  return out;
}

inline int cmd_trace(const std::string& term_text, const std::string& theta_text,
                     const std::string& format, std::ostream& out) {
  const ScalarMultiset result = traces_of(denote(parse_term(term_text)), ThetaSpec::parse(theta_text));
  if (format == "text")
    out << result.to_string() << "\n";
  else
    out << Json{{"scalars", to_json(result)}}.dump() << "\n";
  return 0;
}

inline int cmd_eval(const std::string& term_text, const std::string& matrix_path,
                    const std::string& format, std::ostream& out) {
  const DualizablePair<MatrixBackend> pair = dualizable_from_matrix(load_matrix_file(matrix_path));
  const MatrixMorphism result = evaluate_term(parse_term(term_text), pair, MatrixBackend{});
  if (format == "text")
    out << result.to_string() << "\n";
  else
    out << to_json(result).dump() << "\n";
  return 0;
}

inline int cmd_check(const std::string& suite, std::uint64_t seed, std::size_t cases,
                     std::size_t bound, const std::string& format, std::ostream& out) {
  CheckReport report;
  if (suite == "laws")
    report = check_laws(seed, cases);
  else if (suite == "cyclicity")
    report = check_cyclicity(seed, cases);
  else if (suite == "naturality")
    report = check_naturality(seed, cases);
  else if (suite == "roundtrip")
    report = check_roundtrip(seed, cases);
  else
    report = check_classify(seed, cases, bound);

  if (format == "text") {
    out << report.suite << ": " << report.cases << " cases, " << report.failures
        << " failures\n";
    for (const std::string& d : report.details) out << "  " << d << "\n";
  } else {
    out << to_json(report).dump() << "\n";
  }
  return report.failures == 0 ? 0 : 2;
}

inline int cmd_classify(const std::string& term_text, const std::optional<std::string>& theta_text,
                        std::size_t bound, const std::string& format, std::ostream& out) {
  const Bordism b = denote(parse_term(term_text));
  const ScalarMultiset scalars = classify_scalar(b);

  std::optional<ThetaSpec> spec;
  std::optional<AutomorphismPoint> witness;
  std::optional<std::string> obstruction;
  if (theta_text) {
    spec = ThetaSpec::parse(*theta_text);
    witness = is_generating_witness(*spec, scalars, bound);
    if (!witness) obstruction = generation_obstruction(*spec, scalars);
  }

  if (format == "text") {
    out << scalars.to_string() << "\n";
    if (spec) {
      if (witness)
        out << "witness: " << witness->automorphism().to_string() << "\n";
      else if (obstruction)
        out << "witness: none (" << *obstruction << ")\n";
      else
        out << "witness: none within bound " << bound << "\n";
    }
  } else {
    Json doc{{"scalars", to_json(scalars)}};
    if (spec) {
      doc["theta"] = spec->to_string();
      doc["witness"] = witness ? to_json(witness->automorphism()) : Json(nullptr);
      doc["obstruction"] = obstruction ? Json(*obstruction) : Json(nullptr);
      doc["bound"] = bound;
    }
    out << doc.dump() << "\n";
  }
  return 0;
}

// --- driver ---------------------------------------------------------------

/**
 * Full command-line surface, parameterised over streams so tests can drive
 * it in-process. Exit codes: 0 success, 1 user error (bad flags, syntax,
 * types, files), 2 property-suite failure.
 */
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculus of labelled one-dimensional cobordisms"};
  app.require_subcommand(1);

  std::string term, theta_text, matrix_path, suite;
  std::string format = "text";
  std::uint64_t seed = 17;
  std::size_t cases = 200, bound = 4;
  bool theta_given = false;

  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* normalize =
      app.add_subcommand("normalize", "parse, typecheck and print the canonical diagram");
  normalize->add_option("--term", term, "term to normalize")->required();
  add_format(normalize);

  CLI::App* trace = app.add_subcommand("trace", "trace an endomorphism over a theta family");
  trace->add_option("--term", term, "endomorphism term")->required();
  trace->add_option("--theta", theta_text, "exponent family, e.g. theta[1,-2]")->required();
  add_format(trace);

  CLI::App* eval =
      app.add_subcommand("eval", "evaluate a term in the rational matrix model");
  eval->add_option("--term", term, "term to evaluate")->required();
  eval->add_option("--matrix", matrix_path, "matrix file (dim + entries)")->required();
  add_format(eval);

  CLI::App* check = app.add_subcommand("check", "run a seeded property suite");
  check->add_option("suite", suite, "one of: laws, cyclicity, naturality, roundtrip, classify")
      ->required()
      ->check(CLI::IsMember({"laws", "cyclicity", "naturality", "roundtrip", "classify"}));
  check->add_option("--seed", seed, "generator seed");
  check->add_option("--cases", cases, "number of cases")->check(CLI::PositiveNumber);
  check->add_option("--bound", bound, "search bound for classify")->check(CLI::PositiveNumber);
  add_format(check);

  CLI::App* classify =
      app.add_subcommand("classify", "classify a closed diagram; optionally search for a "
                         "point realising it over a theta family");
  classify->add_option("--term", term, "closed term")->required();
  classify->add_option("--theta", theta_text, "exponent family to realise the result under")
      ->each([&theta_given](const std::string&) { theta_given = true; });
  classify->add_option("--bound", bound, "witness search bound")->check(CLI::PositiveNumber);
  add_format(classify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*normalize) return cmd_normalize(term, format, out);
    if (*trace) return cmd_trace(term, theta_text, format, out);
    if (*eval) return cmd_eval(term, matrix_path, format, out);
    if (*check) return cmd_check(suite, seed, cases, bound, format, out);
    if (*classify)
      return cmd_classify(term, theta_given ? std::optional(theta_text) : std::nullopt, bound,
                          format, out);
  } catch (const cobz::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;  // unreachable: require_subcommand(1)
}

}  // namespace cobz::cli
