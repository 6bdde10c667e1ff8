#include "qalpha/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qalpha/dynamics.hpp"
#include "qalpha/factorize.hpp"
#include "qalpha/poly.hpp"
#include "qalpha/sequence.hpp"
#include "qalpha/suites.hpp"
#include "qalpha/transform.hpp"

namespace qalpha::cli {

using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidInput, "unknown format '" + std::string(name) + "'");
}

FieldElement parse_alpha(const FieldSpec& spec, std::string_view text) {
  if (text == "root") return spec.root();
  return FieldElement::parse(spec, text);
}

namespace {

Format resolve(Format f, Format fallback, std::initializer_list<Format> allowed, const char* command) {
  if (f == Format::Default) return fallback;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw Error(ErrorCode::InvalidInput, std::string("format not supported by '") + command + "'");
  }
  return f;
}

const std::string& single_poly(const CliConfig& cfg) {
  if (cfg.polys.size() != 1) throw Error(ErrorCode::InvalidInput, "expected exactly one --poly");
  return cfg.polys.front();
}

void row(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(12) << key << value << "\n";
}

}  // namespace

CommandOutput cmd_field(const CliConfig& cfg) {
  const FieldSpec spec = FieldSpec::parse(cfg.field);
  const Format fmt = resolve(cfg.format, Format::Text, {Format::Text, Format::Json}, "field");
  const std::uint64_t order = spec.size() - 1;
  std::optional<FieldElement> g = spec.generator();
  bool generator_ok = false;
  if (g) generator_ok = g->pow(order).is_one() && spec.dlog(g->bits()) == 1;

  if (fmt == Format::Json) {
    ordered_json j;
    j["field"] = spec.to_string();
    j["s"] = spec.degree();
    j["modulus"] = gf2x::to_string(spec.modulus());
    j["conway"] = spec.uses_conway_modulus();
    j["generator"] = g ? ordered_json(g->to_string()) : ordered_json(nullptr);
    j["generator_order_ok"] = generator_ok;
    return {kExitOk, j.dump(2) + "\n"};
  }
  std::ostringstream os;
  row(os, "field", spec.to_string());
  row(os, "s", std::to_string(spec.degree()));
  row(os, "modulus", gf2x::to_string(spec.modulus()) + " (irreducible)");
  row(os, "conway", spec.uses_conway_modulus() ? "yes" : "no");
  if (g) {
    row(os, "generator", g->to_string() + ", order 2^" + std::to_string(spec.degree()) + "-1 " +
                             (generator_ok ? "verified" : "FAILED"));
  } else {
    row(os, "generator", "none (s > " + std::to_string(kTableDegreeCap) + ")");
  }
  return {kExitOk, os.str()};
}

CommandOutput cmd_transform(const CliConfig& cfg) {
  const FieldSpec spec = FieldSpec::parse(cfg.field);
  const Format fmt = resolve(cfg.format, Format::Text, {Format::Text, Format::Json}, "transform");
  const FieldElement alpha = parse_alpha(spec, cfg.alpha);
  const Polynomial f = Polynomial::parse(spec, single_poly(cfg));
  const Polynomial F = q_alpha_transform(f, alpha);

  std::string verdict;
  std::vector<Polynomial> factors;
  if (has_repeated_factor(F)) {
    verdict = "repeated-factor";
    if (static_cast<long>(spec.degree()) * F.degree() <= kOracleScaleCap) {
      for (const auto& [p, m] : oracle_factor(F)) {
        for (unsigned i = 0; i < m; ++i) factors.push_back(p);
      }
    }
  } else if (!f.is_monic() || !is_irreducible(f)) {
    verdict = is_irreducible(F) ? "irreducible" : "reducible";
  } else {
    SplitResult res = split_q_image(F, f.degree(), cfg.seed);
    verdict = res.is_split() ? "split" : "irreducible";
    if (res.is_split()) factors = {res.g1(), res.g2()};
  }

  if (fmt == Format::Json) {
    ordered_json j;
    j["field"] = spec.to_string();
    j["alpha"] = alpha.to_string();
    j["poly"] = f.to_string();
    j["transform"] = F.to_string();
    j["verdict"] = verdict;
    j["factors"] = ordered_json::array();
    for (const auto& p : factors) j["factors"].push_back(p.to_string());
    return {kExitOk, j.dump(2) + "\n"};
  }
  std::ostringstream os;
  row(os, "field", spec.to_string());
  row(os, "alpha", alpha.to_string() + " (" + alpha.to_exponent_string() + ")");
  row(os, "f", f.to_string() + "  " + f.pretty());
  row(os, "f^(Q,a)", F.to_string() + "  " + F.pretty());
  row(os, "verdict", verdict);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    row(os, "g" + std::to_string(i + 1), factors[i].to_string() + "  " + factors[i].pretty());
  }
  return {kExitOk, os.str()};
}

CommandOutput cmd_sequence(const CliConfig& cfg) {
  const FieldSpec spec = FieldSpec::parse(cfg.field);
  const Format fmt = resolve(cfg.format, Format::Json, {Format::Text, Format::Json, Format::Csv}, "sequence");
  const FieldElement alpha = parse_alpha(spec, cfg.alpha);
  const Polynomial f0 = Polynomial::parse(spec, single_poly(cfg));
  const int target = cfg.target_degree > 0 ? cfg.target_degree : 4 * std::max(f0.degree(), 1);

  const SequenceRun run = generate(spec, alpha, f0, target, cfg.seed);
  const VerifyReport report = verify_run(run);
  const int code = report.passed() ? kExitOk : kExitVerificationFailed;

  if (fmt == Format::Json) return {code, run_record_json(run, report, cfg.seed, target) + "\n"};
  std::ostringstream os;
  if (fmt == Format::Csv) {
    os << "index,degree,split,chosen_factor,poly\n";
    for (const auto& e : run.history) {
      os << e.index << ',' << e.degree << ',' << (e.split ? "true" : "false") << ','
         << (e.split ? (e.chosen_factor == 2 ? "g2" : "g1") : "") << ',' << (e.poly ? e.poly->to_string() : "") << "\n";
    }
    return {code, os.str()};
  }
  row(os, "field", spec.to_string());
  row(os, "alpha", alpha.to_string());
  row(os, "bound", "l_s + l_n + 3 = " + std::to_string(run.l_s) + " + " + std::to_string(run.l_n) + " + 3 = " +
                       std::to_string(run.stagnation_bound));
  for (const auto& e : run.history) {
    std::string line = "deg " + std::to_string(e.degree);
    if (e.split) line += e.chosen_factor == 2 ? " [split, g2]" : " [split, g1]";
    if (e.poly) line += "  " + e.poly->pretty();
    row(os, "f_" + std::to_string(e.index), line);
  }
  row(os, "t", run.doubling_step ? std::to_string(*run.doubling_step) : "-");
  row(os, "backtracked", run.backtracked ? "yes" : "no");
  for (const auto& c : report.checks) {
    row(os, c.skipped ? "skip" : (c.passed ? "ok" : "FAIL"), c.name + ": " + c.detail);
  }
  return {code, os.str()};
}

CommandOutput cmd_graph(const CliConfig& cfg) {
  const FieldSpec spec = FieldSpec::parse(cfg.field);
  const Format fmt = resolve(cfg.format, Format::Dot, {Format::Dot, Format::Json, Format::Csv}, "graph");
  const FieldElement alpha = parse_alpha(spec, cfg.alpha);
  const DynamicsGraph g = build_graph(spec, alpha);
  if (fmt == Format::Dot) return {kExitOk, export_dot(g)};
  if (fmt == Format::Json) return {kExitOk, export_json(g) + "\n"};
  std::ostringstream os;
  os << "source,target,periodic,distance\n";
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
    os << g.label(v) << ',' << g.label(g.successor(v)) << ',' << (g.on_cycle(v) ? "true" : "false") << ','
       << g.distance_to_cycle(v) << "\n";
  }
  return {kExitOk, os.str()};
}

CommandOutput cmd_verify(const CliConfig& cfg) {
  const Format fmt = resolve(cfg.format, Format::Text, {Format::Text, Format::Json}, "verify");
  std::vector<std::string> names;
  if (cfg.suite.empty() || cfg.suite == "all") {
    names = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end()) {
      throw Error(ErrorCode::InvalidInput, "unknown suite '" + cfg.suite + "'");
    }
    names = {cfg.suite};
  }
  // Suites are pure and independent, so they run side by side.
  std::vector<std::future<SuiteResult>> pending;
  for (const auto& name : names) {
    pending.push_back(std::async(std::launch::async, [name, seed = cfg.seed] { return run_suite(name, seed); }));
  }
  std::vector<SuiteResult> results;
  for (auto& p : pending) results.push_back(p.get());
  const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
  const int code = ok ? kExitOk : kExitVerificationFailed;

  if (fmt == Format::Json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : results) {
      ordered_json item;
      item["suite"] = r.name;
      item["passed"] = r.passed();
      item["checked"] = r.checked;
      item["failed"] = r.failed;
      item["failures"] = r.failures;
      j.push_back(std::move(item));
    }
    return {code, j.dump(2) + "\n"};
  }
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(16) << r.name << "checked " << r.checked
       << ", failed " << r.failed << ", " << std::fixed << std::setprecision(2) << r.seconds << " s\n";
    for (const auto& f : r.failures) os << "     " << f << "\n";
  }
  return {code, os.str()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducible polynomial sequences over GF(2^s) via (Q,alpha)-transforms", "qalpha"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string format;

  auto add_common = [&](CLI::App* sub, bool with_alpha) {
    sub->add_option("--field", cfg.field, "Field, e.g. s=6,mod=0x5b or s=6,mod=conway")->capture_default_str();
    if (with_alpha) sub->add_option("--alpha", cfg.alpha, "alpha: root, g^k, or hex")->capture_default_str();
    sub->add_option("--format", format, "text | json | dot | csv");
    sub->add_option("--out", cfg.out, "Write output to FILE");
    sub->add_option("--seed", cfg.seed, "Seed for randomized splitting")->capture_default_str();
  };

  auto* field = app.add_subcommand("field", "Inspect a field specification");
  add_common(field, false);
  auto* transform = app.add_subcommand("transform", "Compute f^(Q,alpha) and split it");
  add_common(transform, true);
  transform->add_option("--poly", cfg.polys, "Polynomial, e.g. poly[s=3]{1,0,0,1,3}")->required();
  auto* sequence = app.add_subcommand("sequence", "Generate a sequence of irreducible polynomials");
  add_common(sequence, true);
  sequence->add_option("--poly", cfg.polys, "Seed polynomial f0")->required();
  sequence->add_option("--target-degree", cfg.target_degree, "Stop once the degree reaches this");
  auto* graph = app.add_subcommand("graph", "Functional graph of theta_alpha");
  add_common(graph, true);
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify, false);
  verify->add_option("--suite", cfg.suite, "meyn | kyuregyan | structure | oracle | sequence | paper-examples | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!format.empty()) cfg.format = parse_format(format);
    CommandOutput result;
    if (*field) result = cmd_field(cfg);
    else if (*transform) result = cmd_transform(cfg);
    else if (*sequence) result = cmd_sequence(cfg);
    else if (*graph) result = cmd_graph(cfg);
    else result = cmd_verify(cfg);

    if (!cfg.out.empty()) {
      std::ofstream file(cfg.out);
      if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + cfg.out);
      file << result.text;
    } else {
      out << result.text;
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    const bool verification = e.code() == ErrorCode::TheoremViolation || e.code() == ErrorCode::InternalContract;
    return verification ? kExitVerificationFailed : kExitUsage;
  }
}

}  // namespace qalpha::cli
