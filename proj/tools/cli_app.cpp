#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "gyb/braid.hpp"
#include "gyb/catalog.hpp"
#include "gyb/enhance.hpp"
#include "gyb/errors.hpp"
#include "gyb/invariant.hpp"
#include "gyb/suite.hpp"

namespace gyb::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string op = "type1";
  double theta = 0.0;
  bool theta_given = false;
  std::string braid;
  std::optional<int> strands;
  std::string normalization = "raw";
  std::string output = "text";
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 1;
  std::string catalog;
  std::string alpha = "1";
  std::string beta = "1";
  bool allow_large = false;
  int samples = 100;
  int max_strands = 4;
  std::size_t max_len = 12;
};

std::string fmt10(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x + 0.0);
  return buf;
}

std::string fmt10(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

Json complex_json(Complex z) { return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EgybOperator load_enhancement(const Config& cfg) {
  if (cfg.op.rfind("custom:", 0) == 0) {
    if (cfg.theta_given) emit_warning("theta is ignored for custom operators");
    auto file = read_operator_file(cfg.op.substr(7));
    auto op = load_custom(std::move(file.matrix), file.gtype, cfg.tolerance);
    const auto mu = ComplexMatrix::identity(op.gtype().d);
    return make_egyb(std::move(op), mu, parse_complex(cfg.alpha), parse_complex(cfg.beta), cfg.tolerance);
  }
  const auto id = operator_id_from_string(cfg.op);
  if (!id || *id == OperatorId::Custom) throw ParseError("unknown operator '" + cfg.op + "'");
  return catalog_enhancement(*id, cfg.theta);
}

Json theta_json(const EgybOperator& s) {
  const auto theta = s.op().theta();
  return theta ? Json(*theta) : Json(nullptr);
}

std::string operator_name(const Config& cfg, const EgybOperator& s) {
  return s.op().is_catalog() ? std::string(to_string(s.op().id())) : cfg.op;
}

BraidWord resolve_braid(const Config& cfg) {
  std::vector<NamedLink> extra;
  if (!cfg.catalog.empty()) extra = parse_catalog(read_file(cfg.catalog));
  if (auto link = find_link(cfg.braid, extra)) {
    if (cfg.strands && *cfg.strands != link->braid.strands()) {
      throw ParseError("'" + cfg.braid + "' is a " + std::to_string(link->braid.strands()) +
                       "-strand catalog braid, --strands says " + std::to_string(*cfg.strands));
    }
    return link->braid;
  }
  return parse_braid(cfg.braid, cfg.strands);
}

Normalization parse_normalization(const std::string& text) {
  if (text == "raw") return Normalization::Raw;
  if (text == "P") return Normalization::P;
  if (text == "tilde") return Normalization::Tilde;
  throw ParseError("unknown normalization '" + text + "'");
}

RepOptions rep_options(const Config& cfg) {
  RepOptions rep;
  rep.allow_large = cfg.allow_large;
  return rep;
}

int cmd_compute(const Config& cfg, std::ostream& out) {
  const auto normalization = parse_normalization(cfg.normalization);
  const auto b = resolve_braid(cfg);
  const auto s = load_enhancement(cfg);
  const auto result = evaluate(s, b, normalization, rep_options(cfg));
  const auto name = operator_name(cfg, s);
  if (cfg.output == "json") {
    Json j;
    j["schema"] = kSchema;
    j["operator"] = name;
    j["theta"] = theta_json(s);
    j["braid"] = format_braid(b);
    j["strands"] = b.strands();
    j["writhe"] = result.writhe;
    j["components"] = closure_components(b);
    j["value"] = complex_json(result.value);
    j["normalization"] = std::string(to_string(normalization));
    out << j.dump(2) << "\n";
  } else {
    out << "operator:      " << name << "\n";
    if (s.op().theta()) out << "theta:         " << fmt10(*s.op().theta()) << "\n";
    out << "braid:         " << (b.length() ? format_braid(b) : "(identity)") << "\n"
        << "strands:       " << b.strands() << "\n"
        << "writhe:        " << result.writhe << "\n"
        << "components:    " << closure_components(b) << "\n"
        << "normalization: " << to_string(normalization) << "\n"
        << "value:         " << fmt10(result.value) << "\n";
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto s = load_enhancement(cfg);
  const auto& op = s.op();
  const double gybe = verify_gybe(op);
  const double far = verify_far_commutativity(op);
  const double unitarity = unitarity_residual(op);
  const auto& t = op.gtype();
  std::optional<bool> outer;
  if (t.d == 2 && t.k == 3 && t.m == 1) outer = check_outer_diagonal(op, cfg.tolerance);

  ReportOptions ro;
  ro.seed = cfg.seed;
  ro.samples_per_n = cfg.samples;
  ro.tol = cfg.tolerance;
  const auto report = enhancement_report(s, ro);

  // Unitarity is a property of the catalog, not a requirement on custom operators.
  const bool unitarity_gated = op.is_catalog();
  const bool pass = gybe < cfg.tolerance && far < cfg.tolerance &&
                    (!unitarity_gated || unitarity < cfg.tolerance) && report.verdict != Verdict::Failed;

  if (cfg.output == "json") {
    Json j;
    j["schema"] = kSchema;
    j["operator"] = operator_name(cfg, s);
    j["theta"] = theta_json(s);
    j["type"] = Json{{"d", t.d}, {"k", t.k}, {"m", t.m}};
    j["gybe_residual"] = gybe;
    j["far_commutativity_residual"] = far;
    j["unitarity_residual"] = unitarity;
    j["outer_diagonal"] = outer ? Json(*outer) : Json(nullptr);
    j["condition_i_residual"] = report.condition_i_residual;
    j["defect_plus_norm"] = report.defect_plus_norm;
    j["defect_minus_norm"] = report.defect_minus_norm;
    j["offdiagonal_ok"] = report.offdiagonal_ok;
    j["sampled_perp_max"] = report.sampled_perp_max;
    j["verdict"] = std::string(to_string(report.verdict));
    j["tolerance"] = cfg.tolerance;
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << "operator:                   " << operator_name(cfg, s) << " (" << t.d << "," << t.k << "," << t.m
        << ")\n";
    if (op.theta()) out << "theta:                      " << fmt10(*op.theta()) << "\n";
    out << "gYBE residual:              " << fmt10(gybe) << "\n"
        << "far-commutativity residual: " << fmt10(far) << "\n"
        << "unitarity residual:         " << fmt10(unitarity) << (unitarity_gated ? "" : " (not checked)") << "\n"
        << "outer-diagonal:             " << (outer ? (*outer ? "yes" : "no") : "n/a") << "\n"
        << "mu commutator residual:     " << fmt10(report.condition_i_residual) << "\n"
        << "defect+ norm:               " << fmt10(report.defect_plus_norm) << "\n"
        << "defect- norm:               " << fmt10(report.defect_minus_norm) << "\n"
        << "defects off-diagonal:       " << (report.offdiagonal_ok ? "yes" : "no") << "\n"
        << "sampled perpendicularity:   " << fmt10(report.sampled_perp_max) << "\n"
        << "verdict:                    " << to_string(report.verdict) << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kVerifyFailed;
}

int cmd_suite(const Config& cfg, std::ostream& out) {
  const auto s = load_enhancement(cfg);
  SuiteOptions so;
  so.samples = cfg.samples;
  so.max_strands = cfg.max_strands;
  so.max_len = cfg.max_len;
  so.seed = cfg.seed;
  so.rep = rep_options(cfg);
  const auto results = run_relation_suite(s, so);
  bool pass = true;
  for (const auto& r : results) pass &= r.max_residual < cfg.tolerance;

  if (cfg.output == "json") {
    Json j;
    j["schema"] = kSchema;
    j["operator"] = operator_name(cfg, s);
    j["theta"] = theta_json(s);
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["tolerance"] = cfg.tolerance;
    Json rel = Json::array();
    for (const auto& r : results) {
      Json e;
      e["relation"] = r.relation;
      e["samples"] = r.samples;
      e["max_residual"] = r.max_residual;
      e["worst_braid"] = r.worst ? Json(format_braid(*r.worst)) : Json(nullptr);
      e["worst_strands"] = r.worst ? Json(r.worst->strands()) : Json(nullptr);
      e["pass"] = r.max_residual < cfg.tolerance;
      rel.push_back(std::move(e));
    }
    j["relations"] = std::move(rel);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << "operator: " << operator_name(cfg, s);
    if (s.op().theta()) out << "  theta: " << fmt10(*s.op().theta());
    out << "  seed: " << cfg.seed << "\n";
    for (const auto& r : results) {
      out << (r.max_residual < cfg.tolerance ? "ok   " : "FAIL ") << r.relation << "  samples=" << r.samples
          << "  max_residual=" << fmt10(r.max_residual);
      if (r.worst && r.max_residual > 0) {
        out << "  worst=[" << (r.worst->length() ? format_braid(*r.worst) : "identity") << "] in B"
            << r.worst->strands();
      }
      out << "\n";
    }
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kVerifyFailed;
}

void add_common(CLI::App& sub, Config& cfg) {
  sub.add_option("--operator,-o", cfg.op, "type1|type2|type3|r232|custom:PATH")->capture_default_str();
  sub.add_option_function<double>(
         "--theta",
         [&cfg](double t) {
           cfg.theta = t;
           cfg.theta_given = true;
         },
         "angle parameter of type1-3 (default 0)");
  sub.add_option("--output", cfg.output, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub.add_option("--tolerance", cfg.tolerance, "residual threshold (default $GYB_TOLERANCE or 1e-9)")
      ->check(CLI::PositiveNumber);
  sub.add_option("--seed", cfg.seed, "seed for sampled braids")->capture_default_str();
  sub.add_option("--alpha", cfg.alpha, "alpha for custom operators")->capture_default_str();
  sub.add_option("--beta", cfg.beta, "beta for custom operators")->capture_default_str();
  sub.add_flag("--allow-large", cfg.allow_large, "lift the representation-size cap");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("GYB_TOLERANCE"); env && *env) {
    try {
      std::size_t used = 0;
      cfg.tolerance = std::stod(env, &used);
      if (used != std::string_view(env).size() || !(cfg.tolerance > 0)) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: GYB_TOLERANCE must be a positive number, got '" << env << "'\n";
      return kUsage;
    }
  }

  CLI::App app{"Link invariants from enhanced generalized Yang-Baxter operators", "gybinv"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "evaluate the invariant of a braid closure");
  add_common(*compute, cfg);
  compute->add_option("--braid,-b", cfg.braid, "braid word (e.g. \"1 -2 1\") or catalog name")->required();
  compute->add_option("--strands,-n", cfg.strands, "strand count (default: 1 + largest generator)")
      ->check(CLI::PositiveNumber);
  compute->add_option("--normalization", cfg.normalization, "raw|P|tilde")
      ->check(CLI::IsMember({"raw", "P", "tilde"}))
      ->capture_default_str();
  compute->add_option("--catalog", cfg.catalog, "extra link catalog (name<TAB>strands<TAB>word)");

  auto* verify = app.add_subcommand("verify", "check the operator equations and the enhancement");
  add_common(*verify, cfg);
  verify->add_option("--samples", cfg.samples, "sampled braids per strand count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* suite = app.add_subcommand("suite", "run the relation suite on seeded random braids");
  add_common(*suite, cfg);
  suite->add_option("--samples", cfg.samples, "braids per relation")->check(CLI::PositiveNumber)->capture_default_str();
  suite->add_option("--max-strands", cfg.max_strands, "largest strand count sampled")
      ->check(CLI::Range(1, 10))
      ->capture_default_str();
  suite->add_option("--max-length", cfg.max_len, "longest sampled word")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  set_warning_handler([&err](std::string_view msg) { err << "warning: " << msg << "\n"; });
  struct RestoreHandler {
    ~RestoreHandler() {
      set_warning_handler(
          [](std::string_view msg) { std::fprintf(stderr, "warning: %.*s\n", int(msg.size()), msg.data()); });
    }
  } restore;

  try {
    if (compute->parsed()) return cmd_compute(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_suite(cfg, out);
  } catch (const ResourceCapError& e) {
    err << "error: " << e.what() << " (pass --allow-large to proceed)\n";
    return kResourceCap;
  } catch (const EnhancementError& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const SingularMatrix& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace gyb::cli
