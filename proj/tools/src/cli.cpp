#include "goncurve_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "goncurve/gonality_engine.hpp"
#include "goncurve/json_io.hpp"
#include "goncurve/oracle.hpp"
#include "goncurve_cli/survey.hpp"

namespace goncurve::cli {

namespace {

struct Output {
  Json json;
  std::string text;
  int code = kOk;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse_error, path + ": " + e.what());
  }
}

CurveDocument load_curve(const std::string& path) {
  CurveDocument doc = curve_from_json(read_json_file(path));
  require_valid(doc.curve, true);
  return doc;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string certificate_text(const GonalityCertificate& cert) {
  std::ostringstream out;
  out << to_string(cert.family) << " curve of genus " << cert.genus << "\n";
  out << "claimed upper bound: " << cert.claimed_upper << " (degrees " << join(cert.degrees) << ", "
      << (cert.exact ? "exact" : "numeric") << " witness, residual " << cert.residual << ")\n";
  for (const auto& e : cert.exclusions) out << "degree " << e.degree << " excluded: " << to_string(e.kind) << "\n";
  return out.str();
}

Output cmd_gonality(const std::string& path, bool no_lower, const GonalityConfig& config) {
  CurveDocument doc = load_curve(path);
  GonalityCertificate cert = upper_bound(doc.curve, config);
  Output out{to_json(cert), certificate_text(cert)};
  if (!no_lower) {
    try {
      LowerBoundReport lower = lower_bound(doc.curve, config);
      out.json["lower_bound"] = to_json(lower);
      out.text += "lower bound: " + std::to_string(lower.bound) + " (" + to_string(lower.grade) + "; exact rows give " +
                  std::to_string(lower.exact_bound) + ")\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::too_large) throw;
      out.json["lower_bound"] = nullptr;
      out.json["lower_bound_error"] = e.what();
      out.text += std::string("lower bound skipped: ") + e.what() + "\n";
    }
  }
  return out;
}

Output cmd_hyperelliptic(const std::string& path, const GonalityConfig& config) {
  CurveDocument doc = load_curve(path);
  Output out;
  if (doc.family() == Family::binary) {
    HyperellipticResult r = hyperelliptic_binary(doc.binary());
    out.json = {{"hyperelliptic", r.hyperelliptic},
                {"automorphism", r.automorphism ? to_json(*r.automorphism) : Json(nullptr)},
                {"evidence", "exact"}};
    out.text = std::string(r.hyperelliptic ? "hyperelliptic" : "not hyperelliptic") +
               (r.automorphism ? ", automorphism " + r.automorphism->to_string() : std::string()) + "\n";
    return out;
  }
  IdentifyResult r = identify_pairs(doc.irreducible().pairs, 2, config);
  const bool yes = r.pencil.has_value();
  const std::string evidence = yes ? (r.pencil->is_numeric() ? "numeric" : "exact") : to_string(r.exclusion);
  out.json = {{"hyperelliptic", yes},
              {"automorphism", nullptr},
              {"witness", yes ? to_json(*r.pencil) : Json(nullptr)},
              {"evidence", evidence}};
  out.text = std::string(yes ? "hyperelliptic" : "not hyperelliptic") + " (" + evidence + ")\n";
  return out;
}

std::pair<int, int> parse_split(const std::string& text) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    fail(ErrorCode::parse_error, "--split expects k1,k2, got '" + text + "'");
  }
}

Output not_found(Exclusion kind, const std::string& what) {
  Output out;
  out.json = {{"found", false}, {"exclusion", to_string(kind)}};
  out.text = "no witness " + what + " (" + to_string(kind) + ")\n";
  return out;
}

Output cmd_witness(const std::string& path, int degree, const std::string& split, bool oracle_check,
                   const GonalityConfig& config) {
  CurveDocument doc = load_curve(path);
  const int g = genus(doc.curve);
  GonalityCertificate cert;
  cert.genus = g;
  cert.config = config.solver;
  if (doc.family() == Family::irreducible) {
    if (degree < 1) fail(ErrorCode::invalid_argument, "irreducible curves need --degree k with k >= 1");
    IdentifyResult r = identify_pairs(doc.irreducible().pairs, degree, config);
    Output out;
    if (r.pencil) {
      cert.family = Family::irreducible;
      cert.witness = {*r.pencil};
      cert.degrees = {r.degree};
      cert.claimed_upper = r.degree;
      cert.exact = !r.pencil->is_numeric();
      cert.residual = r.residual;
      out = {to_json(cert), certificate_text(cert)};
      out.json["found"] = true;
    } else {
      out = not_found(r.exclusion, "of degree " + std::to_string(degree));
    }
    out.json["degree"] = degree;
    if (oracle_check) {
      if (degree > 3) fail(ErrorCode::invalid_argument, "--oracle-check supports degree <= 3");
      oracle::Verdict v = oracle::exact_min_identify_degree(doc.irreducible().pairs, degree).back();
      bool agrees = v == oracle::Verdict::undecided || (v == oracle::Verdict::exists && r.pencil) ||
                    (v == oracle::Verdict::empty && !r.pencil && r.exclusion == Exclusion::exact);
      out.json["oracle"] = oracle::to_string(v);
      out.json["oracle_agrees"] = agrees;
      out.text += "oracle: " + oracle::to_string(v) + (agrees ? " (agrees)\n" : " (DISAGREES)\n");
    }
    return out;
  }

  if (oracle_check) fail(ErrorCode::invalid_argument, "--oracle-check applies to irreducible curves");
  std::vector<std::pair<int, int>> splits;
  if (!split.empty()) {
    splits.push_back(parse_split(split));
  } else if (degree >= 2) {
    for (int k1 = degree - 1; k1 >= 1; --k1) splits.emplace_back(k1, degree - k1);
  } else {
    fail(ErrorCode::invalid_argument, "binary curves need --split k1,k2 or --degree t with t >= 2");
  }
  Exclusion kind = Exclusion::exact;
  for (auto [k1, k2] : splits) {
    JointResult r = binary_witness(doc.binary(), k1, k2, config);
    if (r.pencils) {
      cert.family = Family::binary;
      cert.witness = {r.pencils->first, r.pencils->second};
      cert.degrees = {r.degrees.first, r.degrees.second};
      cert.claimed_upper = r.degrees.first + r.degrees.second;
      cert.exact = !r.pencils->first.is_numeric() && !r.pencils->second.is_numeric();
      cert.residual = r.residual;
      Output out{to_json(cert), certificate_text(cert)};
      out.json["found"] = true;
      out.json["split"] = {k1, k2};
      return out;
    }
    if (r.exclusion == Exclusion::search_exhausted) kind = Exclusion::search_exhausted;
  }
  return not_found(kind, split.empty() ? "of total degree " + std::to_string(degree) : "with split " + split);
}

Output cmd_verify(const std::string& curve_path, const std::string& cert_path, double tol) {
  CurveDocument doc = curve_from_json(read_json_file(curve_path));
  GonalityCertificate cert = certificate_from_json(read_json_file(cert_path));
  VerificationReport report = verify_certificate(doc.curve, cert, tol);
  Output out{to_json(report), std::string(report.ok ? "certificate verified" : "certificate REJECTED") +
                                  ", claimed upper " + std::to_string(report.claimed_upper) + "\n"};
  for (const auto& f : report.failures) out.text += "  " + f + "\n";
  return out;
}

Output cmd_random(const std::string& family, int g, std::uint64_t seed, int height) {
  CurveDocument doc = random_curve(parse_family(family), g, seed, height);
  Json j = to_json(doc);
  return {j, dump_canonical(j) + "\n"};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::invalid_argument, "cannot write " + path);
  out << content;
}

std::string error_name(ErrorCode code) {
  std::string name(to_string(code));
  return name;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gonality witnesses and bounds for nodal curves with rational components", "goncurve"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-9;
  int restarts = 200, max_degree = 0;
  std::uint64_t seed = 0;
  bool exact_only = false;
  std::string format = "json", output;
  auto* tol_opt = app.add_option("--tol", tol, "Numeric acceptance tolerance");
  auto* restarts_opt = app.add_option("--restarts", restarts, "Newton restarts per solve");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed");
  auto* degree_cap = app.add_option("--max-degree", max_degree, "Stop the upper-bound search past this degree");
  app.add_flag("--exact-only", exact_only, "Lower bounds use exact rows only");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", output, "Write the result to FILE");

  std::string curve_path, cert_path;
  bool no_lower = false;
  auto* gonality = app.add_subcommand("gonality", "Upper bound certificate and lower-bound report");
  gonality->add_option("curve", curve_path, "Curve JSON file")->required();
  gonality->add_flag("--no-lower", no_lower, "Skip the lower-bound report");

  auto* hyper = app.add_subcommand("hyperelliptic", "Decide whether the curve is hyperelliptic");
  hyper->add_option("curve", curve_path, "Curve JSON file")->required();

  int degree = 0;
  std::string split;
  bool oracle_check = false;
  auto* witness = app.add_subcommand("witness", "Search for a witness at fixed degree");
  witness->add_option("curve", curve_path, "Curve JSON file")->required();
  auto* degree_opt = witness->add_option("--degree", degree, "Degree k (binary: total degree)");
  witness->add_option("--split", split, "Binary component degrees k1,k2")->excludes(degree_opt);
  witness->add_flag("--oracle-check", oracle_check, "Compare with the exact oracle (irreducible, k <= 3)");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate against a curve");
  verify->add_option("curve", curve_path, "Curve JSON file")->required();
  verify->add_option("certificate", cert_path, "Certificate JSON file")->required();

  std::string family = "irreducible";
  int g = 2, height = 1000, trials = 10;
  auto* random = app.add_subcommand("random", "Generate a seeded random curve");
  random->add_option("--family", family)->check(CLI::IsMember({"irreducible", "binary"}));
  random->add_option("--genus", g)->required();
  random->add_option("--height", height);

  std::string csv_path;
  bool no_timing = false;
  auto* survey = app.add_subcommand("survey", "Bounds over many random curves");
  survey->add_option("--family", family)->check(CLI::IsMember({"irreducible", "binary"}));
  survey->add_option("--genus", g)->required();
  survey->add_option("--trials", trials);
  survey->add_option("--height", height);
  survey->add_option("--csv", csv_path, "CSV summary path (default: OUTPUT.csv when -o is given)");
  survey->add_flag("--no-timing", no_timing, "Record 0 ms so reports are byte-identical");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << dump_canonical({{"error", "ParseError"}, {"message", e.what()}}) << "\n";
    return kInputError;
  }

  try {
    GonalityConfig config;
    if (const char* env = std::getenv("GONCURVE_CONFIG"); env && *env) {
      config = config_from_json(read_json_file(env), config);
    }
    if (tol_opt->count()) config.solver.tol = tol;
    if (restarts_opt->count()) config.solver.restarts = restarts;
    if (seed_opt->count()) config.solver.seed = seed;
    if (degree_cap->count()) config.max_degree = max_degree;
    if (exact_only) config.allow_heuristic = false;
    if (config.solver.restarts < 1 || config.solver.tol <= 0) {
      fail(ErrorCode::invalid_argument, "--restarts must be positive and --tol > 0");
    }

    Output result;
    if (*gonality) {
      result = cmd_gonality(curve_path, no_lower, config);
    } else if (*hyper) {
      result = cmd_hyperelliptic(curve_path, config);
    } else if (*witness) {
      result = cmd_witness(curve_path, degree, split, oracle_check, config);
    } else if (*verify) {
      result = cmd_verify(curve_path, cert_path, config.solver.tol);
    } else if (*random) {
      result = cmd_random(family, g, config.solver.seed, height);
    } else if (*survey) {
      SurveyOptions options{parse_family(family), g, trials, config.solver.seed, height, !no_timing};
      SurveyReport report = run_survey(options, config, &err);
      result.json = to_json(report);
      result.text = to_csv(report);
      std::string csv_target = !csv_path.empty() ? csv_path : (!output.empty() ? output + ".csv" : std::string());
      if (!csv_target.empty()) write_file(csv_target, to_csv(report));
      if (report.budget_exceeded) result.code = kBudgetExceeded;
    }

    const std::string rendered = format == "text" ? result.text : dump_canonical(result.json) + "\n";
    if (output.empty()) {
      out << rendered;
    } else {
      write_file(output, rendered);
    }
    return result.code;
  } catch (const SolverBudgetExceeded& e) {
    err << dump_canonical({{"error", error_name(e.code())}, {"message", e.what()}, {"partial", to_json(e.partial())}})
        << "\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << dump_canonical({{"error", error_name(e.code())}, {"message", e.what()}}) << "\n";
    return kInputError;
  }
}

}  // namespace goncurve::cli
