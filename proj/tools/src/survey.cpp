#include "goncurve_cli/survey.hpp"

#include <chrono>
#include <sstream>

#include "goncurve/seed.hpp"

namespace goncurve::cli {

SurveyReport run_survey(const SurveyOptions& options, const GonalityConfig& config, std::ostream* log) {
  SurveyReport report;
  report.family = options.family;
  report.genus = options.genus;
  report.trials = options.trials;
  report.seed = options.seed;
  const int expected = generic_gonality(options.genus);
  int generic = 0, below = 0;
  for (int trial = 0; trial < options.trials; ++trial) {
    SurveyRow row;
    row.trial = trial;
    row.seed = derive_seed(options.seed, std::uint64_t(trial));
    row.genus = options.genus;
    const auto start = std::chrono::steady_clock::now();
    CurveDocument doc = random_curve(options.family, options.genus, row.seed, options.height);
    try {
      GonalityCertificate cert = upper_bound(doc.curve, config);
      row.upper = cert.claimed_upper;
      row.exact = cert.exact;
    } catch (const SolverBudgetExceeded&) {
      report.budget_exceeded = true;
    }
    LowerBoundReport lower = lower_bound(doc.curve, config);
    row.lower = lower.bound;
    row.lower_grade = lower.grade;
    if (options.timing) {
      row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    if (row.upper && *row.upper < expected) {
      ++below;
    } else if (row.upper && *row.upper == expected && row.lower == expected) {
      ++generic;
    }
    if (log) {
      *log << "trial " << trial << " seed " << row.seed << " upper "
           << (row.upper ? std::to_string(*row.upper) : std::string("budget-exceeded")) << " lower " << row.lower
           << " (" << to_string(row.lower_grade) << ")\n";
    }
    report.rows.push_back(row);
  }
  if (options.trials > 0) {
    report.summary.generic = double(generic) / options.trials;
    report.summary.below = double(below) / options.trials;
    report.summary.undecided = double(options.trials - generic - below) / options.trials;
  }
  return report;
}

Json to_json(const SurveyReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"trial", row.trial},
                    {"seed", row.seed},
                    {"genus", row.genus},
                    {"upper", row.upper ? Json(*row.upper) : Json(nullptr)},
                    {"lower", row.lower},
                    {"lower_grade", to_string(row.lower_grade)},
                    {"exact", row.exact},
                    {"ms", row.ms}});
  }
  return Json{{"family", to_string(report.family)},
              {"genus", report.genus},
              {"trials", report.trials},
              {"seed", report.seed},
              {"generic_gonality", generic_gonality(report.genus)},
              {"rows", rows},
              {"summary",
               {{"generic", report.summary.generic},
                {"below", report.summary.below},
                {"undecided", report.summary.undecided}}},
              {"budget_exceeded", report.budget_exceeded}};
}

std::string to_csv(const SurveyReport& report) {
  std::ostringstream out;
  out << "trial,seed,genus,upper,lower,lower_grade,exact,ms\n";
  for (const auto& row : report.rows) {
    out << row.trial << ',' << row.seed << ',' << row.genus << ','
        << (row.upper ? std::to_string(*row.upper) : std::string("budget-exceeded")) << ',' << row.lower << ','
        << to_string(row.lower_grade) << ',' << (row.exact ? "true" : "false") << ',' << row.ms << '\n';
  }
  return out.str();
}

}  // namespace goncurve::cli
