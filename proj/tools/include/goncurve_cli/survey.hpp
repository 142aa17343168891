#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "goncurve/gonality_engine.hpp"
#include "goncurve/json_io.hpp"

namespace goncurve::cli {

struct SurveyRow {
  int trial = 0;
  std::uint64_t seed = 0;
  int genus = 0;
  std::optional<int> upper;  // empty when the solver budget ran out
  int lower = 0;
  Evidence lower_grade = Evidence::exact;
  bool exact = false;
  long ms = 0;
};

struct SurveySummary {
  double generic = 0.0;
  double below = 0.0;
  double undecided = 0.0;
};

struct SurveyReport {
  Family family = Family::irreducible;
  int genus = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<SurveyRow> rows;
  SurveySummary summary;
  bool budget_exceeded = false;
};

struct SurveyOptions {
  Family family = Family::irreducible;
  int genus = 2;
  int trials = 10;
  std::uint64_t seed = 0;
  int height = 1000;
  bool timing = true;
};

/// Runs upper and lower bounds on `trials` random curves seeded from
/// options.seed. `log`, when given, receives one line per trial.
SurveyReport run_survey(const SurveyOptions& options, const GonalityConfig& config, std::ostream* log = nullptr);

Json to_json(const SurveyReport& report);
std::string to_csv(const SurveyReport& report);

}  // namespace goncurve::cli
