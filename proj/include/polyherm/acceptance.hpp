#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyherm/io.hpp"

namespace polyherm {

inline constexpr std::uint64_t kDefaultSeed = 0x504F4C59;

/// One family of checks inside a criterion.
struct SubCheck {
  std::string name;
  double tolerance = 0.0;
  int checks = 0;
  int failures = 0;
  double worst = 0.0;
  std::string first_error;  // error code of the first check that threw
  bool gating = true;       // false: reported only
  std::string note;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::vector<SubCheck> subchecks;
  Json data = Json::object();
};

/// Criteria 1 to 6; each draws from its own generator seeded with seed + id.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_suite(std::uint64_t seed = kDefaultSeed);

/// Timing is left out unless asked for so that reports are reproducible.
Json to_json(const CriterionResult& r, bool with_timing = false);
/// "PASS criterion 3: ..." followed by the failing or worst subcheck.
std::string summary_line(const CriterionResult& r);

}  // namespace polyherm
