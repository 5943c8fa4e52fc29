#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace handlecalc::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;

  bool passed() const { return correct && seconds < budget_seconds; }
};

/// Runs every acceptance criterion. Randomised criteria draw from `seed`.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// One "PASS|FAIL <id> <name> ..." line.
std::string format_line(const CriterionResult& r);

}  // namespace handlecalc::acceptance
