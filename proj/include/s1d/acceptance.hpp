#ifndef S1D_ACCEPTANCE_HPP
#define S1D_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace s1d {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The acceptance criteria, one result each. An exception inside a
/// criterion is reported as a failure of that criterion.
std::vector<CriterionResult> run_acceptance();

/// Runs a single criterion (1-9).
CriterionResult run_criterion(int id);

std::string format_result(const CriterionResult& r);

}  // namespace s1d

#endif  // S1D_ACCEPTANCE_HPP
