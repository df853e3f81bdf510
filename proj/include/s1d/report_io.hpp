#ifndef S1D_REPORT_IO_HPP
#define S1D_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "s1d/harness.hpp"

namespace s1d {

nlohmann::json to_json(const SweepReport& report);

/// One line per (eps, low-lying k):
/// eps,k,lambda,pred_minus,pred_plus,resid_minus,resid_plus,ext_mass
std::string to_csv(const SweepReport& report);

/// Numbers in machine formats: 17 significant digits.
std::string format_number(double x);

}  // namespace s1d

#endif  // S1D_REPORT_IO_HPP
