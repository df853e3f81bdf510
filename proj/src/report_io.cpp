#include "s1d/report_io.hpp"

#include <cmath>

#include <fmt/format.h>

#include "s1d/potential_io.hpp"

namespace s1d {

namespace {

nlohmann::json fit_json(const FitResult& f) {
  nlohmann::json j = {{"slope", nullptr}, {"at_rounding_floor", f.at_rounding_floor}};
  if (std::isfinite(f.slope)) j["slope"] = f.slope;
  return j;
}

nlohmann::json fits_json(const std::map<int, FitResult>& fits) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, f] : fits) j[std::to_string(k)] = fit_json(f);
  return j;
}

}  // namespace

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

nlohmann::json to_json(const SweepReport& r) {
  const auto& c = r.config;
  nlohmann::json config = {{"V", to_json(c.V)},
                           {"U", to_json(c.U)},
                           {"W", to_json(c.W)},
                           {"eps_list", c.eps_list},
                           {"tol", c.tol},
                           {"convention", convention_name(c.convention)},
                           {"delta", c.delta}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json jr = {{"eps", row.eps},
                         {"eigenvalues", row.eigenvalues},
                         {"predictions_minus", row.predictions_minus},
                         {"predictions_plus", row.predictions_plus},
                         {"residuals", row.residuals(c.convention)},
                         {"residuals_minus", row.residuals_minus},
                         {"residuals_plus", row.residuals_plus},
                         {"low_lying", row.low_lying},
                         {"scaled", row.scaled},
                         {"exterior_mass", row.exterior_mass},
                         {"finite_eigenvalues", row.finite_eigenvalues},
                         {"finite_prediction", nullptr}};
    if (row.finite_prediction) jr["finite_prediction"] = *row.finite_prediction;
    rows.push_back(std::move(jr));
  }
  nlohmann::json j = {{"config", config},
                      {"rows", rows},
                      {"fits", fits_json(r.fits)},
                      {"leading_order_fits", fits_json(r.leading_fits)},
                      {"finite_fit", nullptr},
                      {"sign_resolution", r.sign_resolution}};
  if (r.finite_fit) j["finite_fit"] = fit_json(*r.finite_fit);
  if (r.low_lying) j["low_lying"] = {{"omega", r.low_lying->omega}, {"kappa", r.low_lying->kappa}};
  return j;
}

std::string to_csv(const SweepReport& r) {
  std::string out = "eps,k,lambda,pred_minus,pred_plus,resid_minus,resid_plus,ext_mass\n";
  auto cell = [](const std::vector<double>& v, std::size_t k) {
    return k < v.size() ? format_number(v[k]) : std::string();
  };
  for (const auto& row : r.rows) {
    for (std::size_t k = 0; k < row.scaled.size(); ++k) {
      out += fmt::format("{},{},{},{},{},{},{},{}\n", format_number(row.eps), k,
                         format_number(row.low_lying[k]),
                         cell(row.predictions_minus, k), cell(row.predictions_plus, k),
                         cell(row.residuals_minus, k), cell(row.residuals_plus, k),
                         cell(row.exterior_mass, k));
    }
  }
  return out;
}

}  // namespace s1d
