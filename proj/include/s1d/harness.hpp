#ifndef S1D_HARNESS_HPP
#define S1D_HARNESS_HPP

// eps-sweeps of H_eps = -d^2/dx^2 + W(x) + U(x/eps)/eps + V(x/eps)/eps^2.
// With t = x/eps, H_eps is unitarily equivalent to eps^-2 (-d^2/dt^2 + Q_eps),
// Q_eps(t) = V(t) + eps U(t) + eps^2 W(eps t), so every spectrum here is
// computed on the benign O(1) problem and rescaled.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "s1d/asymptotics.hpp"
#include "s1d/potential.hpp"

namespace s1d {

Potential assemble_scaled(const Potential& v, const Potential& u, const Potential& w, double eps);

struct SweepConfig {
  Potential V = zero_potential();
  Potential U = zero_potential();
  Potential W = zero_potential();
  std::vector<double> eps_list{0.08, 0.04, 0.02, 0.01};
  double tol = 1e-12;
  SignConvention convention = SignConvention::derivation_minus;
  double delta = 0.25;  ///< exterior-mass radius in x
  std::string output;
};

struct SweepRow {
  double eps = 0.0;
  std::vector<double> eigenvalues;  ///< all of them, increasing
  // Low-lying eigenvalues, matched in order with the predictions.
  std::vector<double> low_lying;
  std::vector<double> predictions_minus;
  std::vector<double> predictions_plus;
  std::vector<double> residuals_minus;
  std::vector<double> residuals_plus;
  std::vector<double> scaled;  ///< eps^2 lambda
  std::vector<double> exterior_mass;
  // Eigenvalues with bounded eps^2 lambda -> 0, and their prediction if any.
  std::vector<double> finite_eigenvalues;
  std::optional<double> finite_prediction;

  const std::vector<double>& residuals(SignConvention c) const {
    return c == SignConvention::derivation_minus ? residuals_minus : residuals_plus;
  }
};

struct FitResult {
  double slope = 0.0;
  bool at_rounding_floor = false;
};

/// Least-squares slope of log residual against log eps.
FitResult fit_order(const std::vector<std::pair<double, double>>& pairs);

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::optional<LowLyingPrediction> low_lying;
  std::map<int, FitResult> fits;           ///< residuals, chosen convention
  std::map<int, FitResult> leading_fits;   ///< |eps^2 lambda_k + omega_k^2|
  std::optional<FitResult> finite_fit;     ///< |finite lambda - prediction|
  std::string sign_resolution;             ///< minus, plus or undecided
};

std::vector<SweepRow> sweep(const SweepConfig& config);
SweepReport sweep_report(const SweepConfig& config);

struct CountReport {
  int n_T1 = 0;
  int n_regge = 0;
  std::vector<double> resonances_in_01;
  int literal = 0;  ///< |R(V) in (0, 1)|
  int birth = 0;    ///< weak-coupling eigenvalue born at alpha = 0+
  int reconciled = 0;
  bool consistent = false;
  bool literal_matches = false;
  double bound_value = 0.0;  ///< 1 + integral |x| |V^-|
  bool bound_holds = false;
};

CountReport verify_counting(const Potential& v);

struct BoundReport {
  int n_eps = 0;
  double bound = 0.0;
  bool holds = false;
};

BoundReport verify_bound(const Potential& v, const Potential& u, const Potential& w, double eps);

}  // namespace s1d

#endif  // S1D_HARNESS_HPP
