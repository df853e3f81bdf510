#ifndef S1D_ASYMPTOTICS_HPP
#define S1D_ASYMPTOTICS_HPP

#include <string>
#include <vector>

#include "s1d/potential.hpp"

namespace s1d {

/// Sign s in lambda_k(eps) ~ -eps^-2 (omega_k + s eps kappa_k)^2.
enum class SignConvention { derivation_minus, theorem_plus };

std::string convention_name(SignConvention c);
SignConvention parse_convention(const std::string& name);

struct LowLyingPrediction {
  std::vector<double> omega;  ///< decreasing
  std::vector<double> kappa;
  SignConvention convention = SignConvention::derivation_minus;

  std::size_t size() const { return omega.size(); }
  double predict(std::size_t k, double eps) const { return predict(k, eps, convention); }
  double predict(std::size_t k, double eps, SignConvention c) const;
};

/// kappa_k = (integral of U v_k^2) / (2 omega_k |v_k|^2) over the bound states of V.
LowLyingPrediction low_lying_prediction(const Potential& v, const Potential& u,
                                        SignConvention convention =
                                            SignConvention::derivation_minus);

struct DeltaPrediction {
  double alpha = 0.0;  ///< integral of U
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double gamma = 0.0;          ///< pairwise |t - tau| kernel
  double gamma_ordered = 0.0;  ///< cumulative tau < t kernel
  double alpha1 = 0.0;
  double psi0 = 0.0;
  double dpsi_left = 0.0;
  double dpsi_right = 0.0;

  double predict(double eps) const { return lambda0 + eps * lambda1; }
};

/// Half of the double integral of U(t) |t - tau| U(tau).
double gamma_pairwise(const Potential& u);
/// The same quantity as the integral over tau < t of U(t) (t - tau) U(tau).
double gamma_ordered(const Potential& u);

DeltaPrediction delta_prediction(const Potential& w, const Potential& u);

struct ResonantPrediction {
  double value = 0.0;
  double threshold_a = 0.0;
  double u_v2 = 0.0;  ///< integral of U v^2
  double v_minus = 0.0;
  double v_plus = 0.0;
};

ResonantPrediction resonant_finite_prediction(const Potential& v, const Potential& u);

/// Low-lying eigenvalues exist for small eps iff V is non-zero with integral <= 0.
bool existence_verdict(const Potential& v);

}  // namespace s1d

#endif  // S1D_ASYMPTOTICS_HPP
