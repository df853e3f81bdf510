#include "s1d/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "s1d/error.hpp"
#include "s1d/line_spectrum.hpp"

namespace s1d {

Potential assemble_scaled(const Potential& v, const Potential& u, const Potential& w, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("assemble_scaled", "eps must lie in (0, 1)");
  return sum<double>({v, eps * u, scale(w, 1.0 / eps, 2)});
}

FitResult fit_order(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 3) throw DomainError("fit_order", "need at least 3 pairs");
  FitResult r;
  std::vector<std::pair<double, double>> logs;
  for (const auto& [e, res] : pairs) {
    if (!(e > 0.0)) throw DomainError("fit_order", "eps must be positive");
    if (res > 0.0) {
      logs.emplace_back(std::log(e), std::log(res));
    } else {
      r.at_rounding_floor = true;
    }
  }
  if (logs.size() < 2) {
    r.slope = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : logs) {
    mx += x;
    my += y;
  }
  mx /= logs.size();
  my /= logs.size();
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : logs) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0.0) throw DomainError("fit_order", "eps values must not all coincide");
  r.slope = sxy / sxx;
  return r;
}

namespace {

void check_config(const SweepConfig& c) {
  if (c.eps_list.empty()) throw DomainError("sweep", "eps_list must not be empty");
  for (std::size_t i = 0; i < c.eps_list.size(); ++i) {
    const double e = c.eps_list[i];
    if (!(e > 0.0 && e < 1.0)) throw DomainError("sweep", "every eps must lie in (0, 1)");
    if (i > 0 && !(e < c.eps_list[i - 1])) {
      throw DomainError("sweep", "eps_list must be strictly decreasing");
    }
  }
  if (!(c.tol > 0.0)) throw DomainError("sweep", "tol must be positive");
  if (!(c.delta > 0.0)) throw DomainError("sweep", "delta must be positive");
}

struct Predictors {
  std::optional<LowLyingPrediction> low;
  std::optional<DeltaPrediction> delta;
  std::optional<ResonantPrediction> resonant;

  std::optional<double> finite(double eps) const {
    if (delta) return delta->predict(eps);
    if (resonant) return resonant->value;
    return std::nullopt;
  }
};

Predictors predictors(const SweepConfig& c) {
  Predictors p;
  if (count_negative(c.V) > 0) p.low = low_lying_prediction(c.V, c.U, c.convention);
  try {
    if (c.V.is_zero()) {
      p.delta = delta_prediction(c.W, c.U);
    } else if (half_bound_state(c.V)) {
      p.resonant = resonant_finite_prediction(c.V, c.U);
    }
  } catch (const DomainError&) {
    // no finite eigenvalue is predicted for this configuration
  }
  return p;
}

SweepRow sweep_row(const SweepConfig& c, const Predictors& p, double eps) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  SweepRow row;
  row.eps = eps;
  const Potential q = assemble_scaled(c.V, c.U, c.W, eps);
  const auto states = negative_eigenvalues(q, c.tol);
  const double w_min = p.low ? p.low->omega.back() : 0.0;
  const double d = c.delta / eps;
  std::size_t k = 0;
  for (const auto& s : states) {
    const double lambda = s.lambda() / (eps * eps);
    row.eigenvalues.push_back(lambda);
    if (c.V.is_zero() || s.omega * s.omega < w_min * w_min / 4.0) {
      row.finite_eigenvalues.push_back(lambda);
      continue;
    }
    row.low_lying.push_back(lambda);
    row.scaled.push_back(s.lambda());
    const auto ef = eigenfunction(q, s.omega);
    row.exterior_mass.push_back(ef.solution().integral_of_square(-inf, -d) +
                                ef.solution().integral_of_square(d, inf));
    if (p.low && k < p.low->size()) {
      const double pm = p.low->predict(k, eps, SignConvention::derivation_minus);
      const double pp = p.low->predict(k, eps, SignConvention::theorem_plus);
      row.predictions_minus.push_back(pm);
      row.predictions_plus.push_back(pp);
      row.residuals_minus.push_back(std::abs(lambda - pm));
      row.residuals_plus.push_back(std::abs(lambda - pp));
    }
    ++k;
  }
  std::sort(row.eigenvalues.begin(), row.eigenvalues.end());
  row.finite_prediction = p.finite(eps);
  return row;
}

std::vector<SweepRow> run_rows(const SweepConfig& c, const Predictors& p) {
  std::vector<SweepRow> rows;
  for (double eps : c.eps_list) {
    try {
      rows.push_back(sweep_row(c, p, eps));
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("sweep", fmt::format("eps = {}: {}", eps, e.what()));
    }
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepConfig& config) {
  check_config(config);
  return run_rows(config, predictors(config));
}

SweepReport sweep_report(const SweepConfig& config) {
  check_config(config);
  const Predictors p = predictors(config);
  SweepReport r;
  r.config = config;
  r.rows = run_rows(config, p);
  r.low_lying = p.low;

  if (p.low) {
    bool minus_better = true, plus_better = true, any = false;
    for (std::size_t k = 0; k < p.low->size(); ++k) {
      std::vector<std::pair<double, double>> res, lead;
      for (const auto& row : r.rows) {
        const auto& rk = row.residuals(config.convention);
        if (k >= rk.size()) continue;
        res.emplace_back(row.eps, rk[k]);
        lead.emplace_back(row.eps, std::abs(row.scaled[k] + p.low->omega[k] * p.low->omega[k]));
        any = true;
        if (!(row.residuals_minus[k] < row.residuals_plus[k])) minus_better = false;
        if (!(row.residuals_plus[k] < row.residuals_minus[k])) plus_better = false;
      }
      if (res.size() >= 3) {
        r.fits[static_cast<int>(k)] = fit_order(res);
        r.leading_fits[static_cast<int>(k)] = fit_order(lead);
      }
    }
    r.sign_resolution = !any ? "n/a" : minus_better ? "minus" : plus_better ? "plus" : "undecided";
  } else {
    r.sign_resolution = "n/a";
  }

  std::vector<std::pair<double, double>> fin;
  for (const auto& row : r.rows) {
    if (row.finite_prediction && !row.finite_eigenvalues.empty()) {
      fin.emplace_back(row.eps, std::abs(row.finite_eigenvalues.back() - *row.finite_prediction));
    }
  }
  if (fin.size() >= 3) r.finite_fit = fit_order(fin);
  return r;
}

CountReport verify_counting(const Potential& v) {
  if (v.is_zero()) throw DomainError("verify_counting", "V must not vanish identically");
  CountReport r;
  r.n_T1 = count_negative(v);
  r.n_regge = static_cast<int>(regge_eigenvalues(v).size());
  r.resonances_in_01 = resonance_set(v, 0.0, 1.0);
  r.literal = static_cast<int>(r.resonances_in_01.size());
  r.birth = existence_verdict(v) ? 1 : 0;
  r.reconciled = r.literal + r.birth;
  r.consistent = r.n_T1 == r.n_regge && r.n_regge == r.reconciled;
  r.literal_matches = r.literal == r.n_T1;
  r.bound_value = 1.0 + moment(v, 1, MomentKind::negative_part_abs);
  r.bound_holds = r.n_T1 <= r.bound_value;
  return r;
}

BoundReport verify_bound(const Potential& v, const Potential& u, const Potential& w, double eps) {
  BoundReport r;
  r.n_eps = count_negative(assemble_scaled(v, u, w, eps));
  r.bound = 1.0 + moment(v, 1, MomentKind::negative_part_abs) +
            eps * moment(u, 1, MomentKind::negative_part_abs) +
            moment(w, 1, MomentKind::negative_part_abs);
  r.holds = r.n_eps <= r.bound;
  return r;
}

}  // namespace s1d
