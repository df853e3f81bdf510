#include "s1d/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "s1d/acceptance.hpp"
#include "s1d/asymptotics.hpp"
#include "s1d/error.hpp"
#include "s1d/harness.hpp"
#include "s1d/line_spectrum.hpp"
#include "s1d/point_models.hpp"
#include "s1d/potential_io.hpp"
#include "s1d/report_io.hpp"

namespace s1d::cli {

namespace {

// Human-readable numbers.
std::string h(double x) { return fmt::format("{:.6g}", x); }

struct MomentSpec {
  std::string name;
  double param = 0.0;
};

MomentSpec parse_moment(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--moment", "expected sine:b or harmonic:k");
  MomentSpec m{text.substr(0, colon), 0.0};
  if (m.name != "sine" && m.name != "harmonic") {
    throw CLI::ValidationError("--moment", "unknown moment '" + m.name + "'");
  }
  try {
    std::size_t used = 0;
    m.param = std::stod(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw CLI::ValidationError("--moment", "bad number in '" + text + "'");
  }
  return m;
}

struct Options {
  std::string potential, v, u, w, moment, format = "text", output, convention = "minus",
                                        model;
  double tol = 0.0;
  double lo = 0.0, hi = 1.0;
  std::vector<double> eps;
  int criterion = 0;
};

Potential load(const std::string& text, const char* flag) {
  if (text.empty()) throw DomainError("cli", std::string("missing ") + flag);
  return parse_potential(text);
}

Potential load_or_zero(const std::string& text) {
  return text.empty() ? zero_potential() : parse_potential(text);
}

// --potential and --V are interchangeable for single-potential commands.
Potential main_potential(const Options& o) {
  if (!o.potential.empty() && !o.v.empty()) {
    throw DomainError("cli", "give either --potential or --V, not both");
  }
  return load(o.potential.empty() ? o.v : o.potential, "--potential");
}

double tol_or(const Options& o, double fallback) {
  if (o.tol == 0.0) return fallback;
  if (!(o.tol > 0.0)) throw DomainError("cli", "--tol must be positive");
  return o.tol;
}

int cmd_eigs(const Options& o, std::ostream& out) {
  const auto ev = negative_eigenvalues(main_potential(o), tol_or(o, 1e-12));
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : ev) {
      j.push_back({{"node_index", s.node_index},
                   {"omega", s.omega},
                   {"lambda", s.lambda()},
                   {"mismatch_residual", s.mismatch_residual}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "k omega lambda\n";
  for (const auto& s : ev) out << s.node_index << " " << h(s.omega) << " " << h(s.lambda()) << "\n";
  return 0;
}

int cmd_regge(const Options& o, std::ostream& out) {
  const auto w = regge_eigenvalues(main_potential(o), tol_or(o, 1e-12));
  if (o.format == "json") {
    out << nlohmann::json(w).dump() << "\n";
  } else {
    for (double x : w) out << h(x) << "\n";
  }
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  const int n = count_negative(main_potential(o));
  if (o.format == "json") {
    out << nlohmann::json({{"count", n}}).dump() << "\n";
  } else {
    out << n << "\n";
  }
  return 0;
}

int cmd_resonances(const Options& o, std::ostream& out) {
  const auto r = resonance_set(main_potential(o), o.lo, o.hi, tol_or(o, 1e-10));
  if (o.format == "json") {
    out << nlohmann::json(r).dump() << "\n";
  } else {
    for (double a : r) out << h(a) << "\n";
  }
  return 0;
}

int cmd_theta_eta(const Options& o, std::ostream& out) {
  const auto [theta, eta] = theta_eta(main_potential(o), load_or_zero(o.u));
  if (o.format == "json") {
    out << nlohmann::json({{"theta", theta}, {"eta", eta}}).dump() << "\n";
  } else {
    out << "theta " << h(theta) << "\neta " << h(eta) << "\n";
  }
  return 0;
}

int cmd_threshold(const Options& o, std::ostream& out) {
  ThresholdResult r;
  if (!o.moment.empty()) {
    const auto m = parse_moment(o.moment);
    r = threshold_alpha0(m.name == "sine" ? sine_moment(m.param) : harmonic_moment(m.param),
                         tol_or(o, 0.0));
  } else {
    r = threshold_alpha0(load(o.w, "--W or --moment"), tol_or(o, 0.0));
  }
  if (o.format == "json") {
    out << nlohmann::json({{"alpha0", r.alpha0}, {"f_residual", r.f_residual}}).dump() << "\n";
  } else {
    out << "alpha0 " << h(r.alpha0) << "\nf_residual " << h(r.f_residual) << "\n";
  }
  return 0;
}

int cmd_predict(const Options& o, std::ostream& out) {
  const bool json = o.format == "json";
  if (o.model == "low-lying") {
    const auto p = low_lying_prediction(main_potential(o), load_or_zero(o.u),
                                        parse_convention(o.convention));
    nlohmann::json j = {{"omega", p.omega},
                        {"kappa", p.kappa},
                        {"convention", convention_name(p.convention)}};
    nlohmann::json rows = nlohmann::json::array();
    for (double e : o.eps) {
      if (!(e > 0.0)) throw DomainError("predict", "eps must be positive");
      std::vector<double> lam;
      for (std::size_t k = 0; k < p.size(); ++k) lam.push_back(p.predict(k, e));
      rows.push_back({{"eps", e}, {"lambda", lam}});
    }
    j["predictions"] = rows;
    if (json) {
      out << j.dump(2) << "\n";
      return 0;
    }
    out << "k omega kappa\n";
    for (std::size_t k = 0; k < p.size(); ++k) {
      out << k << " " << h(p.omega[k]) << " " << h(p.kappa[k]) << "\n";
    }
    for (double e : o.eps) {
      out << "eps " << h(e) << ":";
      for (std::size_t k = 0; k < p.size(); ++k) out << " " << h(p.predict(k, e));
      out << "\n";
    }
    return 0;
  }
  if (o.model == "delta") {
    const auto p = delta_prediction(load_or_zero(o.w), load(o.u, "--U"));
    const nlohmann::json j = {{"alpha", p.alpha},         {"lambda0", p.lambda0},
                              {"lambda1", p.lambda1},     {"gamma", p.gamma},
                              {"gamma_ordered", p.gamma_ordered}, {"alpha1", p.alpha1},
                              {"psi0", p.psi0},           {"dpsi_left", p.dpsi_left},
                              {"dpsi_right", p.dpsi_right}};
    if (json) {
      out << j.dump(2) << "\n";
      return 0;
    }
    for (const char* k : {"alpha", "lambda0", "lambda1", "gamma", "alpha1", "psi0", "dpsi_left",
                          "dpsi_right"}) {
      out << k << " " << h(j.at(k).get<double>()) << "\n";
    }
    for (double e : o.eps) out << "eps " << h(e) << ": " << h(p.predict(e)) << "\n";
    return 0;
  }
  const auto p = resonant_finite_prediction(main_potential(o), load(o.u, "--U"));
  if (json) {
    out << nlohmann::json({{"value", p.value},
                           {"threshold_a", p.threshold_a},
                           {"u_v2", p.u_v2},
                           {"v_minus", p.v_minus},
                           {"v_plus", p.v_plus}})
               .dump(2)
        << "\n";
  } else {
    out << "value " << h(p.value) << "\nthreshold_a " << h(p.threshold_a) << "\n";
  }
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepConfig c;
  c.V = load_or_zero(o.potential.empty() ? o.v : o.potential);
  c.U = load_or_zero(o.u);
  c.W = load_or_zero(o.w);
  if (!o.eps.empty()) c.eps_list = o.eps;
  c.tol = tol_or(o, 1e-12);
  c.convention = parse_convention(o.convention);
  c.output = o.output;
  const auto report = sweep_report(c);
  if (o.format == "csv") {
    out << to_csv(report);
  } else {
    out << to_json(report).dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CriterionResult> results;
  if (o.criterion != 0) {
    results.push_back(run_criterion(o.criterion));
  } else {
    results = run_acceptance();
  }
  bool all = true;
  for (const auto& r : results) {
    out << format_result(r) << "\n" << std::flush;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of 1D Schroedinger operators with piecewise-constant potentials", "s1d"};
  app.require_subcommand(1);
  Options o;

  auto potential_flags = [&](CLI::App* sub, bool extra) {
    sub->add_option("--potential", o.potential, "potential as JSON, or @file");
    sub->add_option("--V", o.v, "V as JSON, or @file");
    if (extra) {
      sub->add_option("--U", o.u, "U as JSON, or @file");
      sub->add_option("--W", o.w, "W as JSON, or @file");
    }
  };
  auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--tol", o.tol, "tolerance");
    sub->add_option("--output", o.output, "write output to this file");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats));
  };

  auto* eigs = app.add_subcommand("eigs", "negative eigenvalues");
  potential_flags(eigs, false);
  common(eigs, {"text", "json"});
  auto* regge = app.add_subcommand("regge", "positive Regge eigenvalues");
  potential_flags(regge, false);
  common(regge, {"text", "json"});
  auto* count = app.add_subcommand("count", "number of negative eigenvalues");
  potential_flags(count, false);
  common(count, {"text", "json"});
  auto* res = app.add_subcommand("resonances", "couplings alpha in (lo, hi) with alpha V resonant");
  potential_flags(res, false);
  common(res, {"text", "json"});
  res->add_option("--lo", o.lo, "lower end of the coupling interval");
  res->add_option("--hi", o.hi, "upper end of the coupling interval");
  auto* te = app.add_subcommand("theta-eta", "interface parameters of a resonant V");
  potential_flags(te, true);
  common(te, {"text", "json"});
  auto* th = app.add_subcommand("threshold", "threshold coupling alpha0");
  th->add_option("--W", o.w, "compact W as JSON, or @file");
  th->add_option("--moment", o.moment, "sine:b or harmonic:k")->check([](const std::string& s) {
    parse_moment(s);
    return std::string();
  });
  common(th, {"text", "json"});
  auto* pr = app.add_subcommand("predict", "asymptotic predictions");
  pr->add_option("model", o.model, "low-lying, delta or resonant")
      ->required()
      ->check(CLI::IsMember({"low-lying", "delta", "resonant"}));
  potential_flags(pr, true);
  common(pr, {"text", "json"});
  pr->add_option("--convention", o.convention, "sign convention")
      ->check(CLI::IsMember({"minus", "plus"}));
  pr->add_option("--eps", o.eps, "evaluate the predictions at these eps")->delimiter(',');
  auto* sw = app.add_subcommand("sweep", "eps-sweep against the predictions");
  potential_flags(sw, true);
  common(sw, {"json", "csv"});
  sw->add_option("--eps", o.eps, "decreasing eps values in (0, 1)")->delimiter(',');
  sw->add_option("--convention", o.convention, "sign convention for fits")
      ->check(CLI::IsMember({"minus", "plus"}));
  auto* ve = app.add_subcommand("verify", "run the acceptance criteria");
  ve->add_option("--criterion", o.criterion, "run only this criterion")->check(CLI::Range(1, 9));
  ve->add_option("--output", o.output, "write output to this file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }
  if (sw->parsed() && o.format == "text") o.format = "json";
  if (th->parsed() && o.moment.empty() == o.w.empty()) {
    err << "usage error: threshold needs exactly one of --moment and --W\n" << th->help();
    return 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (eigs->parsed()) code = cmd_eigs(o, buf);
    else if (regge->parsed()) code = cmd_regge(o, buf);
    else if (count->parsed()) code = cmd_count(o, buf);
    else if (res->parsed()) code = cmd_resonances(o, buf);
    else if (te->parsed()) code = cmd_theta_eta(o, buf);
    else if (th->parsed()) code = cmd_threshold(o, buf);
    else if (pr->parsed()) code = cmd_predict(o, buf);
    else if (sw->parsed()) code = cmd_sweep(o, buf);
    else if (ve->parsed()) code = cmd_verify(o, o.output.empty() ? out : buf);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (o.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "error: cli: cannot write '" << o.output << "'\n";
      return 1;
    }
    f << buf.str();
  }
  return code;
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

}  // namespace s1d::cli
