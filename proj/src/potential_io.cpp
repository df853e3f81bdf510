#include "s1d/potential_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace s1d {

namespace {

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

std::vector<double> number_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw DomainError("parse_potential", std::string("missing array '") + key + "'");
  }
  std::vector<double> out;
  for (const auto& x : j.at(key)) {
    if (!x.is_number()) {
      throw DomainError("parse_potential", std::string("non-numeric entry in '") + key + "'");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const Potential& p) {
  return {{"breakpoints", to_vector(p.breakpoints())}, {"values", to_vector(p.values())}};
}

std::string kind_name(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::square_well: return "square_well";
    case PotentialKind::square_barrier: return "square_barrier";
    case PotentialKind::step_dipole: return "step_dipole";
    case PotentialKind::double_step: return "double_step";
    case PotentialKind::custom: return "custom";
  }
  return "custom";
}

PotentialKind parse_kind(std::string_view name) {
  if (name == "square_well") return PotentialKind::square_well;
  if (name == "square_barrier") return PotentialKind::square_barrier;
  if (name == "step_dipole") return PotentialKind::step_dipole;
  if (name == "double_step") return PotentialKind::double_step;
  if (name == "custom") return PotentialKind::custom;
  throw DomainError("builtin", "unknown potential kind '" + std::string(name) + "'");
}

nlohmann::json to_json(const PotentialSpec& spec) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : spec.params) params[k] = v;
  if (spec.kind == PotentialKind::custom) {
    params["breakpoints"] = spec.breakpoints;
    params["values"] = spec.values;
  }
  return {{"kind", kind_name(spec.kind)}, {"params", params}};
}

PotentialSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw DomainError("parse_potential", "spec needs a string 'kind'");
  }
  PotentialSpec spec;
  spec.kind = parse_kind(j.at("kind").get<std::string>());
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  if (!params.is_object()) throw DomainError("parse_potential", "'params' must be an object");
  for (const auto& [key, value] : params.items()) {
    if (key == "breakpoints" || key == "values") continue;
    if (!value.is_number()) {
      throw DomainError("parse_potential", "parameter '" + key + "' must be numeric");
    }
    spec.params[key] = value.get<double>();
  }
  if (spec.kind == PotentialKind::custom) {
    spec.breakpoints = number_list(params, "breakpoints");
    spec.values = number_list(params, "values");
  }
  return spec;
}

Potential potential_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("parse_potential", "expected a JSON object");
  if (j.contains("kind")) return builtin(spec_from_json(j));
  return make_piecewise(number_list(j, "breakpoints"), number_list(j, "values"));
}

Potential parse_potential(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw DomainError("parse_potential", "cannot open file '" + text.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("parse_potential", std::string("invalid JSON: ") + e.what());
  }
  return potential_from_json(j);
}

}  // namespace s1d
