#include "sliceball/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "sliceball/bounds.hpp"

namespace sliceball {

namespace {

using nlohmann::json;

json quat_to_array(const Quaternion& q) {
  return json::array({q.w, q.x, q.y, q.z});
}

Quaternion quat_from_array(const json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::invalid_argument("quaternion JSON must be an array [w, x, y, z]");
  }
  return Quaternion{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                    j[3].get<double>()};
}

json series_to_value(const SliceSeries& f) {
  json coeffs = json::array();
  for (const Quaternion& c : f.coeffs()) {
    coeffs.push_back(quat_to_array(c));
  }
  return json{{"coeffs", std::move(coeffs)},
              {"eval_radius", f.eval_radius()},
              {"exact", f.exact()}};
}

SliceSeries series_from_value(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument(
        "series JSON must be an object with a \"coeffs\" array");
  }
  std::vector<Quaternion> coeffs;
  coeffs.reserve(j["coeffs"].size());
  for (const json& c : j["coeffs"]) {
    coeffs.push_back(quat_from_array(c));
  }
  const double eval_radius =
      j.value("eval_radius", SliceSeries::kDefaultEvalRadius);
  const bool exact = j.value("exact", true);
  return SliceSeries(std::move(coeffs), eval_radius, exact);
}

std::string outcome_name(VerificationReport::Outcome o) {
  switch (o) {
    case VerificationReport::Outcome::kPass:
      return "pass";
    case VerificationReport::Outcome::kFail:
      return "fail";
    case VerificationReport::Outcome::kHypothesisNotMet:
      return "hypothesis_not_met";
  }
  return "fail";
}

VerificationReport::Outcome outcome_from_name(const std::string& s) {
  if (s == "pass") {
    return VerificationReport::Outcome::kPass;
  }
  if (s == "fail") {
    return VerificationReport::Outcome::kFail;
  }
  if (s == "hypothesis_not_met") {
    return VerificationReport::Outcome::kHypothesisNotMet;
  }
  throw std::invalid_argument("unknown report outcome: " + s);
}

json report_to_value(const VerificationReport& rep) {
  json j{{"passed", rep.passed()},
         {"margin", rep.margin},
         {"samples_used", rep.samples_used},
         {"outcome", outcome_name(rep.outcome)},
         {"note", rep.note}};
  if (rep.witness) {
    j["witness"] =
        json::array({quat_to_array(rep.witness->first), quat_to_array(rep.witness->second)});
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

VerificationReport report_from_value(const json& j) {
  VerificationReport rep;
  rep.outcome = outcome_from_name(j.at("outcome").get<std::string>());
  rep.margin = j.at("margin").get<double>();
  rep.samples_used = j.at("samples_used").get<std::size_t>();
  rep.note = j.value("note", std::string{});
  if (j.contains("witness") && !j["witness"].is_null()) {
    const json& w = j["witness"];
    rep.witness = std::make_pair(quat_from_array(w.at(0)), quat_from_array(w.at(1)));
  }
  return rep;
}

// --- function-spec literals ---------------------------------------------

/// Splits on commas that are not nested inside parentheses.
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') {
      ++depth;
    } else if (ch == ')') {
      --depth;
    }
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed real literal: '" + s + "'");
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
  if (pos != s.size()) {
    throw std::invalid_argument("malformed real literal: '" + s + "'");
  }
  return v;
}

Quaternion parse_quat_literal(const std::string& raw) {
  std::string s = raw;
  // trim
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) {
    throw std::invalid_argument("empty quaternion literal");
  }
  s = s.substr(b, e - b + 1);
  if (s.front() == '(') {
    if (s.back() != ')') {
      throw std::invalid_argument("unbalanced quaternion tuple: '" + raw + "'");
    }
    const std::vector<std::string> parts = split_args(s.substr(1, s.size() - 2));
    if (parts.size() != 4) {
      throw std::invalid_argument("quaternion tuple needs four components: '" +
                                  raw + "'");
    }
    return Quaternion{parse_real(parts[0]), parse_real(parts[1]),
                      parse_real(parts[2]), parse_real(parts[3])};
  }
  return Quaternion(parse_real(s));
}

}  // namespace

std::string quaternion_to_json(const Quaternion& q) { return quat_to_array(q).dump(); }

Quaternion quaternion_from_json(const std::string& text) {
  try {
    return quat_from_array(json::parse(text));
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("bad quaternion JSON: ") + ex.what());
  }
}

std::string series_to_json(const SliceSeries& f) { return series_to_value(f).dump(); }

SliceSeries series_from_json(const std::string& text) {
  try {
    return series_from_value(json::parse(text));
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("bad series JSON: ") + ex.what());
  }
}

std::string report_to_json(const VerificationReport& rep, int indent) {
  return report_to_value(rep).dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
  try {
    return report_from_value(json::parse(text));
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("bad report JSON: ") + ex.what());
  }
}

FunctionSpec resolve_function_spec(const std::string& spec, int order) {
  if (spec.empty()) {
    throw std::invalid_argument("empty function spec");
  }
  if (spec.front() == '{') {
    return FunctionSpec{spec, series_from_json(spec)};
  }
  if (spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) {
      throw std::invalid_argument("cannot open function spec file: " +
                                  spec.substr(1));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return FunctionSpec{spec, series_from_json(buf.str())};
  }

  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? std::string{} : spec.substr(colon + 1);

  if (name == "identity") {
    if (!args.empty()) {
      throw std::invalid_argument("identity takes no parameters");
    }
    return FunctionSpec{spec, SliceSeries::identity()};
  }
  if (name == "const") {
    return FunctionSpec{spec, SliceSeries::constant(parse_quat_literal(args))};
  }
  if (name == "poly") {
    const std::vector<std::string> parts = split_args(args);
    std::vector<Quaternion> coeffs;
    coeffs.reserve(parts.size());
    for (const std::string& part : parts) {
      coeffs.push_back(parse_quat_literal(part));
    }
    return FunctionSpec{spec, SliceSeries(std::move(coeffs))};
  }
  if (name == "mobius") {
    const std::vector<std::string> parts = split_args(args);
    if (parts.size() != 2) {
      throw std::invalid_argument("mobius spec needs two parameters: mobius:u,v");
    }
    try {
      return FunctionSpec{
          spec, mobius(parse_quat_literal(parts[0]), parse_quat_literal(parts[1]),
                       order)};
    } catch (const std::domain_error& ex) {
      throw std::invalid_argument(std::string("mobius spec: ") + ex.what());
    }
  }
  if (name == "extremal") {
    double alpha = 0.0;
    try {
      alpha = parse_real(args);
    } catch (const std::exception&) {
      throw std::invalid_argument("extremal spec needs alpha: extremal:alpha");
    }
    try {
      return FunctionSpec{spec, extremal_f_alpha(alpha, std::max(order, 48))};
    } catch (const std::domain_error& ex) {
      throw std::invalid_argument(std::string("extremal spec: ") + ex.what());
    }
  }
  throw std::invalid_argument(
      "unknown function spec '" + spec +
      "' (expected identity, const:, poly:, mobius:, extremal:, @file or JSON)");
}

}  // namespace sliceball
