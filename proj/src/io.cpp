// Copyright (c) 2026 the hohlov authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hohlov/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace hohlov {

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json branch_array(const std::vector<double>& branches) {
  json arr = json::array();
  for (double b : branches) {
    if (std::isfinite(b)) {
      arr.push_back(b);
    } else {
      arr.push_back("inf");
    }
  }
  return arr;
}

json params_to_json(const BoundReport& report) {
  json p;
  p["gamma"] = complex_to_json(report.params.gamma);
  p["lambda"] = report.params.lambda;
  p["beta"] = report.params.beta;
  p["m"] = report.params.m;
  if (report.operator_params) {
    p["a"] = report.operator_params->a;
    p["b"] = report.operator_params->b;
    p["c"] = report.operator_params->c;
  }
  p["phi2"] = report.phi2;
  p["phi3"] = report.phi3;
  return p;
}

}  // namespace

json series_to_json(const TruncatedSeries& s) {
  json j;
  j["order"] = s.order();
  json coeffs = json::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(complex_to_json(s[k]));
  j["coeffs"] = std::move(coeffs);
  return j;
}

TruncatedSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw std::invalid_argument("coefficient file: need an object with \"order\" and \"coeffs\"");
  }
  if (!j["order"].is_number_integer() || j["order"].get<long>() < 0) {
    throw std::invalid_argument("coefficient file: \"order\" must be a nonnegative integer");
  }
  const int order = j["order"].get<int>();
  const json& coeffs = j["coeffs"];
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1) {
    throw std::invalid_argument("coefficient file: \"coeffs\" must hold exactly order+1 pairs");
  }
  std::vector<cplx> values;
  values.reserve(coeffs.size());
  for (const json& entry : coeffs) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw std::invalid_argument("coefficient file: each coefficient must be a [re, im] pair");
    }
    const cplx value(entry[0].get<double>(), entry[1].get<double>());
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw std::invalid_argument("coefficient file: coefficients must be finite");
    }
    values.push_back(value);
  }
  return TruncatedSeries(std::move(values));
}

TruncatedSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coefficient file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("coefficient file " + path + ": " + e.what());
  }
  return series_from_json(j);
}

json measure_to_json(const PmMeasure& measure) {
  json atoms = json::array();
  for (const PmAtom& a : measure.atoms) {
    atoms.push_back(json{{"t", a.angle}, {"w", a.weight}});
  }
  json j;
  j["atoms"] = std::move(atoms);
  return j;
}

PmMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
    throw std::invalid_argument("measure file: need an object with an \"atoms\" array");
  }
  PmMeasure measure;
  for (const json& entry : j["atoms"]) {
    if (!entry.is_object() || !entry.contains("t") || !entry.contains("w") ||
        !entry["t"].is_number() || !entry["w"].is_number()) {
      throw std::invalid_argument("measure file: each atom must be {\"t\": ..., \"w\": ...}");
    }
    const double t = entry["t"].get<double>();
    const double w = entry["w"].get<double>();
    if (!std::isfinite(t) || !std::isfinite(w)) {
      throw std::invalid_argument("measure file: atom entries must be finite");
    }
    measure.atoms.push_back({t, w});
  }
  return measure;
}

PmMeasure load_measure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open measure file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("measure file " + path + ": " + e.what());
  }
  return measure_from_json(j);
}

json bound_report_to_json(const BoundReport& report) {
  json j;
  j["class"] = report.kind == TransformKind::S ? "s" : "k";
  j["a2"] = json{{"branches", branch_array(report.a2_branches)},
                 {"bound", report.a2_bound},
                 {"argmin", report.a2_argmin}};
  j["a3"] = json{{"branches", branch_array(report.a3_branches)},
                 {"bound", report.a3_bound},
                 {"argmin", report.a3_argmin}};
  j["params"] = params_to_json(report);
  return j;
}

json search_report_to_json(const SearchReport& report) {
  json j;
  j["class"] = report.kind == TransformKind::S ? "s" : "k";
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["feasible"] = report.feasible_count;
  j["max_a2"] = json{{"value", report.max_a2},
                     {"witness", json{{"a2", complex_to_json(report.a2_witness.a2)},
                                      {"a3", complex_to_json(report.a2_witness.a3)}}}};
  j["max_a3"] = json{{"value", report.max_a3},
                     {"witness", json{{"a2", complex_to_json(report.a3_witness.a2)},
                                      {"a3", complex_to_json(report.a3_witness.a3)}}}};
  j["bounds"] = json{{"a2", report.a2_bound}, {"a3", report.a3_bound}};
  j["tightness"] = json{{"a2", report.a2_tightness}, {"a3", report.a3_tightness}};
  j["envelope"] = json{{"a2", report.envelope_a2},
                       {"a3", report.envelope_a3},
                       {"covers_feasible_a2", report.envelope_covers_a2}};
  return j;
}

json membership_report_to_json(const MembershipReport& report) {
  json j;
  j["threshold"] = report.threshold;
  j["radii"] = report.radii;
  j["direct"] = report.direct_integrals;
  j["inverse"] = report.inverse_integrals;
  json per_radius = json::array();
  for (bool ok : report.radius_pass) per_radius.push_back(ok);
  j["pass_per_radius"] = std::move(per_radius);
  j["pass"] = report.pass;
  return j;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

}  // namespace hohlov
