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

// Batch front end: every subcommand reads flags (and possibly a coefficient
// file), runs one library call, and prints a JSON (or CSV/plain) report on
// stdout. Exit codes: 0 success, 2 flag/input validation error, 1 computation
// error. Diagnostics go to stderr.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hohlov/bounds.hpp"
#include "hohlov/classes.hpp"
#include "hohlov/extremal.hpp"
#include "hohlov/hypergeom.hpp"
#include "hohlov/io.hpp"
#include "hohlov/series.hpp"

namespace {

using hohlov::cplx;
using hohlov::json;

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("complex flag must be RE,IM (e.g. 1,0): got '" + text + "'");
  }
  std::size_t used_re = 0;
  std::size_t used_im = 0;
  double re = 0.0;
  double im = 0.0;
  try {
    re = std::stod(text.substr(0, comma), &used_re);
    im = std::stod(text.substr(comma + 1), &used_im);
  } catch (const std::exception&) {
    throw std::invalid_argument("complex flag must be RE,IM with numeric parts: got '" + text +
                                "'");
  }
  if (used_re != comma || used_im != text.size() - comma - 1) {
    throw std::invalid_argument("complex flag has trailing characters: '" + text + "'");
  }
  return {re, im};
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list flag: '" + text + "'");
    std::size_t used = 0;
    values.push_back(std::stod(item, &used));
    if (used != item.size()) {
      throw std::invalid_argument("bad numeric entry '" + item + "' in list flag");
    }
  }
  if (values.empty()) throw std::invalid_argument("list flag must not be empty");
  return values;
}

void emit_plain(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      emit_plain(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array()) {
    out << prefix << " =";
    for (const auto& value : j) out << " " << value.dump();
    out << "\n";
  } else {
    out << prefix << " = " << j.dump() << "\n";
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "plain") {
    emit_plain(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

// Flags shared by the class-parameterized subcommands.
struct ClassFlags {
  std::string kind = "s";
  std::string gamma = "1,0";
  double lambda = 0.0;
  double beta = 0.0;
  double m = 2.0;
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--class", kind, "class family: s (starlike form) or k (convex form)")
        ->check(CLI::IsMember({"s", "k"}))
        ->required();
    cmd->add_option("--gamma", gamma, "complex order, RE,IM (nonzero)")->required();
    cmd->add_option("--lambda", lambda, "interpolation weight in [0,1]")->required();
    cmd->add_option("--beta", beta, "order bound in [0,1)")->required();
    cmd->add_option("--m", m, "P_m(beta) index, >= 2")->required();
    cmd->add_option("--a", a, "operator parameter a > 0")->required();
    cmd->add_option("--b", b, "operator parameter b > 0")->required();
    cmd->add_option("--c", c, "operator parameter c > 0")->required();
  }

  hohlov::TransformKind transform_kind() const {
    return kind == "s" ? hohlov::TransformKind::S : hohlov::TransformKind::K;
  }
  hohlov::ClassParams class_params() const {
    return hohlov::ClassParams(parse_complex(gamma), lambda, beta, m);
  }
  hohlov::HohlovParams operator_params() const { return hohlov::HohlovParams(a, b, c); }
};

hohlov::NormalizedFunction load_normalized(const std::string& path) {
  return hohlov::NormalizedFunction(hohlov::load_series(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hohlov: coefficient machinery for bi-univalent function classes of complex order\n"
      "defined through the I_{a,b,c} convolution operator. P_m(beta) membership uses the\n"
      "Herglotz kernel (1 + z e^{it})/(1 - z e^{it})."};
  app.require_subcommand(1);

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "operator multipliers phi_1..phi_n");
  double phi_a = 1, phi_b = 1, phi_c = 1;
  int phi_count = 0;
  std::string phi_format = "json";
  phi_cmd->add_option("--a", phi_a)->required();
  phi_cmd->add_option("--b", phi_b)->required();
  phi_cmd->add_option("--c", phi_c)->required();
  phi_cmd->add_option("--n", phi_count, "how many multipliers")
      ->required()
      ->check(CLI::PositiveNumber);
  phi_cmd->add_option("--format", phi_format)->check(CLI::IsMember({"json", "plain"}));

  // f21
  auto* f21_cmd = app.add_subcommand("f21", "Taylor coefficients of 2F1(a,b,c;z)");
  double f21_a = 1, f21_b = 1, f21_c = 1;
  int f21_order = hohlov::kDefaultOrder;
  f21_cmd->add_option("--a", f21_a)->required();
  f21_cmd->add_option("--b", f21_b)->required();
  f21_cmd->add_option("--c", f21_c)->required();
  f21_cmd->add_option("--order", f21_order)->check(CLI::NonNegativeNumber);

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "apply a convolution/integral operator to f");
  std::string apply_op;
  std::string apply_input;
  double apply_a = 0, apply_b = 0, apply_c = 0, apply_delta = 0;
  int apply_order = hohlov::kDefaultOrder;
  apply_cmd->add_option("--op", apply_op, "hohlov|bernardi|alexander|libera|carlson")
      ->check(CLI::IsMember({"hohlov", "bernardi", "alexander", "libera", "carlson"}))
      ->required();
  apply_cmd->add_option("--input", apply_input, "coefficient file of f")->required();
  auto* apply_a_opt = apply_cmd->add_option("--a", apply_a);
  auto* apply_b_opt = apply_cmd->add_option("--b", apply_b);
  auto* apply_c_opt = apply_cmd->add_option("--c", apply_c);
  auto* apply_delta_opt = apply_cmd->add_option("--delta", apply_delta, "Bernardi delta > -1");
  apply_cmd->add_option("--order", apply_order)->check(CLI::PositiveNumber);

  // revert
  auto* revert_cmd = app.add_subcommand("revert", "compositional inverse series of f");
  std::string revert_input;
  int revert_order = -1;
  revert_cmd->add_option("--input", revert_input)->required();
  revert_cmd->add_option("--order", revert_order, "working order (default: the input's order)")
      ->check(CLI::PositiveNumber);

  // transform
  auto* transform_cmd =
      app.add_subcommand("transform", "class-defining transform of f (or of f^{-1})");
  ClassFlags transform_flags;
  std::string transform_input;
  bool transform_inverse = false;
  transform_flags.attach(transform_cmd);
  transform_cmd->add_option("--input", transform_input)->required();
  transform_cmd->add_flag("--inverse", transform_inverse, "transform g = f^{-1} instead of f");

  // membership
  auto* membership_cmd = app.add_subcommand(
      "membership",
      "boundary-integral P_m(beta) check of both transforms (necessary condition; "
      "kernel convention (1 + z e^{it})/(1 - z e^{it}))");
  ClassFlags membership_flags;
  std::string membership_input;
  std::string membership_radii = "0.5,0.9,0.99";
  int membership_grid = hohlov::kDefaultGrid;
  membership_flags.attach(membership_cmd);
  membership_cmd->add_option("--input", membership_input)->required();
  membership_cmd->add_option("--radii", membership_radii, "comma-separated radii in (0,1)");
  membership_cmd->add_option("--grid", membership_grid)->check(CLI::Range(64, 1 << 24));

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "published |a2|, |a3| bound branches");
  ClassFlags bound_flags;
  std::string bound_corollary;
  std::string bound_format = "json";
  bound_flags.attach(bound_cmd);
  bound_cmd->add_option("--corollary", bound_corollary,
                        "evaluate a lambda in {0,1} special case: s1|h0|k1|q0")
      ->check(CLI::IsMember({"s1", "h0", "k1", "q0"}));
  bound_cmd->add_option("--format", bound_format)->check(CLI::IsMember({"json", "plain"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "brute-force feasibility search vs the bounds");
  ClassFlags verify_flags;
  long verify_samples = 100000;
  std::uint64_t verify_seed = 0;
  verify_flags.attach(verify_cmd);
  verify_cmd->add_option("--samples", verify_samples, ">= 10^4")->required();
  verify_cmd->add_option("--seed", verify_seed)->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "bound curves along one varying parameter");
  ClassFlags sweep_flags;
  std::string sweep_vary;
  double sweep_from = 0, sweep_to = 1;
  int sweep_steps = 11;
  std::string sweep_format = "csv";
  sweep_flags.attach(sweep_cmd);
  sweep_cmd->add_option("--vary", sweep_vary, "lambda|beta|m")
      ->check(CLI::IsMember({"lambda", "beta", "m"}))
      ->required();
  sweep_cmd->add_option("--from", sweep_from)->required();
  sweep_cmd->add_option("--to", sweep_to)->required();
  sweep_cmd->add_option("--steps", sweep_steps)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*phi_cmd) {
      const hohlov::HohlovParams params(phi_a, phi_b, phi_c);
      const hohlov::PhiSequence seq(params, phi_count);
      json j;
      j["phi"] = seq.values();
      emit(j, phi_format);
    } else if (*f21_cmd) {
      const hohlov::HohlovParams params(f21_a, f21_b, f21_c);
      emit(hohlov::series_to_json(hohlov::gauss_2f1_series(params, f21_order)), "json");
    } else if (*apply_cmd) {
      const hohlov::NormalizedFunction f = load_normalized(apply_input);
      const bool have_a = apply_a_opt->count() > 0;
      const bool have_b = apply_b_opt->count() > 0;
      const bool have_c = apply_c_opt->count() > 0;
      const bool have_delta = apply_delta_opt->count() > 0;
      hohlov::NormalizedFunction image = f;
      if (apply_op == "hohlov") {
        if (!(have_a && have_b && have_c) || have_delta) {
          throw std::invalid_argument("apply --op hohlov needs --a, --b, --c and no --delta");
        }
        image = hohlov::hohlov_apply(hohlov::HohlovParams(apply_a, apply_b, apply_c), f,
                                     apply_order);
      } else if (apply_op == "bernardi") {
        if (!have_delta || have_a || have_b || have_c) {
          throw std::invalid_argument("apply --op bernardi needs --delta and no --a/--b/--c");
        }
        image = hohlov::bernardi_apply(f, apply_delta, apply_order);
      } else if (apply_op == "alexander" || apply_op == "libera") {
        if (have_a || have_b || have_c || have_delta) {
          throw std::invalid_argument("apply --op " + apply_op + " takes no parameters");
        }
        image = hohlov::hohlov_apply(
            apply_op == "alexander" ? hohlov::alexander_params() : hohlov::libera_params(), f,
            apply_order);
      } else {  // carlson
        if (!(have_a && have_c) || have_b || have_delta) {
          throw std::invalid_argument("apply --op carlson needs exactly --a and --c");
        }
        image = hohlov::hohlov_apply(hohlov::carlson_shaffer_params(apply_a, apply_c), f,
                                     apply_order);
      }
      emit(hohlov::series_to_json(image.series()), "json");
    } else if (*revert_cmd) {
      hohlov::NormalizedFunction f = load_normalized(revert_input);
      if (revert_order > 0) {
        f = hohlov::NormalizedFunction(f.series().resized(revert_order));
      }
      emit(hohlov::series_to_json(hohlov::revert(f).series()), "json");
    } else if (*transform_cmd) {
      const hohlov::NormalizedFunction f = load_normalized(transform_input);
      const hohlov::ClassParams cp = transform_flags.class_params();
      const hohlov::HohlovParams hp = transform_flags.operator_params();
      const hohlov::TransformKind kind = transform_flags.transform_kind();
      const hohlov::TruncatedSeries result =
          transform_inverse          ? hohlov::inverse_transform(f, cp, hp, f.order(), kind)
          : kind == hohlov::TransformKind::S ? hohlov::s_transform(f, cp, hp, f.order())
                                             : hohlov::k_transform(f, cp, hp, f.order());
      emit(hohlov::series_to_json(result), "json");
    } else if (*membership_cmd) {
      const hohlov::NormalizedFunction f = load_normalized(membership_input);
      const std::vector<double> radii = parse_double_list(membership_radii);
      for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) {
          throw std::invalid_argument("--radii entries must lie in (0,1)");
        }
      }
      const hohlov::MembershipReport report =
          hohlov::membership_check(f, membership_flags.class_params(),
                                   membership_flags.operator_params(),
                                   membership_flags.transform_kind(), radii, membership_grid);
      emit(hohlov::membership_report_to_json(report), "json");
    } else if (*bound_cmd) {
      const hohlov::ClassParams cp = bound_flags.class_params();
      const hohlov::HohlovParams hp = bound_flags.operator_params();
      hohlov::BoundReport report = hohlov::coefficient_bounds(bound_flags.transform_kind(), cp, hp);
      if (!bound_corollary.empty()) {
        const double phi2 = hohlov::phi_n(hp, 2);
        const double phi3 = hohlov::phi_n(hp, 3);
        hohlov::SpecialCase which = hohlov::SpecialCase::SLambda1;
        if (bound_corollary == "h0") which = hohlov::SpecialCase::HLambda0;
        if (bound_corollary == "k1") which = hohlov::SpecialCase::KLambda1;
        if (bound_corollary == "q0") which = hohlov::SpecialCase::QLambda0;
        report = hohlov::special_case_bounds(which, cp, phi2, phi3);
      }
      emit(hohlov::bound_report_to_json(report), bound_format);
    } else if (*verify_cmd) {
      const hohlov::SearchReport report = hohlov::extremal_search(
          verify_flags.transform_kind(), verify_flags.class_params(),
          verify_flags.operator_params(), verify_samples, verify_seed);
      emit(hohlov::search_report_to_json(report), "json");
    } else if (*sweep_cmd) {
      const hohlov::HohlovParams hp = sweep_flags.operator_params();
      const hohlov::TransformKind kind = sweep_flags.transform_kind();
      std::vector<double> values;
      std::vector<hohlov::BoundReport> reports;
      for (int i = 0; i < sweep_steps; ++i) {
        const double t =
            sweep_steps == 1 ? 0.0
                             : static_cast<double>(i) / static_cast<double>(sweep_steps - 1);
        const double v = sweep_from + (sweep_to - sweep_from) * t;
        double lambda = sweep_flags.lambda, beta = sweep_flags.beta, m = sweep_flags.m;
        if (sweep_vary == "lambda") lambda = v;
        if (sweep_vary == "beta") beta = v;
        if (sweep_vary == "m") m = v;
        const hohlov::ClassParams cp(parse_complex(sweep_flags.gamma), lambda, beta, m);
        values.push_back(v);
        reports.push_back(hohlov::coefficient_bounds(kind, cp, hp));
      }
      if (sweep_format == "csv") {
        std::cout << sweep_vary
                  << ",a2_branch1,a2_branch2,a2_bound,a2_argmin,"
                     "a3_branch1,a3_branch2,a3_branch3,a3_bound,a3_argmin\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
          const hohlov::BoundReport& r = reports[i];
          std::cout << hohlov::format_double(values[i]);
          for (double b : r.a2_branches) std::cout << "," << hohlov::format_double(b);
          std::cout << "," << hohlov::format_double(r.a2_bound) << "," << r.a2_argmin;
          for (double b : r.a3_branches) std::cout << "," << hohlov::format_double(b);
          std::cout << "," << hohlov::format_double(r.a3_bound) << "," << r.a3_argmin << "\n";
        }
      } else {
        json rows = json::array();
        for (std::size_t i = 0; i < reports.size(); ++i) {
          json row;
          row[sweep_vary] = values[i];
          row["report"] = hohlov::bound_report_to_json(reports[i]);
          rows.push_back(std::move(row));
        }
        emit(rows, "json");
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
