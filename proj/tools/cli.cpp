#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spin7/json_io.hpp"
#include "spin7/suite.hpp"

namespace spin7::cli {

namespace {

struct RunConfig {
  double tolerance = 1e-9;
  std::uint64_t seed = SuiteConfig{}.seed;
  bool json = false;
  std::string input;
  std::string name;
};

Json read_input(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// Human output is rendered from the same JSON document, so both carry identical numbers.
bool inline_value(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
}

void render(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (inline_value(v)) {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      } else {
        out << pad << k << ":\n";
        render(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (inline_value(v)) {
        out << pad << "- " << v.dump() << '\n';
      } else {
        out << pad << "-\n";
        render(out, v, indent + 2);
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

void emit(std::ostream& out, const RunConfig& cfg, const Json& doc) {
  if (cfg.json) out << doc.dump(2) << '\n';
  else render(out, doc, 0);
}

int cmd_classify_qa(const RunConfig& cfg, std::ostream& out) {
  const Mat7 e = qa_matrix_from_json(read_input(cfg.input));
  const QAReport r = classify_qa(build_cl8_rep(), e, cfg.tolerance);
  emit(out, cfg, to_json(r));
  return kOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const KForm<double> b = form_from_json(read_input(cfg.input));
  const Spin7Form<double> om = omega_from_spinor(build_cl8_rep(), base_spinor<double>());
  Json doc;
  doc["input"] = to_json(b);
  if (b.degree() == 2) {
    const Split2<double> p = project2(om, b);
    doc["b7"] = to_json(p.b7);
    doc["b21"] = to_json(p.b21);
    doc["residuals"] = {
        {"eigen_3", max_abs(lambda2_operator(om.omega, p.b7) - 3.0 * p.b7)},
        {"eigen_minus_1", max_abs(lambda2_operator(om.omega, p.b21) + p.b21)},
        {"resum", max_abs(p.b7 + p.b21 - b)},
    };
  } else if (b.degree() == 3) {
    const Split3<double> p = project3(om, b);
    const Vec8<double> x = lambda3_8_vector(om, b);
    doc["b8"] = to_json(p.b8);
    doc["b48"] = to_json(p.b48);
    doc["b8_vector"] = to_json(x);
    doc["residuals"] = {
        {"b8_membership", max_abs(p.b8 - contract(x, om.omega))},
        {"b48_wedge_omega", max_abs(wedge(p.b48, om.omega))},
        {"resum", max_abs(p.b8 + p.b48 - b)},
    };
  } else {
    throw InputError("decompose expects a form of degree 2 or 3, got " + std::to_string(b.degree()));
  }
  emit(out, cfg, doc);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  SuiteConfig sc;
  sc.tolerance = cfg.tolerance;
  sc.seed = cfg.seed;
  const auto results = run_acceptance(sc);
  Json doc;
  doc["tolerance"] = cfg.tolerance;
  doc["seed"] = cfg.seed;
  Json suites = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    suites.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"exact", r.exact},
                      {"residual", r.residual},
                      {"threshold", r.threshold},
                      {"detail", r.detail}});
  }
  doc["suites"] = suites;
  doc["passed"] = all;
  if (cfg.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << "seed " << cfg.seed << ", tolerance " << Json(cfg.tolerance).dump() << '\n';
    for (const auto& s : suites)
      out << (s["passed"].get<bool>() ? "PASS" : "FAIL") << " [" << s["id"].get<int>() << "] "
          << s["name"].get<std::string>() << ": " << s["detail"].get<std::string>() << " (residual "
          << s["residual"].dump() << ", threshold " << s["threshold"].dump() << ")\n";
    if (!all) {
      out << "failed:";
      for (const auto& s : suites)
        if (!s["passed"].get<bool>()) out << ' ' << s["id"].get<int>();
      out << '\n';
    }
  }
  return all ? kOk : kVerificationFailure;
}

Mat7 displayed_nilpotent_exp(double t) {
  Mat7 m = Mat7::Identity();
  m(0, 1) = -t;
  m(0, 2) = t * t;
  m(1, 2) = -2 * t;
  m(3, 4) = -t;
  m(3, 5) = t * t / 2;
  m(3, 6) = -t * t * t / 6;
  m(4, 5) = -t;
  m(4, 6) = t * t / 2;
  m(5, 6) = -t;
  return m;
}

int cmd_examples(const RunConfig& cfg, std::ostream& out) {
  Mat7 e;
  double t = 0.0;
  if (cfg.name == "nilmanifold") {
    e = nilpotent_example();
    t = 6.0;
  } else if (cfg.name == "mapping-torus") {
    e = rotation_example();
    t = M_PI;
  } else {
    throw InputError("unknown example '" + cfg.name + "' (expected nilmanifold or mapping-torus)");
  }
  const QAReport r = classify_qa(build_cl8_rep(), e, cfg.tolerance);
  const QAAlgebra qa = make_qa(e);
  const Mat8 x = exp_tE(e, t);
  Json doc;
  doc["name"] = cfg.name;
  doc["structure_equations"] = structure_equations(qa.algebra());
  doc["t"] = t;
  doc["exp_tE"] = to_json(x);
  bool ok = true;
  if (cfg.name == "nilmanifold") {
    const double d = (x.block<7, 7>(1, 1) - displayed_nilpotent_exp(t)).cwiseAbs().maxCoeff();
    doc["exp_tE_vs_displayed"] = d;
    ok = d <= cfg.tolerance && r.admits_balanced && r.admits_mixed == Verdict::Yes;
  } else {
    const double d = (x - x.array().round().matrix()).cwiseAbs().maxCoeff();
    doc["integrality_defect"] = d;
    ok = d <= cfg.tolerance && r.admits_parallel && r.admits_mixed == Verdict::Yes && r.flat;
  }
  doc["flat"] = r.flat;
  doc["max_curvature"] = r.max_curvature;
  doc["classification"] = to_json(r);
  doc["checks_passed"] = ok;
  emit(out, cfg, doc);
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin(7) structures on 8-dimensional metric Lie algebras", "spin7"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--tolerance", cfg.tolerance, "classification / verification tolerance (> 0)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "emit JSON instead of human-readable text");
  };
  CLI::App* classify = app.add_subcommand("classify-qa", "classify a quasi-abelian algebra {\"E\": 7x7}");
  add_common(classify);
  classify->add_option("--input", cfg.input, "JSON file with the matrix E")->required();
  CLI::App* decompose = app.add_subcommand("decompose", "split a 2- or 3-form under Spin(7)");
  add_common(decompose);
  decompose->add_option("--input", cfg.input, "JSON file with a KForm")->required();
  CLI::App* verify = app.add_subcommand("verify", "run the acceptance suites");
  add_common(verify);
  verify->add_option("--seed", cfg.seed, "seed for the randomized suites");
  CLI::App* examples = app.add_subcommand("examples", "reproduce the worked examples");
  add_common(examples);
  examples->add_option("--name", cfg.name, "nilmanifold | mapping-torus")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (classify->parsed()) return cmd_classify_qa(cfg, out);
    if (decompose->parsed()) return cmd_decompose(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (examples->parsed()) return cmd_examples(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InconsistencyError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kInputError;
}

}  // namespace spin7::cli
