#include "tenfold/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tenfold/classify.hpp"
#include "tenfold/invariants.hpp"
#include "tenfold/model_io.hpp"
#include "tenfold/suites.hpp"

namespace tenfold {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Settings {
  double tol_alg = kTolAlg;
  double tol_gap = kTolGap;
  std::optional<int> grid;
  std::uint64_t seed = kDefaultSeed;
  std::string json_out;
};

// Carries an exit code together with the message for the report.
struct Failure {
  int code;
  std::string message;
};

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json symmetry_block(const SymmetryReport& r, double tol) {
  json j = {{"grid", r.grid},
            {"tolerance", tol},
            {"chiral_residual", optional_json(r.chiral_residual)},
            {"trs_residual", optional_json(r.trs_residual)},
            {"phs_residual", optional_json(r.phs_residual)},
            {"product_residual", optional_json(r.product_residual)},
            {"trs_parity", optional_json(r.trs_parity)},
            {"phs_parity", optional_json(r.phs_parity)},
            {"grading_reality", optional_json(r.grading_reality)},
            {"phs_grading_reality", optional_json(r.phs_grading_reality)},
            {"chiral_implied", r.implied_chiral.has_value()},
            {"problems", r.problems},
            {"consistent", r.consistent(tol)}};
  return j;
}

json class_block(const ClassDescriptor& c, int d) {
  return {{"k_functor", functor_name(c.k_functor)},
          {"degree", c.degree},
          {"cartan_label", c.cartan_label},
          {"real_subalgebra", c.subalgebra_note},
          {"dimension", d},
          {"strong_invariant_group", group_name(strong_invariant_group(c, d))}};
}

json invariant_block(const InvariantReport& r) {
  return {{"kind", r.kind},
          {"value", r.value},
          {"grid", r.grid},
          {"gap", r.gap},
          {"convergence", json::array({{{"grid", r.grid}, {"value", r.value}},
                                       {{"grid", r.check_grid}, {"value", r.check_value}}})},
          {"converged", r.converged()},
          {"rounding_residual", r.rounding_residual},
          {"retried_at_double_grid", r.retried}};
}

struct Classified {
  LoadedModel loaded;
  SymmetryReport symmetry;
  ClassDescriptor descriptor;
  GapResult gap;
};

// Loads, verifies symmetries, classifies and certifies the gap; fills the
// report along the way so partial results survive a failure.
Classified classify_file(const std::string& path, const Settings& s, json& report) {
  const std::string text = read_file(path);
  report["input"] = {{"path", path}, {"sha256", sha256_hex(text)}};
  Classified c{parse_model(text), {}, {}, {}};
  report["warnings"] = c.loaded.warnings;
  const BlochModel& m = c.loaded.model.model;
  report["model"] = {{"name", m.name()}, {"d", m.d()}, {"N", m.N()}, {"support_radius", m.support_radius()}};
  const int grid = s.grid.value_or(32);
  c.symmetry = verify_symmetries(m, c.loaded.model.symmetries, grid, s.tol_alg);
  report["symmetry"] = symmetry_block(c.symmetry, s.tol_alg);
  try {
    c.descriptor = classify(profile_from_report(c.symmetry, s.tol_alg));
  } catch (const InconsistentProfile& e) {
    throw Failure{kExitSymmetry, e.what()};
  }
  report["classification"] = class_block(c.descriptor, m.d());
  c.gap = gap(m, std::max(grid, 2));
  report["gap"] = {{"value", c.gap.gap}, {"k", c.gap.k}, {"tolerance", s.tol_gap}, {"grid", std::max(grid, 2)}};
  if (c.gap.gap <= s.tol_gap) throw Failure{kExitGap, "gap closes on the grid"};
  return c;
}

int cmd_classify(const std::string& path, const Settings& s, json& report) {
  classify_file(path, s, report);
  return kExitOk;
}

int cmd_invariant(const std::string& path, const std::string& kind, const Settings& s, json& report) {
  Classified c = classify_file(path, s, report);
  const BlochModel& m = c.loaded.model.model;
  const SymmetrySpec& sym = c.loaded.model.symmetries;
  const GroupKind group = strong_invariant_group(c.descriptor, m.d());
  auto inapplicable = [&](const std::string& why) {
    return Failure{kExitSymmetry, "invariant '" + kind + "' does not apply: " + why};
  };
  InvariantReport inv;
  if (kind == "winding") {
    const std::optional<Mat> chiral = sym.chiral ? sym.chiral : c.symmetry.implied_chiral;
    if (m.d() != 1) throw inapplicable("needs d = 1");
    if (!chiral) throw inapplicable("needs a chiral symmetry");
    if (group != GroupKind::Z) throw inapplicable("strong invariant group is " + group_name(group));
    inv = winding_number(m, *chiral, s.grid.value_or(kWindingGrid), std::nullopt, s.tol_gap);
  } else if (kind == "chern") {
    if (m.d() != 2) throw inapplicable("needs d = 2");
    if (group != GroupKind::Z) throw inapplicable("strong invariant group is " + group_name(group));
    inv = chern_number(m, s.grid.value_or(kChernGrid), s.tol_gap);
  } else if (kind == "z2") {
    if (m.d() != 2) throw inapplicable("needs d = 2");
    if (!sym.trs || c.symmetry.trs_parity != -1) throw inapplicable("needs an odd time reversal symmetry");
    if (group != GroupKind::Z2) throw inapplicable("strong invariant group is " + group_name(group));
    inv = z2_invariant(m, *sym.trs, s.grid.value_or(kZ2Grid), s.tol_gap);
  } else {
    throw Failure{kExitSchema, "unknown invariant kind: " + kind};
  }
  report["invariant"] = invariant_block(inv);
  return inv.converged() ? kExitOk : kExitVerify;
}

int cmd_verify(const std::string& suite, const Settings& s, json& report) {
  report["input"] = {{"suite", suite}, {"sha256", sha256_hex("verify " + suite + " " + std::to_string(s.seed))}};
  const SuiteResult r = run_suite(suite, s.seed);
  report["verification"] = r.report;
  return r.ok() ? kExitOk : kExitVerify;
}

int cmd_flatten(const std::string& path, const Settings& s, json& report) {
  const std::string text = read_file(path);
  report["input"] = {{"path", path}, {"sha256", sha256_hex(text)}};
  const LoadedModel loaded = parse_model(text);
  report["warnings"] = loaded.warnings;
  const BlochModel& m = loaded.model.model;
  const int grid = s.grid.value_or(8);
  json samples = json::array();
  for (const auto& k : m.d() == 0 ? std::vector<Momentum>{Momentum{}} : grid_points(m.d(), grid)) {
    json j = matrix_to_json(flatten(evaluate(m, k), s.tol_gap, "k"));
    j["k"] = k;
    samples.push_back(std::move(j));
  }
  report["flatten"] = {{"grid", grid}, {"samples", samples}};
  return kExitOk;
}

int cmd_model(const std::string& name, const std::vector<double>& p, json& report) {
  auto need = [&](std::size_t n) {
    if (p.size() != n) throw Failure{kExitSchema, name + " takes " + std::to_string(n) + " parameters"};
  };
  ModelWithSymmetries m = [&] {
    if (name == "ssh") {
      need(2);
      return build_ssh(p[0], p[1]);
    }
    if (name == "qwz") {
      need(1);
      return build_qwz(p[0]);
    }
    need(4);
    if (name == "haldane") return build_haldane(p[0], p[1], p[2], p[3]);
    return build_kane_mele(p[0], p[1], p[2], p[3]);
  }();
  report = model_to_json(m);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify gapped Bloch Hamiltonians and verify the underlying algebra", "tenfold"};
  app.require_subcommand(1);
  Settings s;
  int grid = 0;
  app.add_option("--tol-alg", s.tol_alg, "algebraic tolerance")->capture_default_str();
  app.add_option("--tol-gap", s.tol_gap, "spectral gap tolerance")->capture_default_str();
  app.add_option("--grid", grid, "grid size (command-specific default)");
  app.add_option("--seed", s.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--json-out", s.json_out, "also write the report to this path");
  app.set_version_flag("--version", kVersion);

  std::string model_path, kind, suite = "all", model_name;
  std::vector<double> params;
  auto* classify_cmd = app.add_subcommand("classify", "verify symmetries and classify a model file");
  classify_cmd->add_option("model", model_path, "model JSON file")->required();
  auto* invariant_cmd = app.add_subcommand("invariant", "compute a strong invariant");
  invariant_cmd->add_option("model", model_path, "model JSON file")->required();
  invariant_cmd->add_option("--kind", kind, "winding | chern | z2")->required()->check(
      CLI::IsMember({"winding", "chern", "z2"}));
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite, "clifford | signs | morita | vandaele | all")
      ->check(CLI::IsMember({"clifford", "signs", "morita", "vandaele", "all"}))
      ->capture_default_str();
  auto* flatten_cmd = app.add_subcommand("flatten", "dump sgn h(k) on a grid");
  flatten_cmd->add_option("model", model_path, "model JSON file")->required();
  auto* model_cmd = app.add_subcommand("model", "write a builder model as JSON");
  model_cmd->add_option("name", model_name, "ssh | qwz | haldane | kane_mele")
      ->required()
      ->check(CLI::IsMember({"ssh", "qwz", "haldane", "kane_mele"}));
  model_cmd->add_option("params", params, "builder parameters")->expected(0, -1);
  for (auto* sub : {classify_cmd, invariant_cmd, verify_cmd, flatten_cmd, model_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSchema;
  }
  if (grid > 0) s.grid = grid;

  json report;
  int code = kExitOk;
  const bool model_dump = model_cmd->parsed();
  try {
    if (classify_cmd->parsed()) code = cmd_classify(model_path, s, report);
    else if (invariant_cmd->parsed()) code = cmd_invariant(model_path, kind, s, report);
    else if (verify_cmd->parsed()) code = cmd_verify(suite, s, report);
    else if (flatten_cmd->parsed()) code = cmd_flatten(model_path, s, report);
    else code = cmd_model(model_name, params, report);
  } catch (const Failure& f) {
    code = f.code;
    report["error"] = f.message;
  } catch (const SchemaError& e) {
    code = kExitSchema;
    report["error"] = e.what();
    report["error_field"] = e.field;
    if (e.line > 0) report["error_line"] = e.line;
  } catch (const GapError& e) {
    code = kExitGap;
    report["error"] = e.what();
  } catch (const InvariantError& e) {
    code = kExitVerify;
    report["error"] = e.what();
  } catch (const std::exception& e) {
    code = kExitVerify;
    report["error"] = e.what();
  }
  if (!model_dump || code != kExitOk) {
    report["tool"] = {{"name", "tenfold"}, {"version", kVersion}};
    report["settings"] = {{"tol_alg", s.tol_alg}, {"tol_gap", s.tol_gap}, {"seed", s.seed},
                          {"grid", s.grid ? json(*s.grid) : json("default")}};
    report["exit_code"] = code;
  }
  if (report.contains("error")) err << "error: " << report["error"].get<std::string>() << "\n";
  const std::string text = report.dump(2) + "\n";
  out << text;
  if (!s.json_out.empty()) {
    std::ofstream f(s.json_out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << s.json_out << "\n";
      return kExitSchema;
    }
    f << text;
  }
  return code;
}

}  // namespace tenfold
