#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tenfold/cli.hpp"
#include "tenfold/model_io.hpp"

using namespace tenfold;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tenfold");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(TENFOLD_TEST_DATA) + "/" + f; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("tenfold_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify Kane-Mele") {
    const auto r = run({"classify", data("kane_mele.json")});
    CHECK(r.code == kExitOk);
    const json j = r.report();
    CHECK(j["classification"]["k_functor"] == "real");
    CHECK(j["classification"]["degree"] == 4);
    CHECK(j["classification"]["strong_invariant_group"] == "Z2");
    CHECK(j["classification"]["cartan_label"] == "AII");
    CHECK(j["symmetry"]["trs_parity"] == -1);
    CHECK(j["exit_code"] == 0);
    CHECK(j["input"]["sha256"].get<std::string>().size() == 64);
  }

  TEST_CASE("classify SSH keeps the loader warning") {
    const auto r = run({"classify", data("ssh.json")});
    CHECK(r.code == kExitOk);
    const json j = r.report();
    CHECK(j["classification"]["k_functor"] == "complex");
    CHECK(j["classification"]["degree"] == 1);
    CHECK(j["classification"]["strong_invariant_group"] == "Z");
    CHECK(j["warnings"].size() == 1);
  }

  TEST_CASE("bogus time reversal is a symmetry failure") {
    const auto r = run({"classify", data("haldane_bogus_trs.json")});
    CHECK(r.code == kExitSymmetry);
    CHECK(r.report()["symmetry"]["trs_residual"].get<double>() > 0.5);
    CHECK(r.err.find("error:") != std::string::npos);
  }

  TEST_CASE("gapless models exit with the gap code") {
    const std::string path = temp_file("qwz0.json", model_to_json(build_qwz(0)).dump());
    const auto r = run({"classify", path, "--grid", "16"});
    CHECK(r.code == kExitGap);
    CHECK(r.report()["gap"]["value"].get<double>() < 1e-12);
  }

  TEST_CASE("schema and usage errors") {
    CHECK(run({"classify", data("does_not_exist.json")}).code == kExitSchema);
    const std::string bad = temp_file("bad.json", "{\n  \"name\": \"x\",\n  \"d\": 1\n  \"N\": 2\n}");
    const auto r = run({"classify", bad});
    CHECK(r.code == kExitSchema);
    CHECK(r.report()["error_line"] == 4);
    const std::string missing = temp_file("missing.json", R"({"name": "x", "d": 1, "N": 1})");
    CHECK(run({"classify", missing}).report()["error_field"] == "/hoppings");
    CHECK(run({"invariant", data("ssh.json"), "--kind", "berry"}).code == kExitSchema);
    CHECK(run({"bogus"}).code == kExitSchema);
    CHECK(run({"verify", "--suite", "nope"}).code == kExitSchema);
  }

  TEST_CASE("invariant examples") {
    const auto w = run({"invariant", data("ssh.json"), "--kind", "winding"});
    CHECK(w.code == kExitOk);
    CHECK(std::abs(w.report()["invariant"]["value"].get<int>()) == 1);
    CHECK(w.report()["invariant"]["converged"] == true);
    const auto c = run({"invariant", data("qwz_m-1.json"), "--kind", "chern"});
    CHECK(c.code == kExitOk);
    CHECK(c.report()["invariant"]["value"] == 1);
    CHECK(c.report()["invariant"]["convergence"][1]["grid"] == 48);
    const auto z = run({"invariant", data("kane_mele_trivial.json"), "--kind", "z2"});
    CHECK(z.code == kExitOk);
    CHECK(z.report()["invariant"]["value"] == 0);
    const auto z1 = run({"invariant", data("kane_mele.json"), "--kind", "z2", "--grid", "64"});
    CHECK(z1.code == kExitOk);
    CHECK(z1.report()["invariant"]["value"] == 1);
    CHECK(z1.report()["settings"]["grid"] == 64);
  }

  TEST_CASE("inapplicable invariants") {
    CHECK(run({"invariant", data("ssh.json"), "--kind", "chern"}).code == kExitSymmetry);
    CHECK(run({"invariant", data("qwz_m-1.json"), "--kind", "z2"}).code == kExitSymmetry);
    CHECK(run({"invariant", data("qwz_m-1.json"), "--kind", "winding"}).code == kExitSymmetry);
    // The Kane-Mele group is Z2, so a Chern number is not its strong invariant.
    CHECK(run({"invariant", data("kane_mele.json"), "--kind", "chern"}).code == kExitSymmetry);
  }

  TEST_CASE("verify suites") {
    const auto c = run({"verify", "--suite", "clifford"});
    CHECK(c.code == kExitOk);
    const json v = c.report()["verification"];
    CHECK(v["passed"] == v["total"]);
    int quaternion = 0;
    for (const auto& item : v["entries"])
      if (item.value("group", "") == "quaternion tensor" && item.value("passed", false)) ++quaternion;
    CHECK(quaternion == 6);

    const auto s = run({"verify", "--suite", "signs"});
    CHECK(s.code == kExitOk);
    const json sv = s.report()["verification"];
    int rows = 0;
    for (const auto& item : sv["entries"]) {
      const std::string g = item.value("group", "");
      if ((g == "graded table" || g == "ungraded table") && item.value("passed", false)) ++rows;
    }
    CHECK(rows == 8);
  }

  TEST_CASE("verify all is deterministic and honours the seed") {
    const auto a = run({"verify", "--suite", "all", "--seed", "7"});
    const auto b = run({"verify", "--suite", "all", "--seed", "7"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.report()["settings"]["seed"] == 7);
    const auto c = run({"verify", "--suite", "all"});
    CHECK(c.report()["settings"]["seed"] == 20240607);
  }

  TEST_CASE("report file and flatten") {
    const auto path = (std::filesystem::temp_directory_path() / "tenfold_test_report.json").string();
    std::filesystem::remove(path);
    const auto r = run({"--json-out", path, "flatten", data("qwz_m-1.json"), "--grid", "3"});
    CHECK(r.code == kExitOk);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == r.out);
    const json j = r.report();
    CHECK(j["flatten"]["samples"].size() == 9);
    CHECK(j["settings"]["tol_gap"] == 1e-8);
  }

  TEST_CASE("version flag") {
    const auto r = run({"--version"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("1.0.0") != std::string::npos);
  }

  TEST_CASE("model dump round-trips through classify") {
    const auto m = run({"model", "kane_mele", "1", "0.1", "0", "0"});
    CHECK(m.code == kExitOk);
    const std::string path = temp_file("km_dump.json", m.out);
    const auto c = run({"classify", path});
    CHECK(c.code == kExitOk);
    CHECK(c.report()["classification"]["cartan_label"] == "AII");
    CHECK(run({"model", "ssh", "1"}).code == kExitSchema);
  }
}
