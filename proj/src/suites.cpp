#include "tenfold/suites.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "tenfold/classify.hpp"
#include "tenfold/clifford.hpp"
#include "tenfold/graded_real.hpp"
#include "tenfold/invariants.hpp"
#include "tenfold/models.hpp"
#include "tenfold/vandaele.hpp"

namespace tenfold {

using nlohmann::json;

namespace {

// Collects entries of one suite and keeps the pass count.
struct Recorder {
  SuiteResult result;
  json entries = json::array();

  explicit Recorder(std::string name) { result.name = std::move(name); }

  void add(json entry, bool passed) {
    entry["passed"] = passed;
    entries.push_back(std::move(entry));
    ++result.total;
    if (passed) ++result.passed;
  }
  void add_certificate(const IsoCertificate& c, const std::string& group) {
    json j = certificate_json(c);
    j["group"] = group;
    add(std::move(j), c.passed());
  }
  void add_check(const std::string& group, const std::string& name, double residual, double tol) {
    add({{"group", group}, {"name", name}, {"residual", residual}, {"tolerance", tol}}, residual < tol);
  }
  void add_value(const std::string& group, const std::string& name, const json& got, const json& expected) {
    add({{"group", group}, {"name", name}, {"value", got}, {"expected", expected}}, got == expected);
  }
  // Runs f; a thrown error is a failed entry.
  template <class F>
  void guarded(const std::string& group, const std::string& name, F f) {
    try {
      f();
    } catch (const std::exception& e) {
      add({{"group", group}, {"name", name}, {"error", e.what()}}, false);
    }
  }
  SuiteResult finish(std::optional<std::uint64_t> seed = std::nullopt) {
    result.report = {{"suite", result.name}, {"passed", result.passed}, {"total", result.total}};
    if (seed) result.report["seed"] = *seed;
    result.report["entries"] = std::move(entries);
    return result;
  }
};

std::string degree_word(int r, int s) { return "Cl_{" + std::to_string(r) + "," + std::to_string(s) + "}"; }

// Independent Bott table for the ungraded type of Cl_{r,s}.
Species bott_species(int r, int s) {
  const int total = r + s;
  auto half = [&](int shift) { return 1 << ((total - shift) / 2); };
  switch (mod(r - s, 8)) {
    case 0: return {Species::Field::R, half(0), 1};
    case 1: return {Species::Field::R, half(1), 2};
    case 2: return {Species::Field::R, half(0), 1};
    case 3: return {Species::Field::C, half(1), 1};
    case 4: return {Species::Field::H, half(2), 1};
    case 5: return {Species::Field::H, half(3), 2};
    case 6: return {Species::Field::H, half(2), 1};
    default: return {Species::Field::C, half(1), 1};
  }
}

}  // namespace

json certificate_json(const IsoCertificate& c) {
  json checks = json::array();
  for (const auto& ch : c.checks)
    checks.push_back({{"name", ch.name}, {"residual", ch.residual}, {"tolerance", ch.tolerance}, {"passed", ch.passed()}});
  return {{"source", c.source}, {"target", c.target}, {"max_residual", c.max_residual()}, {"checks", checks}};
}

Mat random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ();
  return q.cast<cplx>();
}

Mat random_even_symmetric_unitary(const Mat& gamma, std::mt19937_64& rng) {
  const Mat vp = grading_eigenspace(gamma, true);
  const Mat vm = grading_eigenspace(gamma, false);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  auto block = [&](const Mat& v) -> Mat {
    const int k = static_cast<int>(v.cols());
    if (k == 0) return Mat::Zero(gamma.rows(), gamma.rows());
    const Mat o = random_orthogonal(k, rng);
    Vec d(k);
    for (int i = 0; i < k; ++i) d(i) = std::polar(1.0, phase(rng));
    return v * o * d.asDiagonal() * o.transpose() * v.transpose();
  };
  return block(vp) + block(vm);
}

SuiteResult run_clifford_suite() {
  Recorder rec("clifford");
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; s <= 5; ++s) {
      const CliffordRep c = build_clifford(r, s);
      double worst = 0.0;
      for (const auto& ch : c.invariant_checks()) worst = std::max(worst, ch.residual);
      rec.add_check("model invariants", c.label(), worst, 1e-12);
    }
  for (const auto& c : quaternion_tensor_certificates()) rec.add_certificate(c, "quaternion tensor");
  for (int r1 = 0; r1 <= 5; ++r1)
    for (int s1 = 0; r1 + s1 <= 5; ++s1)
      for (int r2 = 0; r1 + s1 + r2 <= 5; ++r2)
        for (int s2 = 0; r1 + s1 + r2 + s2 <= 5; ++s2)
          rec.add_certificate(certify_tensor_sum(r1, s1, r2, s2), "graded tensor sum");
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; r + s <= 3; ++s) rec.add_certificate(certify_real_matrix_doubling(r, s), "real matrix doubling");
  for (int n = 0; n <= 3; ++n) rec.add_certificate(certify_complex_matrix_doubling(n), "complex matrix doubling");
  for (int r = 0; r <= 8; ++r)
    for (int s = 0; r + s <= 8; ++s)
      rec.add_value("species", degree_word(r, s), species(r, s).str(), bott_species(r, s).str());
  return rec.finish();
}

SuiteResult run_signs_suite(std::uint64_t seed) {
  Recorder rec("signs");
  const Mat x = pauli::x(), y = pauli::y(), z = pauli::z(), one = pauli::id2();

  // Balanced graded real structures on M_n: chiral plus one real symmetry.
  struct GradedRow {
    std::string label;
    Mat gamma, theta;
    SignPair expected;
    int r, s;
  };
  const std::vector<GradedRow> graded{
      {"M_2, conj", z, one, {1, 1}, 1, 1},
      {"M_2, Ad_sx conj", z, x, {1, -1}, 2, 0},
      {"M_2, Ad_sy conj", z, y, {-1, -1}, 0, 2},
      {"M_4, Ad_sy conj (x) conj", kron(one, z), kron(y, one), {-1, 1}, 0, 4},
  };
  for (const auto& row : graded)
    rec.guarded("graded table", row.label, [&] {
      const GradedRealAlgebra alg = GradedRealAlgebra::full(static_cast<int>(row.gamma.rows()), row.gamma);
      const SignPair eta = relative_signs(alg, row.theta);
      SymmetryProfile p;
      p.chiral = true;
      p.trs = eta.eta1;
      p.grading_reality = coerce_sign(row.theta * row.gamma.conjugate() * row.theta.adjoint() * row.gamma,
                                      "grading reality");
      const int degree = classify(p).degree;
      rec.add({{"group", "graded table"},
               {"name", row.label},
               {"eta", eta.str()},
               {"expected_eta", row.expected.str()},
               {"degree", degree},
               {"real_subalgebra", degree_word(row.r, row.s)}},
              eta == row.expected && degree == degree_from_real_subalgebra(row.r, row.s));
    });

  // Real structures on M_n (x) Cl_1 with grading id (x) swap; the Cl_1 factor
  // is span{1, sigma_z} with conj (l_{1,0}) or Ad_sx conj (l_{0,1}).
  struct FpRow {
    std::string label;
    Mat theta_n;
    bool phs;
    int parity, r, s;
  };
  const std::vector<FpRow> fp{
      {"n=1, conj", eye(1), false, 1, 1, 0},
      {"n=1, swap conj", eye(1), true, 1, 0, 1},
      {"n=2, Ad_sy conj (x) conj", y, false, -1, 0, 3},
      {"n=2, Ad_sy conj (x) swap conj", y, true, -1, 3, 0},
  };
  for (const auto& row : fp)
    rec.guarded("ungraded table", row.label, [&] {
      const int n = static_cast<int>(row.theta_n.rows());
      GradedRealAlgebra alg;
      alg.n = 2 * n;
      alg.grading = kron(eye(n), x);
      alg.theta = kron(row.theta_n, row.phs ? x : one);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Mat u = Mat::Zero(n, n);
          u(i, j) = 1.0;
          alg.generators.push_back(kron(u, one));
        }
      alg.generators.push_back(kron(eye(n), z));
      alg.validate();
      // Relative to conj (x) (the same Cl_1 structure), Theta is Theta_n (x) 1.
      const SignPair eta = relative_signs(alg, kron(row.theta_n, one));
      SymmetryProfile p;
      (row.phs ? p.phs : p.trs) = eta.eta1;
      const int degree = classify(p).degree;
      rec.add({{"group", "ungraded table"},
               {"name", row.label},
               {"eta1", eta.eta1},
               {"eta2", eta.eta2},
               {"expected_eta1", row.parity},
               {"degree", degree},
               {"real_subalgebra", degree_word(row.r, row.s)},
               {"algebra_dimension", alg.dimension()}},
              eta.eta1 == row.parity && eta.eta2 == 1 && degree == degree_from_real_subalgebra(row.r, row.s) &&
                  alg.dimension() == 2 * n * n);
    });

  std::mt19937_64 rng(seed);

  // Constructive conjugacy on random even symmetric Theta, plus obstructions.
  {
    const Mat gamma = kron(z, one);
    const GradedRealAlgebra alg = GradedRealAlgebra::full(4, gamma);
    double worst = 0.0;
    int found = 0;
    for (int t = 0; t < 50; ++t) {
      const ConjugacyResult res = inner_conjugacy_witness(alg, random_even_symmetric_unitary(gamma, rng));
      if (res.witness) ++found;
      worst = std::max(worst, res.residual);
    }
    rec.add({{"group", "conjugacy"}, {"name", "50 random even symmetric Theta in M_4"}, {"witnesses", found},
             {"max_residual", worst}, {"tolerance", kTolAlg}},
            found == 50 && worst < kTolAlg);
    const GradedRealAlgebra m2 = GradedRealAlgebra::full(2, z);
    rec.add_value("conjugacy", "Theta = sigma_y", inner_conjugacy_witness(m2, y).tag(), "obstructed((-1,-1))");
    rec.add_value("conjugacy", "Theta = sigma_x", inner_conjugacy_witness(m2, x).tag(), "obstructed((+1,-1))");
  }

  // Square roots: 100 random unitaries per size, with and without a fixed structure.
  for (int n : {2, 4, 8}) {
    double worst = 0.0, worst_fixed = 0.0;
    const GradedRealAlgebra ref = GradedRealAlgebra::full(n, std::nullopt, eye(n));
    for (int t = 0; t < 100; ++t) {
      const Mat u = random_unitary(n, rng);
      worst = std::max(worst, dist(sqrt_unitary(u) * sqrt_unitary(u), u));
      const Mat o = random_orthogonal(n, rng);
      Vec d(n);
      for (int i = 0; i < n; ++i) d(i) = std::polar(1.0, std::uniform_real_distribution<double>(0, 6.28)(rng));
      const Mat sym = o * d.asDiagonal() * o.transpose();
      const Mat v = sqrt_unitary(sym, StructureMap{&ref, Structure::RealStar});
      worst_fixed = std::max({worst_fixed, dist(v * v, sym), dist(v.transpose(), v)});
    }
    rec.add_check("square roots", "random unitaries n=" + std::to_string(n), worst, kTolAlg);
    rec.add_check("square roots", "transpose-fixed unitaries n=" + std::to_string(n), worst_fixed, kTolAlg);
  }

  // Order-two and commutation predicates against direct composition.
  {
    const GradedRealAlgebra ref = GradedRealAlgebra::full(2, z, one);
    int agree = 0, trials = 0;
    for (int t = 0; t < 60; ++t) {
      Mat u;
      switch (t % 3) {
        case 0: u = random_unitary(2, rng); break;
        case 1: {
          const Mat o = random_orthogonal(2, rng);
          u = o * Vec::Constant(2, std::polar(1.0, 0.3 * t)).asDiagonal() * o.transpose();
          u = u * std::polar(1.0, 0.1 * t);
          break;
        }
        default: u = std::polar(1.0, 0.2 * t) * random_orthogonal(2, rng) * y * random_orthogonal(2, rng).transpose();
      }
      for (Structure kind : {Structure::Real, Structure::Grading}) {
        ++trials;
        if (order_two_check(ref, u, kind).agree()) ++agree;
      }
    }
    rec.add({{"group", "order two"}, {"name", "predicted vs direct"}, {"agree", agree}, {"trials", trials}},
            agree == trials);
  }

  // Parity of Ad_Gamma o t equals t(Gamma) Gamma times the parity of t,
  // over Pauli strings in M_4.
  {
    const std::vector<Mat> p{one, x, y, z};
    std::set<std::tuple<int, int, int>> configs;
    int holds = 0, cases = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (a == 0 && b == 0) continue;
        const Mat gamma = kron(p[a], p[b]);
        const GradedRealAlgebra alg = GradedRealAlgebra::full(4, gamma);
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            const Mat theta = kron(p[c], p[d]);
            const SignPair eta = relative_signs(alg, theta);
            const int reality = coerce_sign(theta * gamma.conjugate() * theta.adjoint() * gamma, "reality");
            const Mat theta_p = gamma * theta;
            const int parity_p = coerce_sign(theta_p * theta_p.conjugate(), "parity");
            configs.insert({eta.eta1, eta.eta2, reality});
            ++cases;
            if (parity_p == reality * eta.eta1) ++holds;
          }
      }
    rec.add({{"group", "parity algebra"}, {"name", "Pauli strings in M_4"}, {"holds", holds}, {"cases", cases},
             {"sign_configurations", configs.size()}},
            holds == cases && configs.size() == 8);
  }
  return rec.finish(seed);
}

SuiteResult run_morita_suite() {
  Recorder rec("morita");
  const Mat x = pauli::x(), z = pauli::z();
  struct Case {
    std::string label;
    std::optional<Mat> theta;
    std::string expected_case;
  };
  for (const auto& c : std::vector<Case>{{"(M_2, sz, conj)", eye(2), "3+"},
                                         {"(M_2, sz, Ad_sx conj)", x, "3-"},
                                         {"(M_2, sz) complex", std::nullopt, "complex"}}) {
    rec.guarded("morita", c.label, [&] {
      const MoritaReport r = morita_psi_e(GradedRealAlgebra::full(2, z, c.theta), x);
      for (const IsoCertificate* cert : {&r.psi_doubled, &r.unitary_u, &r.psi_reduced}) {
        json j = certificate_json(*cert);
        j["group"] = "morita " + c.label;
        rec.add(std::move(j), cert->passed());
      }
      rec.add_value("morita " + c.label, "case", r.real_case, c.expected_case);
    });
  }
  const std::vector<std::pair<int, int>> small{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
  for (const auto& [r1, s1] : small)
    for (const auto& [r2, s2] : small)
      rec.add_certificate(certify_inner_grading_rule(build_clifford(r1, s1), build_clifford(r2, s2)),
                          "inner grading rule");
  // Negative control: the rule for the other grading type must fail.
  const IsoCertificate wrong = certify_inner_grading_rule(build_clifford(2, 0), build_clifford(1, 1), true);
  rec.add({{"group", "inner grading rule"}, {"name", "swapped rule rejected"}, {"max_residual", wrong.max_residual()}},
          !wrong.passed());
  return rec.finish();
}

SuiteResult run_vandaele_suite(std::uint64_t seed) {
  Recorder rec("vandaele");
  const Mat x = pauli::x(), y = pauli::y(), z = pauli::z(), one = pauli::id2();

  const GradedRealAlgebra m2 = GradedRealAlgebra::full(2, z);
  {
    const HomotopyWitness w = rotation_homotopy(make_osu(m2, x), make_osu(m2, y));
    rec.add({{"group", "rotation"}, {"name", "sx to -sx in (M_2, sz)"}, {"max_residual", w.max_residual},
             {"endpoint_residual", dist(w.end, -x)}},
            w.valid() && dist(w.end, -x) < kTolAlg);
    const GradedRealAlgebra m4 = GradedRealAlgebra::full(4, kron(z, one));
    const HomotopyWitness w4 = rotation_homotopy(make_osu(m4, kron(x, one)), make_osu(m4, kron(y, z)));
    rec.add_check("rotation", "sx(x)1 to sy(x)sz in M_4", w4.max_residual, kTolAlg);
  }
  {
    Mat h(2, 2);
    h << 2, 0, 0, -3;
    rec.add_check("flatten", "diag(2,-3)", dist(flatten(h), z), kTolAlg);
    rec.add_check("flatten", "2 sx", dist(flatten(2.0 * x), x), kTolAlg);
    rec.add({{"group", "flatten"}, {"name", "linear path gap of diag(2,-3)"}, {"gap", linear_path_gap(h)}},
            linear_path_gap(h) >= 1.0 - 1e-12);
  }
  {
    const Mat q = q_map(m2, x, x);
    rec.add_check("q map", "Q_e(e) = 1", dist(q, eye(1)), kTolAlg);
    const Mat qy = q_map(m2, y, x);
    rec.add({{"group", "q map"}, {"name", "Q_sx(sy)"}, {"re", qy(0, 0).real()}, {"im", qy(0, 0).imag()}},
            std::abs(qy(0, 0) - cplx(0, 1)) < kTolAlg);
  }
  {
    // One accepted element per degree over (C, conj).
    const GradedRealAlgebra c1 = GradedRealAlgebra::full(1, std::nullopt, eye(1));
    const cplx i(0, 1);
    const std::vector<Mat> elems{one, Mat(x), y, Mat(i * y), one, Mat(i * z), z, Mat(i * one)};
    for (int d = 0; d < 8; ++d)
      rec.guarded("representatives", "degree " + std::to_string(d), [&] {
        const BLRepresentative rep = bl_representative(d, elems[d], c1);
        rec.add_check("representatives", "degree " + std::to_string(d) + ": " + rep.condition, rep.residual, kTolAlg);
      });
  }
  {
    // Winding negation and additivity on the SSH family.
    const std::vector<std::pair<double, double>> params{{0, 1}, {1, 0}, {0.3, 1}, {1, 0.4}, {0.5, -1}};
    for (const auto& [v, w] : params) {
      const std::string label = "SSH(" + json(v).dump() + "," + json(w).dump() + ")";
      rec.guarded("winding", label, [&] {
        const ModelWithSymmetries m = build_ssh(v, w);
        const Mat& g = *m.symmetries.chiral;
        const Mat e = default_basepoint(g);
        const int wx = winding_number(m.model, g).value;
        const BlochModel inv = transform(m.model, [&](const Mat& t) -> Mat { return -e * t * e; }, "inverse");
        const int winv = winding_number(inv, g).value;
        const ModelWithSymmetries sum = direct_sum(m, build_ssh(0, 1));
        const int wsum = winding_number(sum.model, *sum.symmetries.chiral).value;
        const ModelWithSymmetries cancel{direct_sum(m, ModelWithSymmetries{inv, m.symmetries})};
        const int wcancel = winding_number(cancel.model, *cancel.symmetries.chiral).value;
        rec.add({{"group", "winding"}, {"name", label}, {"winding", wx}, {"inverse", winv}, {"plus_SSH(0,1)", wsum},
                 {"with_inverse", wcancel}},
                winv == -wx && wsum == wx + 1 && wcancel == 0);
      });
    }
  }
  rec.guarded("doubling", "Kane-Mele", [&] {
    const DoublingReport d = mod2_doubling_check(build_kane_mele(1, 0.1, 0, 0), kron(z, one));
    rec.add({{"group", "doubling"}, {"name", "Kane-Mele (x) 2"}, {"z2_single", d.z2_single},
             {"z2_doubled", d.z2_doubled}, {"spin_chern_doubled", *d.spin_chern_doubled}},
            d.z2_single == 1 && d.z2_doubled == 0);
  });
  return rec.finish(seed);
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "clifford") return run_clifford_suite();
  if (name == "signs") return run_signs_suite(seed);
  if (name == "morita") return run_morita_suite();
  if (name == "vandaele") return run_vandaele_suite(seed);
  if (name != "all") throw PreconditionError("unknown suite: " + name);
  SuiteResult all;
  all.name = "all";
  json suites = json::array();
  for (const auto& part : {run_clifford_suite(), run_signs_suite(seed), run_morita_suite(), run_vandaele_suite(seed)}) {
    all.passed += part.passed;
    all.total += part.total;
    suites.push_back(part.report);
  }
  all.report = {{"suite", "all"}, {"seed", seed}, {"passed", all.passed}, {"total", all.total}, {"suites", suites}};
  return all;
}

}  // namespace tenfold
