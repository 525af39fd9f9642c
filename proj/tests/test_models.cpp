#include <doctest.h>

#include <numbers>

#include "tenfold/model_io.hpp"
#include "tenfold/models.hpp"

using namespace tenfold;

namespace {

const double two_pi = 2 * std::numbers::pi;

Mat qwz_by_hand(double m, double kx, double ky) {
  return std::sin(two_pi * kx) * pauli::x() + std::sin(two_pi * ky) * pauli::y() +
         (m + std::cos(two_pi * kx) + std::cos(two_pi * ky)) * pauli::z();
}

// Eigenvalues of the Haldane Bloch matrix from the usual closed form, in
// lattice coordinates; orientation selects k or -k for the mass term.
std::pair<double, double> haldane_bands(double t1, double t2, double phi, double m, double k1, double k2,
                                        int orientation) {
  const cplx off = t1 * (1.0 + std::polar(1.0, -two_pi * k1) + std::polar(1.0, -two_pi * k2));
  double c = 0, s = 0;
  for (const auto& [a, b] : {std::pair{1, 0}, std::pair{-1, 1}, std::pair{0, -1}}) {
    const double arg = two_pi * (a * k1 + b * k2);
    c += std::cos(arg);
    s += std::sin(arg);
  }
  const double d0 = 2 * t2 * std::cos(phi) * c;
  const double dz = m - orientation * 2 * t2 * std::sin(phi) * s;
  const double r = std::sqrt(std::norm(off) + dz * dz);
  return {d0 - r, d0 + r};
}

std::string data(const std::string& f) { return std::string(TENFOLD_TEST_DATA) + "/" + f; }

}  // namespace

TEST_SUITE("models") {
  TEST_CASE("evaluation examples") {
    const auto ssh = build_ssh(1, 0);
    for (double k : {0.0, 0.17, 0.5, 0.9}) CHECK(dist(evaluate(ssh.model, {k}), pauli::x()) < 1e-14);
    BlochModel zero("zero", 2, 3);
    CHECK(evaluate(zero, {0.3, 0.4}).norm() == 0.0);
    const auto onsite = build_onsite(pauli::z());
    for (double k : {0.0, 0.25, 0.7}) CHECK(dist(evaluate(onsite.model, {k}), pauli::z()) < 1e-15);
  }

  TEST_CASE("SSH off-diagonal entry") {
    const auto ssh = build_ssh(0.3, 0.8);
    for (double k : {0.0, 0.1, 0.45, 0.8}) {
      const Mat h = evaluate(ssh.model, {k});
      const cplx expected = 0.3 + 0.8 * std::polar(1.0, two_pi * k);
      CHECK(std::abs(h(0, 1) - expected) < 1e-14);
      CHECK(std::abs(h(0, 0)) < 1e-15);
    }
  }

  TEST_CASE("QWZ matches its d-vector") {
    for (double m : {-3.0, -1.0, 0.0, 1.5})
      for (double kx : {0.0, 0.13, 0.5, 0.71})
        for (double ky : {0.0, 0.33, 0.9}) CHECK(dist(evaluate(build_qwz(m).model, {kx, ky}), qwz_by_hand(m, kx, ky)) < 1e-13);
  }

  TEST_CASE("Haldane bands match the closed form") {
    const double t1 = 1, t2 = 0.2, phi = 0.7, m = 0.1;
    const auto h = build_haldane(t1, t2, phi, m);
    int matches_plus = 0, matches_minus = 0, total = 0;
    for (double k1 : {0.0, 0.21, 0.5, 0.77})
      for (double k2 : {0.0, 0.4, 0.63}) {
        Eigen::SelfAdjointEigenSolver<Mat> es(evaluate(h.model, {k1, k2}));
        const auto ev = es.eigenvalues();
        for (int o : {1, -1}) {
          const auto [lo, hi] = haldane_bands(t1, t2, phi, m, k1, k2, o);
          if (std::abs(ev(0) - lo) < 1e-12 && std::abs(ev(1) - hi) < 1e-12) ++(o == 1 ? matches_plus : matches_minus);
        }
        ++total;
      }
    CHECK((matches_plus == total || matches_minus == total));
  }

  TEST_CASE("periodicity and self-adjointness on random points") {
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> u(0, 1);
    const std::vector<ModelWithSymmetries> models{build_ssh(0.4, 1.1), build_qwz(-1.2), build_haldane(1, 0.3, 1.1, 0.2),
                                                  build_kane_mele(1, 0.1, 0.07, 0.2)};
    for (const auto& m : models) {
      for (int t = 0; t < 20; ++t) {
        Momentum k(m.model.d());
        for (auto& c : k) c = u(rng);
        const Mat h = evaluate(m.model, k);
        CHECK(hermiticity_residual(h) < 1e-12);
        for (int axis = 0; axis < m.model.d(); ++axis) {
          Momentum shifted = k;
          shifted[axis] += 1.0;
          CHECK(dist(evaluate(m.model, shifted), h) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("gap examples") {
    CHECK(gap(build_ssh(0, 1).model, 64).gap == doctest::Approx(1.0));
    const auto closing = gap(build_ssh(1, 1).model, 64);
    CHECK(closing.gap < 1e-12);
    CHECK(closing.k[0] == doctest::Approx(0.5));
    CHECK(gap(build_onsite(pauli::z()).model, 8).gap == doctest::Approx(1.0));
    CHECK(gap(build_qwz(0).model, 16).gap < 1e-12);
    CHECK(gap(build_qwz(-1).model, 16).gap > 0.5);
  }

  TEST_CASE("grid points") {
    const auto pts = grid_points(2, 3);
    REQUIRE(pts.size() == 9);
    CHECK(pts[1] == Momentum{0.0, 1.0 / 3});
    CHECK(pts[3] == Momentum{1.0 / 3, 0.0});
  }

  TEST_CASE("SSH chiral relation") {
    const auto ssh = build_ssh(0, 1);
    const Mat& g = *ssh.symmetries.chiral;
    CHECK(dist(g, pauli::z()) == 0.0);
    for (const auto& k : grid_points(1, 64)) {
      const Mat h = evaluate(ssh.model, k);
      CHECK((g * h * g + h).norm() < 1e-14);
    }
    const auto rep = verify_symmetries(ssh.model, ssh.symmetries, 64);
    CHECK(rep.consistent());
    CHECK(*rep.chiral_residual < 1e-14);
  }

  TEST_CASE("Kane-Mele spin blocks") {
    const auto km = build_kane_mele(1, 0.1, 0, 0);
    const auto res = spin_block_residuals(km.model, 32);
    CHECK(res.h_blocks < 1e-10);
    CHECK(res.r_block < 1e-10);
    // Without Rashba coupling the spin blocks decouple.
    for (const auto& k : grid_points(2, 8)) {
      const Mat h = evaluate(km.model, k);
      CHECK(h.block(0, 2, 2, 2).norm() < 1e-15);
      CHECK(dist(h.block(2, 2, 2, 2), evaluate(km.model, {-k[0], -k[1]}).block(0, 0, 2, 2).conjugate()) < 1e-12);
    }
    const auto rashba = build_kane_mele(1, 0.1, 0.05, 0.1);
    const auto rr = spin_block_residuals(rashba.model, 32);
    CHECK(rr.h_blocks < 1e-10);
    CHECK(rr.r_block < 1e-10);
    CHECK(evaluate(rashba.model, {0.2, 0.3}).block(0, 2, 2, 2).norm() > 1e-3);
  }

  TEST_CASE("symmetry verification examples") {
    const auto km = build_kane_mele(1, 0.1, 0, 0);
    const auto rep = verify_symmetries(km.model, km.symmetries, 32);
    CHECK(rep.consistent());
    CHECK(*rep.trs_residual < 1e-10);
    CHECK(*rep.trs_parity == -1);

    auto haldane = build_haldane(1, 0.2, std::numbers::pi / 2, 0);
    haldane.symmetries.trs = eye(2);
    const auto bogus = verify_symmetries(haldane.model, haldane.symmetries, 32);
    CHECK_FALSE(bogus.consistent());
    CHECK(*bogus.trs_residual > 0.5);

    BlochModel zero("zero", 2, 4);
    SymmetrySpec all{kron(pauli::z(), eye(2)), kron(pauli::y(), eye(2)), kron(pauli::x(), eye(2))};
    const auto z = verify_symmetries(zero, all, 8);
    CHECK(*z.chiral_residual == 0.0);
    CHECK(*z.trs_residual == 0.0);
    CHECK(*z.phs_residual == 0.0);
  }

  TEST_CASE("TRS and PHS imply a chiral operator") {
    // Class BDI chain: SSH with TRS = 1 and PHS = sigma_z.
    auto ssh = build_ssh(0.3, 1);
    ssh.symmetries.chiral.reset();
    ssh.symmetries.trs = eye(2);
    ssh.symmetries.phs = pauli::z();
    const auto rep = verify_symmetries(ssh.model, ssh.symmetries, 32);
    CHECK(rep.consistent());
    REQUIRE(rep.implied_chiral);
    CHECK(dist(*rep.implied_chiral, pauli::z()) < 1e-14);
  }

  TEST_CASE("conjugate model and direct sums") {
    const auto q = build_qwz(-1);
    const BlochModel c = conjugate_model(q.model);
    for (const auto& k : grid_points(2, 5))
      CHECK(dist(evaluate(c, k), evaluate(q.model, {-k[0], -k[1]}).conjugate()) < 1e-13);
    const auto s = direct_sum(build_ssh(0, 1), build_ssh(1, 0));
    CHECK(s.model.N() == 4);
    REQUIRE(s.symmetries.chiral);
    CHECK(dist(*s.symmetries.chiral, direct_sum(pauli::z(), pauli::z())) == 0.0);
  }

  TEST_CASE("loader symmetrizes one-sided hoppings with a warning") {
    const auto loaded = load_model_file(data("ssh.json"));
    REQUIRE(loaded.warnings.size() == 1);
    CHECK(loaded.warnings[0].find("[1]") != std::string::npos);
    const auto ref = build_ssh(0, 1);
    for (const auto& k : grid_points(1, 16)) CHECK(dist(evaluate(loaded.model.model, k), evaluate(ref.model, k)) < 1e-14);
    REQUIRE(loaded.model.symmetries.chiral);
  }

  TEST_CASE("builder models survive a JSON round trip") {
    for (const auto& m : {build_qwz(-1), build_kane_mele(1, 0.1, 0.05, 0)}) {
      const auto back = parse_model(model_to_json(m).dump());
      CHECK(back.warnings.empty());
      CHECK(back.model.model.hoppings().size() == m.model.hoppings().size());
      for (const auto& k : grid_points(2, 4)) CHECK(dist(evaluate(back.model.model, k), evaluate(m.model, k)) < 1e-14);
      CHECK(back.model.symmetries.trs.has_value() == m.symmetries.trs.has_value());
    }
  }

  TEST_CASE("schema violations") {
    auto field_of = [](const std::string& text) {
      try {
        parse_model(text);
      } catch (const SchemaError& e) {
        return e.field;
      }
      return std::string("none");
    };
    CHECK(field_of(R"({"d": 1, "N": 1, "hoppings": []})") == "/name");
    CHECK(field_of(R"({"name": "x", "d": 1, "N": 2, "hoppings": [{"n": [0], "re": [[1, 0]]}]})") == "/hoppings/0/re");
    CHECK(field_of(R"({"name": "x", "d": 1, "N": 1, "hoppings": [{"n": [0], "re": [[1]]}, {"n": [0], "re": [[2]]}]})") ==
          "/hoppings/1/n");
    CHECK(field_of(R"({"name": "x", "d": 1, "N": 1, "hoppings": [{"n": [0], "re": [[0]], "im": [[1]]}]})") ==
          "/hoppings");
    CHECK(field_of(R"({"name": "x", "d": 1, "N": 1, "hoppings": [{"n": [1], "re": [[1]]}, {"n": [-1], "re": [[2]]}]})") ==
          "/hoppings");
    CHECK(field_of(R"({"name": "x", "d": 1, "N": 1, "hoppings": [], "symmetries": {"mirror": [[1]]}})") ==
          "/symmetries/mirror");
    CHECK(field_of(R"({"name": "x", "d": 1, "N": 1, "hoppings": []})") == "none");
  }

  TEST_CASE("parse errors carry a line number") {
    try {
      parse_model("{\n  \"name\": \"x\",\n  \"d\": 1,,\n}");
      FAIL("expected a schema error");
    } catch (const SchemaError& e) {
      CHECK(e.line == 3);
    }
  }
}
