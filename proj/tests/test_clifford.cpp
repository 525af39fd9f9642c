#include <doctest.h>

#include "tenfold/classify.hpp"
#include "tenfold/clifford.hpp"

using namespace tenfold;

namespace {

const cplx I(0, 1);

double worst(const std::vector<Check>& checks) {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.residual);
  return w;
}

// Bott table for the ungraded type of Cl_{r,s}, indexed by (r - s) mod 8.
Species table_species(int r, int s) {
  using F = Species::Field;
  const int n = r + s;
  const int row = mod(r - s, 8);
  const F field[8] = {F::R, F::R, F::R, F::C, F::H, F::H, F::H, F::C};
  const int copies = (row == 1 || row == 5) ? 2 : 1;
  // Real dimension 2^n = copies * size^2 * dim(field).
  const int field_dim = field[row] == F::R ? 1 : (field[row] == F::C ? 2 : 4);
  const int size = static_cast<int>(std::lround(std::sqrt((1 << n) / double(copies * field_dim))));
  return {field[row], size, copies};
}

int real_module_dim(const Species& sp) {
  const int f = sp.field == Species::Field::R ? 1 : (sp.field == Species::Field::C ? 2 : 4);
  return sp.size * f;
}

// Cokernel of restriction M(Cl_{0,k}) -> M(Cl_{0,k-1}) on irreducible
// ungraded modules, read as Z, Z2 or 0.
GroupKind ko_by_module_count(int k) {
  const Species big = species(0, k);
  const Species small = species(0, k - 1);
  const int ratio = real_module_dim(big) / real_module_dim(small);
  if (small.copies == 2 && big.copies == 1) {
    // The irreducible restricts to ratio/2 copies of each of the two summands.
    return ratio / 2 == 1 ? GroupKind::Z : GroupKind::Trivial;
  }
  const int index = ratio;
  if (index == 1) return GroupKind::Trivial;
  if (index == 2) return GroupKind::Z2;
  return GroupKind::Trivial;
}

}  // namespace

TEST_SUITE("clifford") {
  TEST_CASE("low-rank presentations") {
    const auto c11 = build_clifford(1, 1);
    CHECK(dist(c11.gens[0], pauli::x()) < 1e-15);
    CHECK(dist(c11.gens[1], I * pauli::y()) < 1e-15);
    CHECK(dist(c11.grading, pauli::z()) < 1e-15);

    const auto c20 = build_clifford(2, 0);
    CHECK(dist(c20.gens[0], pauli::x()) < 1e-15);
    CHECK(dist(c20.gens[1], pauli::y()) < 1e-15);
    CHECK(dist(c20.grading, pauli::z()) < 1e-15);

    // C + C with odd generator (i, -i) and the swap grading.
    const auto c01 = build_clifford(0, 1);
    Mat diag = Mat::Zero(2, 2);
    diag(0, 0) = I;
    diag(1, 1) = -I;
    CHECK(dist(c01.gens[0], diag) < 1e-15);
    CHECK(dist(c01.grading, pauli::x()) < 1e-15);

    const auto c00 = build_clifford(0, 0);
    CHECK(c00.dim() == 1);
    CHECK(c00.gens.empty());
  }

  TEST_CASE("model invariants for r, s <= 5") {
    for (int r = 0; r <= 5; ++r)
      for (int s = 0; s <= 5; ++s) {
        CAPTURE(r);
        CAPTURE(s);
        const auto c = build_clifford(r, s);
        CHECK(c.dim() == (1 << ((r + s + 1) / 2)));
        CHECK(worst(c.invariant_checks()) < 1e-12);
        const auto cc = build_clifford(r, s, false);
        CHECK(!cc.theta.has_value());
        CHECK(worst(cc.invariant_checks()) < 1e-12);
      }
  }

  TEST_CASE("dimension guard") {
    CHECK_NOTHROW(build_clifford(6, 6));
    CHECK_THROWS_AS(build_clifford(7, 6), PreconditionError);
    CHECK_THROWS_AS(build_clifford(-1, 0), PreconditionError);
  }

  TEST_CASE("quaternion tensor certificates") {
    const auto certs = quaternion_tensor_certificates();
    REQUIRE(certs.size() == 6);
    for (const auto& c : certs) {
      CAPTURE(c.source);
      CHECK(c.passed());
      CHECK(c.max_residual() < 1e-10);
    }
  }

  TEST_CASE("explicit generator lists") {
    const GradedRealAlgebra H = quaternions();
    const cplx i = I;
    const Mat one = eye(2), X = pauli::x(), Y = pauli::y(), Z = pauli::z();
    const auto c11 = build_clifford(1, 1);
    const auto cert = certify_iso(build_clifford(0, 4), tensor(H, c11.algebra()),
                                  {kron(one, i * Y), kron(i * X, X), kron(i * Y, X), kron(i * Z, X)});
    CHECK(cert.passed());
    const auto c20 = build_clifford(2, 0);
    const auto cert2 = certify_iso(build_clifford(1, 3), tensor(H, c20.algebra()),
                                   {kron(one, X), kron(i * X, Y), kron(i * Y, Y), kron(i * Z, Y)});
    CHECK(cert2.passed());
  }

  TEST_CASE("identity certificate and a deliberate violation") {
    const auto c11 = build_clifford(1, 1);
    CHECK(certify_iso(c11, c11, c11.gens).passed());
    // Swapping the images puts a negative square where a positive one belongs.
    const auto bad = certify_iso(c11, c11, {c11.gens[1], c11.gens[0]});
    CHECK_FALSE(bad.passed());
    const auto failures = bad.failures();
    REQUIRE_FALSE(failures.empty());
    CHECK(failures.front().find("square[0]") != std::string::npos);
  }

  TEST_CASE("rank deficiency is reported") {
    const auto c20 = build_clifford(2, 0);
    const auto target = build_clifford(2, 2);
    // Both images inside a copy of Cl_{2,0}: injective but not onto Cl_{2,2}.
    const auto cert = certify_iso(build_clifford(2, 0), target, {target.gens[0], target.gens[1]});
    CHECK_FALSE(cert.passed());
    (void)c20;
  }

  TEST_CASE("graded tensor examples") {
    const auto c11 = certify_tensor_sum(1, 0, 0, 1);
    CHECK(c11.passed());
    const auto b = build_clifford(1, 2);
    const auto unit = graded_tensor(build_clifford(0, 0), b);
    CHECK(certify_iso(b, unit, unit.gens).passed());
    CHECK(certify_tensor_sum(2, 0, 0, 2).passed());
    CHECK(species(2, 2) == Species{Species::Field::R, 4, 1});
  }

  TEST_CASE("graded tensor sums for r+r'+s+s' <= 5") {
    int count = 0;
    for (int r1 = 0; r1 <= 5; ++r1)
      for (int s1 = 0; r1 + s1 <= 5; ++s1)
        for (int r2 = 0; r1 + s1 + r2 <= 5; ++r2)
          for (int s2 = 0; r1 + s1 + r2 + s2 <= 5; ++s2) {
            const auto c = certify_tensor_sum(r1, s1, r2, s2);
            CAPTURE(c.target);
            CHECK(c.passed());
            ++count;
          }
    CHECK(count == 126);
  }

  TEST_CASE("graded tensor associativity") {
    const std::vector<std::pair<int, int>> small{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
    for (const auto& [r1, s1] : small)
      for (const auto& [r2, s2] : small)
        for (const auto& [r3, s3] : {std::pair{1, 0}, std::pair{0, 1}}) {
          const auto a = build_clifford(r1, s1), b = build_clifford(r2, s2), c = build_clifford(r3, s3);
          const auto left = graded_tensor(graded_tensor(a, b), c);
          const auto right = graded_tensor(a, graded_tensor(b, c));
          CHECK(certify_iso(left, right, right.gens).passed());
        }
  }

  TEST_CASE("matrix doubling") {
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; r + s <= 3; ++s) {
        CAPTURE(r);
        CAPTURE(s);
        CHECK(certify_real_matrix_doubling(r, s).passed());
      }
    for (int n = 0; n <= 3; ++n) CHECK(certify_complex_matrix_doubling(n).passed());
  }

  TEST_CASE("species examples") {
    using F = Species::Field;
    CHECK(species(1, 1) == Species{F::R, 2, 1});
    CHECK(species(0, 2) == Species{F::H, 1, 1});
    CHECK(species(0, 0) == Species{F::R, 1, 1});
    // The ladder gives M_4(R) for Cl_{3,1}: r - s = 2 mod 8.
    CHECK(species(3, 1) == Species{F::R, 4, 1});
  }

  TEST_CASE("species ladder agrees with the Bott table") {
    for (int r = 0; r <= 8; ++r)
      for (int s = 0; r + s <= 10; ++s) {
        CAPTURE(r);
        CAPTURE(s);
        CHECK(species(r, s) == table_species(r, s));
      }
  }

  TEST_CASE("module counting reproduces the KO table of the point") {
    for (int k = 1; k <= 8; ++k) {
      CAPTURE(k);
      CHECK(ko_by_module_count(k) == ko_point(k % 8));
    }
  }
}
