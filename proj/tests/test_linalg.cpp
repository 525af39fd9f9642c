#include <doctest.h>

#include "tenfold/linalg.hpp"

using namespace tenfold;

TEST_SUITE("linalg") {
  TEST_CASE("Pauli relations") {
    const cplx i(0, 1);
    CHECK(dist(pauli::x() * pauli::y(), i * pauli::z()) < 1e-15);
    CHECK(dist(pauli::y() * pauli::z(), i * pauli::x()) < 1e-15);
    CHECK(dist(pauli::z() * pauli::x(), i * pauli::y()) < 1e-15);
  }

  TEST_CASE("kron matches the mixed-product rule") {
    std::mt19937_64 rng(7);
    const Mat a = random_unitary(2, rng), b = random_unitary(3, rng);
    const Mat c = random_unitary(2, rng), d = random_unitary(3, rng);
    CHECK(dist(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
    CHECK(kron({a, b, eye(2)}).rows() == 12);
  }

  TEST_CASE("coerce_sign refuses non-scalars") {
    CHECK(coerce_sign(eye(3), "unit") == 1);
    CHECK(coerce_sign(-eye(3), "minus unit") == -1);
    CHECK_THROWS_AS(coerce_sign(pauli::z(), "z"), PreconditionError);
    CHECK_THROWS_AS(coerce_sign(cplx(0, 1) * eye(2), "i"), PreconditionError);
  }

  TEST_CASE("generated algebra dimensions") {
    CHECK(generated_algebra_dimension({pauli::x(), pauli::y()}, 2) == 4);
    CHECK(generated_algebra_dimension({pauli::z()}, 2) == 2);
    CHECK(generated_algebra_dimension({}, 4) == 1);
  }

  TEST_CASE("random unitaries are unitary") {
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 5, 8}) CHECK(unitarity_residual(random_unitary(n, rng)) < 1e-12);
  }

  TEST_CASE("Pfaffian squares to the determinant") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int n : {2, 4, 6, 8}) {
      Mat a = Mat::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          a(i, j) = cplx(g(rng), g(rng));
          a(j, i) = -a(i, j);
        }
      const cplx pf = pfaffian(a);
      CHECK(std::abs(pf * pf - a.determinant()) < 1e-9 * std::max(1.0, std::abs(a.determinant())));
    }
    Mat j = Mat::Zero(2, 2);
    j(0, 1) = 1;
    j(1, 0) = -1;
    CHECK(std::abs(pfaffian(j) - cplx(1)) < 1e-15);
  }

  TEST_CASE("sign of a Hermitian matrix") {
    Mat h(2, 2);
    h << 2, 0, 0, -3;
    double g = 0;
    CHECK(dist(hermitian_sign(h, &g), pauli::z()) < 1e-14);
    CHECK(g == doctest::Approx(2.0));
  }

  TEST_CASE("grading eigenspaces use standard vectors for diagonal gradings") {
    const Mat vp = grading_eigenspace(kron(pauli::z(), pauli::id2()), true);
    CHECK(vp.cols() == 2);
    CHECK(std::abs(vp(0, 0) - cplx(1)) < 1e-15);
    CHECK(std::abs(vp(1, 1) - cplx(1)) < 1e-15);
  }
}
