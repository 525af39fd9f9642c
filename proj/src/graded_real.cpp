#include "tenfold/graded_real.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace tenfold {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unitary(const Mat& u, const std::string& what, double tol) {
  if (u.rows() != u.cols() || unitarity_residual(u) > tol)
    throw PreconditionError(what + " is not unitary");
}

bool is_scalar(const Mat& m, double tol) {
  cplx c;
  return scalar_value(m, c, tol);
}

Mat minus_one_plus(const Mat& g, double sign) { return eye(g.rows()) + sign * g; }

std::vector<Mat> matrix_units(int n) {
  return GradedRealAlgebra::full(n).spanning_set();
}

// max over the spanning set of || A(x) - B(x) ||.
template <class F, class G>
double max_over(const std::vector<Mat>& basis, F f, G g) {
  double m = 0.0;
  for (const auto& x : basis) m = std::max(m, (f(x) - g(x)).norm());
  return m;
}

}  // namespace

Mat StructureMap::operator()(const Mat& a) const {
  switch (kind) {
    case Structure::Real: return algebra->real(a);
    case Structure::RealStar: return algebra->real_star(a);
    case Structure::Grading: return algebra->grade(a);
    case Structure::GradingStar: return algebra->grade(a.adjoint());
  }
  return a;
}

Mat phi(const StructureMap& xi, const Mat& u, double tol) {
  require_unitary(u, "phi argument", tol);
  return u * xi(u);
}

std::string SignPair::str() const {
  auto s = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
  return "(" + s(eta1) + "," + s(eta2) + ")";
}

SignPair relative_signs(const GradedRealAlgebra& algebra, const Mat& theta) {
  require_unitary(theta, "Theta", kTolAlg);
  if (theta.rows() != algebra.n) throw PreconditionError("Theta has the wrong size");
  const Mat g = algebra.gamma_op();
  const Mat h = g * theta * g;
  if (dist(h, theta) > kTolSign && dist(h, -theta) > kTolSign)
    throw PreconditionError("Theta is not homogeneous for the grading");
  SignPair eta;
  eta.eta1 = coerce_sign(theta * theta.conjugate(), "Theta conj(Theta)");
  eta.eta2 = coerce_sign(h * theta.adjoint(), "Gamma Theta Gamma Theta^dagger");
  return eta;
}

Mat sqrt_unitary(const Mat& u, std::optional<StructureMap> xi, double tol_gap, double tol) {
  require_unitary(u, "sqrt_unitary argument", tol);
  if (xi) {
    if (!xi->linear())
      throw PreconditionError("sqrt_unitary: only linear structure maps commute with roots");
    if (dist((*xi)(u), u) > tol) throw PreconditionError("sqrt_unitary: u is not xi-invariant");
  }
  const NormalEig eig = normal_eig(u);
  const Eigen::Index n = eig.values.size();

  std::vector<double> folded;
  for (Eigen::Index i = 0; i < n; ++i) {
    double a = std::fmod(std::arg(eig.values(i)), kPi);
    if (a < 0) a += kPi;
    if (a >= kPi) a -= kPi;
    folded.push_back(a);
  }
  std::sort(folded.begin(), folded.end());

  double best_width = -1.0, best_mid = 0.0;
  for (std::size_t i = 0; i < folded.size(); ++i) {
    const double lo = folded[i];
    const double hi = i + 1 < folded.size() ? folded[i + 1] : folded.front() + kPi;
    const double width = hi - lo;
    double mid = std::fmod(lo + width / 2.0, kPi);
    if (width > best_width + 1e-12 ||
        (std::abs(width - best_width) <= 1e-12 && mid < best_mid)) {
      best_width = width;
      best_mid = mid;
    }
  }
  if (best_width / 2.0 <= tol_gap)
    throw PreconditionError("sqrt_unitary: spectrum meets every antipodal pair");

  const double cut = best_mid >= kPi / 2 ? best_mid : best_mid + kPi;
  Vec roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double a = std::arg(eig.values(i));
    while (a > cut) a -= 2 * kPi;
    while (a <= cut - 2 * kPi) a += 2 * kPi;
    roots(i) = std::polar(1.0, a / 2.0);
  }
  Mat v = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
  if (dist(v * v, u) > tol) throw PreconditionError("sqrt_unitary: root residual too large");
  return v;
}

bool OrderTwoReport::agree() const {
  bool ok = order_two_predicted == order_two_direct && commute_predicted == commute_direct;
  if (order_two_direct) ok = ok && commute_by_square == commute_direct && consequences_hold;
  return ok;
}

OrderTwoReport order_two_check(const GradedRealAlgebra& algebra, const Mat& u, Structure kind,
                               double tol) {
  require_unitary(u, "order_two_check argument", tol);
  if (kind == Structure::RealStar || kind == Structure::GradingStar)
    throw PreconditionError("order_two_check: xi must be an automorphism, not a starred map");
  const StructureMap xi{&algebra, kind};
  const Structure star_kind = kind == Structure::Real ? Structure::RealStar : Structure::GradingStar;
  const StructureMap xi_star{&algebra, star_kind};
  auto xi_prime = [&](const Mat& a) -> Mat { return u * xi(a) * u.adjoint(); };

  OrderTwoReport rep;
  rep.xi = kind;
  const Mat phi_u = u * xi(u);
  rep.order_two_predicted = is_scalar(phi_u, kTolSign);
  rep.commute_predicted = is_scalar(u * xi_star(u), kTolSign);
  rep.commute_by_square = is_scalar(u * u, kTolSign);

  const auto basis = algebra.spanning_set();
  double sq = 0.0, comm = 0.0;
  for (const auto& a : basis) {
    sq = std::max(sq, dist(xi_prime(xi_prime(a)), a));
    comm = std::max(comm, dist(xi_prime(xi(a)), xi(xi_prime(a))));
  }
  rep.order_two_direct = sq < 1e-8;
  rep.commute_direct = comm < 1e-8;

  if (rep.order_two_direct) {
    const Mat xu = xi(u);
    const bool commute = dist(xu * u, u * xu) < 1e-8;
    const bool invariant = dist(xi(phi_u), phi_u) < 1e-8;
    const Mat phi_prime = u * xi_prime(u);
    const bool same = dist(phi_prime, phi_u) < 1e-8;
    rep.consequences_hold = commute && invariant && same;
  }
  return rep;
}

Mat invariant_generator(const GradedRealAlgebra& algebra, const Mat& theta, double tol) {
  require_unitary(theta, "Theta", tol);
  cplx z2;
  if (!scalar_value(theta * theta, z2, kTolSign))
    throw PreconditionError("invariant_generator: Theta^2 is not scalar");
  const Mat v = theta / std::sqrt(z2);
  const GradedRealAlgebra with_r = GradedRealAlgebra::full(algebra.n, algebra.grading, theta);
  cplx lambda;
  if (!scalar_value(v * with_r.real(v), lambda, kTolSign))
    throw PreconditionError("invariant_generator: phi_R(v) is not scalar");
  const Mat w = std::sqrt(lambda) * v;
  if (dist(with_r.real(w), w) > tol)
    throw PreconditionError("invariant_generator: correction did not produce R(w) = w");
  return w;
}

std::string ConjugacyResult::tag() const {
  return obstructed() ? "obstructed(" + eta.str() + ")" : "conjugate";
}

double intertwining_residual(const GradedRealAlgebra& algebra, const Mat& theta, const Mat& w) {
  const GradedRealAlgebra with_r = GradedRealAlgebra::full(algebra.n, algebra.grading, theta);
  return max_over(
      algebra.spanning_set(),
      [&](const Mat& a) -> Mat { return w.adjoint() * with_r.real(w * a * w.adjoint()) * w; },
      [](const Mat& a) -> Mat { return a.conjugate(); });
}

ConjugacyResult inner_conjugacy_witness(const GradedRealAlgebra& algebra, const Mat& theta,
                                        double tol) {
  ConjugacyResult res;
  res.eta = relative_signs(algebra, theta);
  if (!(res.eta == SignPair{1, 1})) return res;
  // Theta is even and symmetric; transposition (R* for the reference
  // structure) is linear, so the spectral root stays symmetric and even.
  const GradedRealAlgebra reference = GradedRealAlgebra::full(algebra.n, algebra.grading, eye(algebra.n));
  const Mat w = sqrt_unitary(theta, StructureMap{&reference, Structure::RealStar}, kTolGap, tol);
  res.residual = std::max(intertwining_residual(algebra, theta, w),
                          dist(w * w.conjugate().adjoint(), theta));
  if (algebra.grading) res.residual = std::max(res.residual, dist(algebra.grade(w), w));
  res.witness = w;
  return res;
}

MoritaReport morita_psi_e(const GradedRealAlgebra& algebra, const Mat& e, double tol) {
  if (!algebra.grading) throw PreconditionError("morita_psi_e: algebra needs an inner grading");
  const int n = algebra.n;
  const Mat& G = *algebra.grading;
  if (e.rows() != n || hermiticity_residual(e) > tol || unitarity_residual(e) > tol ||
      (G * e * G + e).norm() > tol)
    throw PreconditionError("morita_psi_e: e must be an odd self-adjoint unitary");

  MoritaReport rep;
  int reality = 0;
  if (algebra.has_real()) {
    reality = coerce_sign(algebra.real(G) * G, "R(Gamma) Gamma");
    if (dist(algebra.real(e), e) > tol)
      throw PreconditionError("morita_psi_e: e is not invariant under R");
    rep.real_case = reality > 0 ? "3+" : "3-";
  } else {
    rep.real_case = "complex";
  }

  const Mat I2 = eye(2), X = pauli::x(), Z = pauli::z();
  const auto basis_a = algebra.spanning_set();

  {  // Psi_e = Ad_{1 (+) e} on M_2(A), laid out as M_2 (x) A.
    IsoCertificate& c = rep.psi_doubled;
    c.source = "(M_2(A), gamma_2)";
    c.target = "(M_2(A), gamma_ev)";
    const Mat D = direct_sum(eye(n), e);
    const Mat G2 = kron(I2, G), Gev = kron(Z, G);
    std::vector<Mat> basis;
    for (const auto& u : matrix_units(2))
      for (const auto& a : basis_a) basis.push_back(kron(u, a));
    auto psi = [&](const Mat& x) -> Mat { return D * x * D; };
    c.add("Psi_e involutive", dist(D * D, eye(2 * n)), tol);
    c.add("Psi_e gamma_2 = gamma_ev Psi_e",
          max_over(basis, [&](const Mat& x) -> Mat { return psi(G2 * x * G2); },
                   [&](const Mat& x) -> Mat { return Gev * psi(x) * Gev; }),
          tol);
    if (algebra.has_real()) {
      const GradedRealAlgebra a2 = GradedRealAlgebra::full(2 * n, G2, kron(I2, *algebra.theta));
      c.add("Psi_e R_2 = R_2 Psi_e",
            max_over(basis, [&](const Mat& x) -> Mat { return psi(a2.real(x)); },
                     [&](const Mat& x) -> Mat { return a2.real(psi(x)); }),
            tol);
    }
  }

  {  // U on A (x) M_2.
    IsoCertificate& c = rep.unitary_u;
    c.source = "(A (x) M_2, Ad_{Gamma (x) sigma_z})";
    c.target = "(A (x) M_2, id (x) Ad_{sigma_z})";
    rep.U = 0.5 * (kron(minus_one_plus(G, -1.0), X) + kron(minus_one_plus(G, 1.0), I2));
    const Mat& U = rep.U;
    c.add("U unitary", unitarity_residual(U), tol);
    c.add("U (Gamma x sz) U^dag = 1 x sz", dist(U * kron(G, Z) * U.adjoint(), kron(eye(n), Z)), tol);
    if (algebra.has_real()) {
      const GradedRealAlgebra r2 = GradedRealAlgebra::full(2 * n, std::nullopt, kron(*algebra.theta, I2));
      if (reality > 0) {
        c.add("R_2(U) = U", dist(r2.real(U), U), tol);
      } else {
        const Mat sx = kron(eye(n), X);
        c.add("U R_2(U^*) = 1 x sx", dist(U * r2.real(U.adjoint()), sx), tol);
        std::vector<Mat> basis;
        for (const auto& a : basis_a)
          for (const auto& u : matrix_units(2)) basis.push_back(kron(a, u));
        c.add("Ad_U R_2 Ad_U* = Ad_{1 x sx} R_2",
              max_over(basis, [&](const Mat& x) -> Mat { return U * r2.real(U.adjoint() * x * U) * U.adjoint(); },
                       [&](const Mat& x) -> Mat { return sx * r2.real(x) * sx; }),
              tol);
      }
    }
  }

  {  // psi_e = Ad_{W^dagger} with W = [V_+, e V_+].
    IsoCertificate& c = rep.psi_reduced;
    c.source = "(A, Ad_Gamma)";
    const Mat Vp = grading_eigenspace(G, true);
    const int k = static_cast<int>(Vp.cols());
    rep.plus_dimension = k;
    c.target = "M_2(A_{++}), A_{++} = M_" + std::to_string(k);
    if (2 * k != n) throw PreconditionError("morita_psi_e: grading is not balanced");
    Mat W(n, n);
    W << Vp, e * Vp;
    rep.W = W;
    c.add("W unitary", unitarity_residual(W), tol);
    c.add("psi_e gamma = st psi_e", dist(W.adjoint() * G * W, kron(Z, eye(k))), tol);
    if (algebra.has_real()) {
      const Mat& T = *algebra.theta;
      const Mat induced = W.adjoint() * T * W.conjugate();
      Mat expected;
      if (reality > 0) {
        const Mat tpp = Vp.adjoint() * T * Vp.conjugate();
        c.add("R preserves A_{++}", unitarity_residual(tpp), tol);
        expected = kron(I2, tpp);
        rep.real_subalgebra = "M_" + std::to_string(k) + "(C)^{R_{++}} (x) Cl_{1,1}";
      } else {
        const Mat te = e * T;
        c.add("Gamma real for Ad_e R", dist(te * G.conjugate() * te.adjoint(), G), tol);
        const Mat tpp = Vp.adjoint() * te * Vp.conjugate();
        c.add("Ad_e R preserves A_{++}", unitarity_residual(tpp), tol);
        expected = kron(X, tpp);
        rep.real_subalgebra = "M_" + std::to_string(k) + "(C)^{(Ad_e R)_{++}} (x) Cl_{2,0}";
      }
      const auto basis = matrix_units(n);
      c.add(reality > 0 ? "psi_e R psi_e^-1 = R_{++,2}" : "psi_e R psi_e^-1 = Ad_sx (Ad_e R)_{++,2}",
            max_over(basis, [&](const Mat& x) -> Mat { return induced * x.conjugate() * induced.adjoint(); },
                     [&](const Mat& x) -> Mat { return expected * x.conjugate() * expected.adjoint(); }),
            tol);
    }
  }
  return rep;
}

IsoCertificate certify_inner_grading_rule(const CliffordRep& left, const CliffordRep& right,
                                          bool swap_rule, double tol) {
  if (!left.theta || !right.theta)
    throw PreconditionError("certify_inner_grading_rule: both factors need real structures");
  const Mat& G1 = left.grading;
  const Mat& T1 = *left.theta;
  const int reality = coerce_sign(T1 * G1.conjugate() * T1.adjoint() * G1, "R(Gamma) Gamma");
  bool imaginary = reality < 0;
  if (swap_rule) imaginary = !imaginary;
  const Mat T2 = imaginary ? Mat(*right.theta * right.grading.conjugate()) : *right.theta;
  const GradedRealAlgebra prod =
      GradedRealAlgebra::full(left.dim() * right.dim(), kron(G1, right.grading), kron(T1, T2));

  IsoCertificate c;
  c.source = left.label() + " (x)^ " + right.label();
  c.target = std::string("matrix tensor with ") + (imaginary ? "R1 (x) R2 gamma2" : "R1 (x) R2");

  const auto m1 = monomials(left.gens, left.dim());
  const auto m2 = monomials(right.gens, right.dim());
  auto degree = [](std::size_t mask) { return std::popcount(mask) % 2; };
  auto embed = [&](std::size_t i, std::size_t j) -> Mat {
    return kron(degree(j) ? Mat(m1[i] * G1) : m1[i], m2[j]);
  };
  double real_res = 0.0, koszul_res = 0.0;
  for (std::size_t i = 0; i < m1.size(); ++i)
    for (std::size_t j = 0; j < m2.size(); ++j) {
      const Mat x = embed(i, j);
      real_res = std::max(real_res, dist(prod.real(x), x));
      for (std::size_t i2 = 0; i2 < m1.size(); ++i2)
        for (std::size_t j2 = 0; j2 < m2.size(); ++j2) {
          const double sign = (degree(i2) && degree(j)) ? -1.0 : 1.0;
          const Mat lhs = x * embed(i2, j2);
          const Mat rhs = sign * kron(degree(j ^ j2) ? Mat(m1[i] * m1[i2] * G1) : Mat(m1[i] * m1[i2]),
                                      m2[j] * m2[j2]);
          koszul_res = std::max(koszul_res, dist(lhs, rhs));
        }
    }
  c.add("real structure intertwined", real_res, tol);
  c.add("Koszul multiplicativity", koszul_res, tol);
  return c;
}

}  // namespace tenfold
