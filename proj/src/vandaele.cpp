#include "tenfold/vandaele.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace tenfold {

OSU make_osu(const GradedRealAlgebra& algebra, const Mat& x, double tol) {
  if (x.rows() != algebra.n || x.cols() != algebra.n)
    throw PreconditionError("OSU: size does not match the algebra");
  OSU o{x, algebra, {}};
  o.checks.push_back({"self-adjoint", hermiticity_residual(x), tol});
  o.checks.push_back({"involution", dist(x * x, eye(algebra.n)), tol});
  o.checks.push_back({"odd", (algebra.grade(x) + x).norm(), tol});
  if (algebra.has_real()) o.checks.push_back({"real", dist(algebra.real(x), x), tol});
  for (const auto& c : o.checks)
    if (!c.passed()) throw PreconditionError("OSU check failed: " + c.name);
  return o;
}

Mat flatten(const Mat& h, double tol_gap, const std::string& where) {
  double gap = 0.0;
  Mat s = hermitian_sign(h, &gap);
  if (gap <= tol_gap) throw GapError(where, gap);
  return s;
}

double linear_path_gap(const Mat& h, int samples) {
  const Mat s = hermitian_sign(h);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= samples; ++i) {
    const double t = static_cast<double>(i) / samples;
    Eigen::SelfAdjointEigenSolver<Mat> es((1 - t) * h + t * s, Eigen::EigenvaluesOnly);
    worst = std::min(worst, es.eigenvalues().cwiseAbs().minCoeff());
  }
  return worst;
}

HomotopyWitness rotation_homotopy(const OSU& e1, const OSU& e2, int samples, double tol) {
  const Mat anti = e1.x * e2.x + e2.x * e1.x;
  if (anti.norm() > tol)
    throw PreconditionError("rotation_homotopy: anticommutator residual " + std::to_string(anti.norm()));
  HomotopyWitness w;
  w.samples = samples;
  w.start = e1.x;
  w.quarter = e2.x;
  w.end = -e1.x;
  const GradedRealAlgebra& alg = e1.algebra;
  const Mat one = eye(alg.n);
  for (int i = 0; i <= samples; ++i) {
    const double t = std::numbers::pi * i / samples;
    const Mat x = std::cos(t) * e1.x + std::sin(t) * e2.x;
    double r = std::max({hermiticity_residual(x), dist(x * x, one), (alg.grade(x) + x).norm()});
    if (alg.has_real()) r = std::max(r, dist(alg.real(x), x));
    w.max_residual = std::max(w.max_residual, r);
  }
  return w;
}

Mat q_map(const GradedRealAlgebra& algebra, const Mat& h, const Mat& e, double tol) {
  if (!algebra.grading) throw PreconditionError("q_map: algebra needs an inner grading");
  const Mat vp = grading_eigenspace(*algebra.grading, true);
  const Mat q = vp.adjoint() * e * h * vp;
  if (unitarity_residual(q) > tol)
    throw PreconditionError("q_map: compression is not unitary (h not odd or not flat)");
  return q;
}

Mat default_basepoint(const Mat& gamma) {
  const Mat vp = grading_eigenspace(gamma, true);
  const Mat vm = grading_eigenspace(gamma, false);
  if (vp.cols() != vm.cols()) throw PreconditionError("default_basepoint: grading not balanced");
  return vp * vm.adjoint() + vm * vp.adjoint();
}

BLRepresentative bl_representative(int degree, const Mat& u, const GradedRealAlgebra& algebra,
                                   double tol) {
  if (!algebra.has_real()) throw PreconditionError("bl_representative: algebra carries no R");
  degree = ((degree % 8) + 8) % 8;
  const int n = algebra.n;
  const int size = static_cast<int>(u.rows());
  if (u.cols() != size || size % n != 0)
    throw PreconditionError("bl_representative: element is not a matrix over the algebra");
  const int blocks = size / n;
  const bool quaternionic = degree >= 4 && degree <= 6;
  if (quaternionic && blocks % 2 != 0)
    throw PreconditionError("bl_representative: degrees 4-6 need an even number of blocks");

  const Mat theta = quaternionic ? kron({eye(blocks / 2), pauli::y(), *algebra.theta})
                                 : kron(eye(blocks), *algebra.theta);
  auto R = [&](const Mat& a) -> Mat { return theta * a.conjugate() * theta.adjoint(); };

  BLRepresentative rep;
  rep.degree = degree;
  rep.element = u;
  if (unitarity_residual(u) > tol) throw PreconditionError("bl_representative: element is not unitary");
  const bool self_adjoint_kind = degree % 2 == 0;
  if (self_adjoint_kind && hermiticity_residual(u) > tol)
    throw PreconditionError("bl_representative: degree " + std::to_string(degree) +
                            " needs a self-adjoint unitary");
  switch (degree) {
    case 0: rep.condition = "R(u) = u"; rep.residual = dist(R(u), u); break;
    case 1: rep.condition = "R(U) = U"; rep.residual = dist(R(u), u); break;
    case 2: rep.condition = "R(u) = -u"; rep.residual = dist(R(u), -u); break;
    case 3: rep.condition = "R(U) = -U*"; rep.residual = dist(R(u), -u.adjoint()); break;
    case 4: rep.condition = "R^h(u) = u"; rep.residual = dist(R(u), u); break;
    case 5: rep.condition = "R^h(U) = U"; rep.residual = dist(R(u), u); break;
    case 6: rep.condition = "R^h(u) = -u"; rep.residual = dist(R(u), -u); break;
    default: rep.condition = "R(U) = U*"; rep.residual = dist(R(u), u.adjoint()); break;
  }
  if (rep.residual > tol)
    throw PreconditionError("bl_representative: condition " + rep.condition + " fails");
  return rep;
}

}  // namespace tenfold
