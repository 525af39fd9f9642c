#include "tenfold/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace tenfold {

namespace pauli {
Mat id2() { return Mat::Identity(2, 2); }
Mat x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
Mat y() {
  Mat m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}
Mat z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

Mat eye(int n) { return Mat::Identity(n, n); }

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron(std::initializer_list<Mat> factors) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Mat dag(const Mat& a) { return a.adjoint(); }

double dist(const Mat& a, const Mat& b) { return (a - b).norm(); }

double unitarity_residual(const Mat& u) {
  return (u.adjoint() * u - Mat::Identity(u.cols(), u.cols())).norm();
}

double hermiticity_residual(const Mat& h) { return (h - h.adjoint()).norm(); }

int coerce_sign(const Mat& m, const std::string& what, double tol) {
  const Mat one = Mat::Identity(m.rows(), m.cols());
  const bool plus = (m - one).norm() < tol;
  const bool minus = (m + one).norm() < tol;
  if (plus == minus)
    throw PreconditionError(what + " is not a scalar sign +-1");
  return plus ? 1 : -1;
}

bool scalar_value(const Mat& m, cplx& c, double tol) {
  if (m.rows() == 0) return false;
  c = m.trace() / static_cast<double>(m.rows());
  return (m - c * Mat::Identity(m.rows(), m.cols())).norm() < tol;
}

Vec SpanBuilder::residual(const Mat& m) const {
  Vec v = Eigen::Map<const Vec>(m.data(), m.size());
  for (const auto& b : basis_) v -= b * b.dot(v);
  // second pass keeps the basis orthonormal to working precision
  for (const auto& b : basis_) v -= b * b.dot(v);
  return v;
}

bool SpanBuilder::add(const Mat& m) {
  if (m.rows() != n_ || m.cols() != n_)
    throw PreconditionError("SpanBuilder: matrix size mismatch");
  const double scale = std::max(1.0, m.norm());
  Vec v = residual(m);
  const double r = v.norm();
  if (r <= tol_ * scale) return false;
  basis_.push_back(v / r);
  return true;
}

bool SpanBuilder::contains(const Mat& m) const {
  const double scale = std::max(1.0, m.norm());
  return residual(m).norm() <= tol_ * scale;
}

std::vector<Mat> monomials(const std::vector<Mat>& gens, int n) {
  const std::size_t k = gens.size();
  std::vector<Mat> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Mat m = Mat::Identity(n, n);
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) m = m * gens[i];
    out.push_back(std::move(m));
  }
  return out;
}

int generated_algebra_dimension(const std::vector<Mat>& gens, int n) {
  SpanBuilder span(n);
  std::vector<Mat> frontier{Mat::Identity(n, n)};
  span.add(frontier.front());
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& b : frontier)
      for (const auto& g : gens) {
        Mat p = b * g;
        if (span.add(p)) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return span.rank();
}

NormalEig normal_eig(const Mat& u) {
  Eigen::ComplexSchur<Mat> schur(u);
  NormalEig out;
  out.vectors = schur.matrixU();
  out.values = schur.matrixT().diagonal();
  return out;
}

Mat hermitian_sign(const Mat& h, double* min_abs_eig) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const auto& ev = es.eigenvalues();
  double gap = std::numeric_limits<double>::infinity();
  Eigen::VectorXd s(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    gap = std::min(gap, std::abs(ev(i)));
    s(i) = ev(i) >= 0 ? 1.0 : -1.0;
  }
  if (min_abs_eig) *min_abs_eig = gap;
  const Mat& v = es.eigenvectors();
  return v * s.cast<cplx>().asDiagonal() * v.adjoint();
}

Mat grading_eigenspace(const Mat& gamma, bool plus) {
  const Eigen::Index n = gamma.rows();
  Mat diag_part = gamma.diagonal().asDiagonal();
  std::vector<Vec> cols;
  if ((gamma - diag_part).norm() < kTolAlg) {
    for (Eigen::Index i = 0; i < n; ++i)
      if ((gamma(i, i).real() > 0) == plus) cols.push_back(Vec::Unit(n, i));
  } else {
    Eigen::SelfAdjointEigenSolver<Mat> es(gamma);
    for (Eigen::Index i = 0; i < n; ++i)
      if ((es.eigenvalues()(i) > 0) == plus) cols.push_back(es.eigenvectors().col(i));
  }
  Mat v(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) v.col(j) = cols[j];
  return v;
}

Mat random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const cplx d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

cplx pfaffian(Mat a) {
  const Eigen::Index n = a.rows();
  if (n % 2 == 1) return 0.0;
  cplx pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = k + 1;
    double best = std::abs(a(k + 1, k));
    for (Eigen::Index i = k + 2; i < n; ++i)
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        kp = i;
      }
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == cplx(0.0)) return 0.0;
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index m = n - k - 2;
      Vec tau = a.row(k).segment(k + 2, m).transpose() / a(k, k + 1);
      Vec col = a.col(k + 1).segment(k + 2, m);
      a.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

}  // namespace tenfold
