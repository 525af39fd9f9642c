#pragma once
// Dense complex matrix helpers shared by every module.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tenfold {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kTolAlg = 1e-10;
inline constexpr double kTolGap = 1e-8;
inline constexpr double kTolSign = 1e-8;

// Thrown when an input violates an operation's precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace pauli {
Mat id2();
Mat x();
Mat y();
Mat z();
}  // namespace pauli

Mat eye(int n);
Mat kron(const Mat& a, const Mat& b);
Mat kron(std::initializer_list<Mat> factors);
Mat direct_sum(const Mat& a, const Mat& b);
Mat dag(const Mat& a);

// Frobenius norm of a - b.
double dist(const Mat& a, const Mat& b);

double unitarity_residual(const Mat& u);
double hermiticity_residual(const Mat& h);

// Returns +1 or -1 when m is within tol of that multiple of the identity.
// Anything else is an error: the sign is never guessed.
int coerce_sign(const Mat& m, const std::string& what, double tol = kTolSign);

// If m is within tol of c*1 for some scalar c, returns true and stores c.
bool scalar_value(const Mat& m, cplx& c, double tol = kTolSign);

// Incrementally grown orthonormal basis of a subspace of M_n (vectorized).
class SpanBuilder {
 public:
  explicit SpanBuilder(int n, double tol = 1e-9) : n_(n), tol_(tol) {}
  bool add(const Mat& m);
  int rank() const { return static_cast<int>(basis_.size()); }
  bool contains(const Mat& m) const;

 private:
  Vec residual(const Mat& m) const;
  int n_;
  double tol_;
  std::vector<Vec> basis_;
};

// All 2^k ordered products of subsets of gens (lowest index first).
std::vector<Mat> monomials(const std::vector<Mat>& gens, int n);

// Complex dimension of the unital algebra generated by gens inside M_n.
int generated_algebra_dimension(const std::vector<Mat>& gens, int n);

// Spectral decomposition of a normal matrix via complex Schur form.
struct NormalEig {
  Mat vectors;   // unitary
  Vec values;
};
NormalEig normal_eig(const Mat& u);

// sgn(h) for a Hermitian matrix; min |eigenvalue| is written to min_abs_eig.
Mat hermitian_sign(const Mat& h, double* min_abs_eig = nullptr);

// Orthonormal basis of the +1 (plus) or -1 eigenspace of a grading operator.
// Diagonal operators use standard basis vectors in index order.
Mat grading_eigenspace(const Mat& gamma, bool plus);

// Haar-random unitary from a seeded engine.
Mat random_unitary(int n, std::mt19937_64& rng);

// Pfaffian of a complex antisymmetric matrix (Parlett-Reid elimination).
cplx pfaffian(Mat a);

}  // namespace tenfold
