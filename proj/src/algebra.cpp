#include "tenfold/algebra.hpp"

#include <algorithm>

namespace tenfold {

GradedRealAlgebra GradedRealAlgebra::full(int n, std::optional<Mat> grading,
                                          std::optional<Mat> theta) {
  GradedRealAlgebra a;
  a.n = n;
  a.grading = std::move(grading);
  a.theta = std::move(theta);
  return a;
}

Mat GradedRealAlgebra::gamma_op() const { return grading ? *grading : eye(n); }

bool GradedRealAlgebra::is_reference() const {
  return theta && dist(*theta, eye(n)) < kTolAlg;
}

Mat GradedRealAlgebra::grade(const Mat& a) const {
  if (!grading) return a;
  return (*grading) * a * (*grading);
}

Mat GradedRealAlgebra::real(const Mat& a) const {
  if (!theta) throw PreconditionError("algebra carries no real structure");
  return (*theta) * a.conjugate() * theta->adjoint();
}

Mat GradedRealAlgebra::real_star(const Mat& a) const { return real(a.adjoint()); }

std::vector<Mat> GradedRealAlgebra::spanning_set() const {
  std::vector<Mat> out;
  if (generators.empty()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mat e = Mat::Zero(n, n);
        e(i, j) = 1.0;
        out.push_back(std::move(e));
      }
    return out;
  }
  SpanBuilder span(n);
  std::vector<Mat> frontier{eye(n)};
  span.add(frontier.front());
  out.push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& b : frontier)
      for (const auto& g : generators) {
        Mat p = b * g;
        if (span.add(p)) {
          out.push_back(p);
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return out;
}

int GradedRealAlgebra::dimension() const {
  if (generators.empty()) return n * n;
  return generated_algebra_dimension(generators, n);
}

void GradedRealAlgebra::validate(double tol) const {
  if (grading) {
    const Mat& g = *grading;
    if (g.rows() != n || hermiticity_residual(g) > tol || dist(g * g, eye(n)) > tol)
      throw PreconditionError("grading operator must be a self-adjoint unitary");
  }
  if (theta) {
    const Mat& t = *theta;
    if (t.rows() != n || unitarity_residual(t) > tol)
      throw PreconditionError("real structure generator must be unitary");
    coerce_sign(t * t.conjugate(), "Theta conj(Theta)");
    if (grading) {
      const Mat& g = *grading;
      const Mat h = g * t * g;
      if (dist(h, t) > tol && dist(h, -t) > tol)
        throw PreconditionError("real structure does not commute with the grading");
    }
  }
}

bool IsoCertificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

double IsoCertificate::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks)
    if (c.tolerance < 0.5) m = std::max(m, c.residual);
  return m;
}

std::vector<std::string> IsoCertificate::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed()) out.push_back(c.name);
  return out;
}

void IsoCertificate::add(std::string name, double residual, double tol) {
  checks.push_back({std::move(name), residual, tol});
}

void IsoCertificate::add_count(std::string name, int got, int expected) {
  checks.push_back({std::move(name) + " (" + std::to_string(got) + " vs " +
                        std::to_string(expected) + ")",
                    static_cast<double>(std::abs(got - expected)), 0.5});
}

}  // namespace tenfold
