#include "tenfold/invariants.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>

namespace tenfold {

namespace {

constexpr double kPi = std::numbers::pi;

std::string where(const Momentum& k) {
  std::string s = "k = (";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? ", " : "") + std::to_string(k[i]);
  return s + ")";
}

// Eigenvectors of the negative eigenvalues; updates the running gap minimum.
Mat occupied_frame(const BlochModel& model, const Momentum& k, double tol_gap, double& gap) {
  Eigen::SelfAdjointEigenSolver<Mat> es(evaluate(model, k));
  const auto& ev = es.eigenvalues();
  const double g = ev.cwiseAbs().minCoeff();
  if (g <= tol_gap) throw GapError(where(k), g);
  gap = std::min(gap, g);
  int occ = 0;
  while (occ < ev.size() && ev(occ) < 0) ++occ;
  return es.eigenvectors().leftCols(occ);
}

// Wrap into (-pi, pi].
double wrap(double a) {
  a = std::remainder(a, 2 * kPi);
  return a <= -kPi ? a + 2 * kPi : a;
}

cplx unit_det(const Mat& overlap) {
  const cplx d = overlap.determinant();
  if (std::abs(d) < 1e-12) throw InvariantError("degenerate overlap between neighbouring frames; grid too coarse");
  return d / std::abs(d);
}

// Rotates `next` so that prev^dagger next is positive (parallel transport).
Mat transport(const Mat& prev, const Mat& next) {
  const Mat o = prev.adjoint() * next;
  Eigen::JacobiSVD<Mat> svd(o, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues().minCoeff() < 1e-8) throw InvariantError("parallel transport failed; grid too coarse");
  return next * svd.matrixV() * svd.matrixU().adjoint();
}

// u^t for a unitary u, principal branch of the logarithm.
Mat unitary_power(const Mat& u, double t) {
  const NormalEig e = normal_eig(u);
  Vec d(e.values.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::polar(1.0, t * std::arg(e.values(i)));
  return e.vectors * d.asDiagonal() * e.vectors.adjoint();
}

}  // namespace

double winding_raw(const BlochModel& model, const Mat& chiral, int grid, std::optional<Mat> basepoint,
                   double tol_gap) {
  if (model.d() != 1) throw PreconditionError("winding_number: model must be one-dimensional");
  if (grid < 2) throw PreconditionError("winding_number: grid must be at least 2");
  const GradedRealAlgebra alg = GradedRealAlgebra::full(model.N(), chiral);
  const Mat e = basepoint ? *basepoint : default_basepoint(chiral);
  make_osu(GradedRealAlgebra::full(model.N(), chiral), e);
  std::vector<cplx> dets;
  dets.reserve(grid);
  for (int j = 0; j < grid; ++j) {
    const Momentum k{static_cast<double>(j) / grid};
    const Mat x = flatten(evaluate(model, k), tol_gap, where(k));
    dets.push_back(q_map(alg, x, e).determinant());
  }
  double total = 0.0;
  for (int j = 0; j < grid; ++j) total += wrap(std::arg(dets[(j + 1) % grid] / dets[j]));
  // q = exp(-2 pi i k) counts as +1.
  return -total / (2 * kPi);
}

InvariantReport winding_number(const BlochModel& model, const Mat& chiral, int grid, std::optional<Mat> basepoint,
                               double tol_gap) {
  InvariantReport rep;
  rep.kind = "winding";
  rep.grid = grid;
  const double raw = winding_raw(model, chiral, grid, basepoint, tol_gap);
  rep.value = static_cast<int>(std::lround(raw));
  rep.rounding_residual = std::abs(raw - rep.value);
  if (rep.rounding_residual > 0.1)
    throw InvariantError("winding: rounding residual " + std::to_string(rep.rounding_residual));
  rep.check_grid = 2 * grid;
  rep.check_value = static_cast<int>(std::lround(winding_raw(model, chiral, 2 * grid, basepoint, tol_gap)));
  rep.gap = gap(model, grid).gap;
  return rep;
}

namespace {

struct ChernRun {
  double value = 0.0;
  double gap = std::numeric_limits<double>::infinity();
};

ChernRun chern_run(const BlochModel& model, int grid, double tol_gap) {
  if (model.d() != 2) throw PreconditionError("chern_number: model must be two-dimensional");
  if (grid < 2) throw PreconditionError("chern_number: grid must be at least 2");
  ChernRun run;
  std::vector<Mat> frames(static_cast<std::size_t>(grid) * grid);
  auto at = [&](int i, int j) -> const Mat& { return frames[((i % grid) * grid) + (j % grid)]; };
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      frames[i * grid + j] =
          occupied_frame(model, {static_cast<double>(i) / grid, static_cast<double>(j) / grid}, tol_gap, run.gap);
  const Eigen::Index occ = frames.front().cols();
  for (const auto& f : frames)
    if (f.cols() != occ) throw InvariantError("chern_number: number of occupied bands changes across the grid");
  if (occ == 0) return run;
  double total = 0.0;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const cplx u1 = unit_det(at(i, j).adjoint() * at(i + 1, j));
      const cplx u2 = unit_det(at(i + 1, j).adjoint() * at(i + 1, j + 1));
      const cplx u3 = unit_det(at(i, j + 1).adjoint() * at(i + 1, j + 1));
      const cplx u4 = unit_det(at(i, j).adjoint() * at(i, j + 1));
      total += std::arg(u1 * u2 / (u3 * u4));
    }
  run.value = -total / (2 * kPi);
  return run;
}

}  // namespace

double chern_raw(const BlochModel& model, int grid, double tol_gap) { return chern_run(model, grid, tol_gap).value; }

InvariantReport chern_number(const BlochModel& model, int grid, double tol_gap) {
  InvariantReport rep;
  rep.kind = "chern";
  ChernRun run = chern_run(model, grid, tol_gap);
  double residual = std::abs(run.value - std::round(run.value));
  if (residual > 1e-6) {
    grid *= 2;
    rep.retried = true;
    run = chern_run(model, grid, tol_gap);
    residual = std::abs(run.value - std::round(run.value));
    if (residual > 1e-6) throw InvariantError("chern_number: non-integer total " + std::to_string(run.value));
  }
  rep.grid = grid;
  rep.value = static_cast<int>(std::lround(run.value));
  rep.rounding_residual = residual;
  rep.gap = run.gap;
  rep.check_grid = 2 * grid;
  rep.check_value = static_cast<int>(std::lround(chern_raw(model, 2 * grid, tol_gap)));
  return rep;
}

int z2_single(const BlochModel& model, const Mat& trs, int grid, double tol_gap, double* gap_out) {
  if (model.d() != 2) throw PreconditionError("z2_invariant: model must be two-dimensional");
  if (grid < 4 || grid % 2 != 0) throw PreconditionError("z2_invariant: grid must be even and at least 4");
  if (coerce_sign(trs * trs.conjugate(), "time reversal parity") != -1)
    throw PreconditionError("z2_invariant: time reversal must be odd");
  const int nx = grid;
  const int ny = grid / 2;  // steps from k_y = 0 to k_y = 1/2
  double gap_min = std::numeric_limits<double>::infinity();
  auto kpt = [&](int i, int l) { return Momentum{static_cast<double>(i) / nx, 0.5 * l / ny}; };

  // Smooth periodic gauge on the line k_y = 0.
  std::vector<Mat> base(nx);
  base[0] = occupied_frame(model, kpt(0, 0), tol_gap, gap_min);
  const Eigen::Index occ = base[0].cols();
  if (occ == 0 || occ % 2 != 0) throw InvariantError("z2_invariant: needs an even, non-zero number of occupied bands");
  for (int i = 1; i < nx; ++i) base[i] = transport(base[i - 1], occupied_frame(model, kpt(i, 0), tol_gap, gap_min));
  const Mat closing = transport(base[nx - 1], base[0]);
  const Mat wilson = base[0].adjoint() * closing;
  for (int i = 1; i < nx; ++i) base[i] = base[i] * unitary_power(wilson, -static_cast<double>(i) / nx);

  // Transport each column up to k_y = 1/2, keeping rows 0 and ny.
  std::vector<Mat> top(nx);
  for (int i = 0; i < nx; ++i) {
    Mat f = base[i];
    for (int l = 1; l <= ny; ++l) {
      Mat next = occupied_frame(model, kpt(i, l), tol_gap, gap_min);
      if (next.cols() != occ) throw InvariantError("z2_invariant: occupied band count changes");
      f = transport(f, next);
    }
    top[i] = f;
  }

  int sign = 1;
  for (const std::vector<Mat>* line : {&base, &top}) {
    const auto& frames = *line;
    auto sewing = [&](int i) -> Mat {
      return frames[(nx - i) % nx].adjoint() * trs * frames[i].conjugate();
    };
    cplx root = 0.0;
    for (int i = 0; i <= nx / 2; ++i) {
      const Mat w = sewing(i);
      if (unitarity_residual(w) > 1e-6) throw InvariantError("z2_invariant: sewing matrix is not unitary");
      const cplx det = w.determinant();
      if (i == 0) {
        root = std::sqrt(det);
      } else {
        const cplx candidate = std::sqrt(det);
        // Continue the square root along the line.
        const cplx next = std::abs(candidate - root) <= std::abs(candidate + root) ? candidate : -candidate;
        if (std::abs(next - root) > 0.5)
          throw InvariantError("z2_invariant: square-root branch ambiguous; grid too coarse");
        root = next;
      }
      if (i == 0 || i == nx / 2) {
        if ((w + w.transpose()).norm() > 1e-6) throw InvariantError("z2_invariant: sewing matrix not antisymmetric");
        const cplx delta = pfaffian(w) / root;
        if (std::abs(std::abs(delta.real()) - 1.0) > 1e-3 || std::abs(delta.imag()) > 1e-3)
          throw InvariantError("z2_invariant: Pfaffian branch ambiguous");
        sign *= delta.real() > 0 ? 1 : -1;
      }
    }
  }
  if (gap_out) *gap_out = gap_min;
  return sign > 0 ? 0 : 1;
}

InvariantReport z2_invariant(const BlochModel& model, const Mat& trs, int grid, double tol_gap) {
  InvariantReport rep;
  rep.kind = "z2";
  rep.grid = grid;
  rep.value = z2_single(model, trs, grid, tol_gap, &rep.gap);
  rep.check_grid = 2 * grid;
  rep.check_value = z2_single(model, trs, 2 * grid, tol_gap);
  return rep;
}

BlochModel block_model(const BlochModel& model, const Mat& v, double tol) {
  if (v.rows() != model.N()) throw PreconditionError("block_model: basis has the wrong size");
  BlochModel out(model.name() + "_block", model.d(), static_cast<int>(v.cols()));
  const Mat leak = eye(model.N()) - v * v.adjoint();
  for (const auto& [n, t] : model.hoppings()) {
    if ((leak * t * v).norm() > tol) throw PreconditionError("block_model: subspace is not invariant");
    Lattice neg(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
    if (neg <= n) out.add_hopping(n, v.adjoint() * t * v);
  }
  return out;
}

SpinChernReport spin_chern(const BlochModel& model, const Mat& s_z, int grid, double tol_gap) {
  SpinChernReport rep;
  rep.chern_up = chern_number(block_model(model, grading_eigenspace(s_z, true)), grid, tol_gap).value;
  rep.chern_down = chern_number(block_model(model, grading_eigenspace(s_z, false)), grid, tol_gap).value;
  return rep;
}

DoublingReport mod2_doubling_check(const ModelWithSymmetries& model, std::optional<Mat> s_z, int grid) {
  if (!model.symmetries.trs) throw PreconditionError("mod2_doubling_check: model carries no time reversal");
  const ModelWithSymmetries doubled = direct_sum(model, model);
  DoublingReport rep;
  rep.z2_single = z2_single(model.model, *model.symmetries.trs, grid);
  rep.z2_doubled = z2_single(doubled.model, *doubled.symmetries.trs, grid);
  rep.chern_single = chern_number(model.model).value;
  rep.chern_doubled = chern_number(doubled.model).value;
  if (s_z) {
    rep.spin_chern_single = spin_chern(model.model, *s_z).spin_chern();
    rep.spin_chern_doubled = spin_chern(doubled.model, direct_sum(*s_z, *s_z)).spin_chern();
  }
  return rep;
}

}  // namespace tenfold
