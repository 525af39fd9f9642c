#include "tenfold/models.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <numbers>

namespace tenfold {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Lattice negate(const Lattice& n) {
  Lattice m(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) m[i] = -n[i];
  return m;
}

bool is_zero(const Lattice& n) {
  for (int c : n)
    if (c != 0) return false;
  return true;
}

Mat unit(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

Momentum reversed(const Momentum& k) {
  Momentum m(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) m[i] = -k[i];
  return m;
}

}  // namespace

BlochModel::BlochModel(std::string name, int d, int N) : name_(std::move(name)), d_(d), N_(N) {
  if (d < 0 || N <= 0) throw PreconditionError("BlochModel: need d >= 0 and N > 0");
}

void BlochModel::add_hopping(const Lattice& n, const Mat& t) {
  if (static_cast<int>(n.size()) != d_) throw PreconditionError("add_hopping: lattice vector has wrong length");
  if (t.rows() != N_ || t.cols() != N_) throw PreconditionError("add_hopping: matrix has wrong size");
  auto slot = [&](const Lattice& key) -> Mat& {
    auto it = hops_.find(key);
    if (it == hops_.end()) it = hops_.emplace(key, Mat::Zero(N_, N_)).first;
    return it->second;
  };
  if (is_zero(n)) {
    if (hermiticity_residual(t) > kTolAlg) throw PreconditionError("add_hopping: on-site term is not Hermitian");
    slot(n) += 0.5 * (t + t.adjoint());
    return;
  }
  slot(n) += t;
  slot(negate(n)) += t.adjoint();
}

int BlochModel::support_radius() const {
  int r = 0;
  for (const auto& [n, t] : hops_)
    for (int c : n) r = std::max(r, std::abs(c));
  return r;
}

Mat evaluate(const BlochModel& model, const Momentum& k) {
  if (static_cast<int>(k.size()) != model.d()) throw PreconditionError("evaluate: momentum has wrong dimension");
  Mat h = Mat::Zero(model.N(), model.N());
  for (const auto& [n, t] : model.hoppings()) {
    double phase = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) phase += n[i] * k[i];
    h += std::polar(1.0, kTwoPi * phase) * t;
  }
  return h;
}

std::vector<Momentum> grid_points(int d, int grid) {
  if (grid < 1) throw PreconditionError("grid_points: grid must be positive");
  std::vector<Momentum> out;
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(grid);
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Momentum k(d);
    std::size_t rest = idx;
    for (int i = d - 1; i >= 0; --i) {
      k[i] = static_cast<double>(rest % grid) / grid;
      rest /= grid;
    }
    out.push_back(std::move(k));
  }
  return out;
}

GapResult gap(const BlochModel& model, int grid) {
  if (grid < 2 && model.d() > 0) throw PreconditionError("gap: grid must be at least 2");
  GapResult best{std::numeric_limits<double>::infinity(), {}};
  for (const auto& k : grid_points(model.d(), grid)) {
    Eigen::SelfAdjointEigenSolver<Mat> es(evaluate(model, k), Eigen::EigenvaluesOnly);
    const double g = es.eigenvalues().cwiseAbs().minCoeff();
    if (g < best.gap) best = {g, k};
  }
  return best;
}

ModelWithSymmetries build_ssh(double v, double w) {
  BlochModel m("ssh", 1, 2);
  m.add_hopping({0}, v * pauli::x());
  m.add_hopping({1}, w * unit(2, 0, 1));
  m.parameters = {{"v", v}, {"w", w}};
  m.notes["convention"] = "h12(k) = v + w exp(2 pi i k)";
  SymmetrySpec s;
  s.chiral = pauli::z();
  return {std::move(m), std::move(s)};
}

ModelWithSymmetries build_qwz(double mass) {
  BlochModel m("qwz", 2, 2);
  const cplx i(0, 1);
  m.add_hopping({0, 0}, mass * pauli::z());
  // sin(2 pi k) = (e^{+} - e^{-}) / 2i and cos(2 pi k) = (e^{+} + e^{-}) / 2
  m.add_hopping({1, 0}, pauli::x() / (2.0 * i) + 0.5 * pauli::z());
  m.add_hopping({0, 1}, pauli::y() / (2.0 * i) + 0.5 * pauli::z());
  m.parameters = {{"m", mass}};
  return {std::move(m), {}};
}

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Honeycomb geometry: a1 = (1, 0), a2 = (1/2, sqrt3/2), A at the origin and
// B at (a1 + a2)/3. Nearest B neighbours of A sit in cells 0, -a1, -a2.
const std::vector<Lattice> kNearestCells{{0, 0}, {-1, 0}, {0, -1}};
// Second-neighbour vectors circulating counter-clockwise.
const std::vector<Lattice> kSecondCells{{1, 0}, {-1, 1}, {0, -1}};

// A directed bond term: inside the unit cell the reverse bond is added too.
void add_bond(BlochModel& m, const Lattice& n, const Mat& t) {
  m.add_hopping(n, is_zero(n) ? Mat(t + t.adjoint()) : t);
}

std::array<double, 2> cartesian(const Lattice& n) {
  return {n[0] + 0.5 * n[1], 0.5 * kSqrt3 * n[1]};
}

// Unit vector from A in cell 0 to B in cell n.
std::array<double, 2> bond_direction(const Lattice& n) {
  auto r = cartesian(n);
  r[0] += 0.5;
  r[1] += kSqrt3 / 6.0;
  const double len = std::hypot(r[0], r[1]);
  return {r[0] / len, r[1] / len};
}

void add_haldane_terms(BlochModel& m, const Mat& block, double t1, double t2, double phi, double mass) {
  const cplx i(0, 1);
  for (const auto& n : kNearestCells) add_bond(m, n, kron(block, t1 * unit(2, 0, 1)));
  Mat second = Mat::Zero(2, 2);
  second(0, 0) = t2 * std::exp(i * phi);
  second(1, 1) = t2 * std::exp(-i * phi);
  for (const auto& n : kSecondCells) m.add_hopping(n, kron(block, second));
  m.add_hopping({0, 0}, kron(block, mass * pauli::z()));
}

void record_honeycomb(BlochModel& m) {
  m.notes["a1"] = "(1, 0)";
  m.notes["a2"] = "(1/2, sqrt(3)/2)";
  m.notes["sites"] = "A at 0, B at (a1 + a2)/3";
}

}  // namespace

ModelWithSymmetries build_haldane(double t1, double t2, double phi, double mass) {
  BlochModel m("haldane", 2, 2);
  add_haldane_terms(m, eye(1), t1, t2, phi, mass);
  m.parameters = {{"t1", t1}, {"t2", t2}, {"phi", phi}, {"m", mass}};
  record_honeycomb(m);
  return {std::move(m), {}};
}

ModelWithSymmetries build_kane_mele(double t, double lambda_so, double lambda_r, double mass) {
  BlochModel m("kane_mele", 2, 4);
  // Spin up carries the Haldane model at phi = pi/2; spin down its conjugate.
  Mat up = Mat::Zero(2, 2), down = Mat::Zero(2, 2);
  up(0, 0) = 1.0;
  down(1, 1) = 1.0;
  add_haldane_terms(m, up, t, lambda_so, std::numbers::pi / 2, mass);
  add_haldane_terms(m, down, t, lambda_so, -std::numbers::pi / 2, mass);
  if (lambda_r != 0.0) {
    const cplx i(0, 1);
    for (const auto& n : kNearestCells) {
      const auto d = bond_direction(n);
      const Mat spin = i * lambda_r * (d[1] * pauli::x() - d[0] * pauli::y());
      add_bond(m, n, kron(spin, unit(2, 0, 1)));
    }
  }
  m.parameters = {{"t", t}, {"lambda_so", lambda_so}, {"lambda_r", lambda_r}, {"m", mass}};
  record_honeycomb(m);
  m.notes["basis"] = "spin (x) sublattice";
  SymmetrySpec s;
  s.trs = kron(pauli::y(), pauli::id2());
  return {std::move(m), std::move(s)};
}

ModelWithSymmetries build_onsite(const Mat& h0, int d, const std::string& name) {
  BlochModel m(name, d, static_cast<int>(h0.rows()));
  m.add_hopping(Lattice(d, 0), h0);
  return {std::move(m), {}};
}

bool SymmetryReport::consistent(double tol) const {
  if (!problems.empty()) return false;
  for (const auto& r : {chiral_residual, trs_residual, phs_residual, product_residual})
    if (r && *r > tol) return false;
  return true;
}

namespace {

std::optional<int> sign_or_problem(const Mat& m, const std::string& what, std::vector<std::string>& problems) {
  try {
    return coerce_sign(m, what);
  } catch (const PreconditionError& e) {
    problems.push_back(e.what());
    return std::nullopt;
  }
}

}  // namespace

SymmetryReport verify_symmetries(const BlochModel& model, const SymmetrySpec& spec, int grid, double tol) {
  SymmetryReport rep;
  rep.grid = grid;
  const int n = model.N();
  auto check_size = [&](const std::optional<Mat>& op, const char* label) {
    if (op && (op->rows() != n || op->cols() != n))
      throw PreconditionError(std::string("verify_symmetries: ") + label + " has wrong size");
  };
  check_size(spec.chiral, "chiral");
  check_size(spec.trs, "trs");
  check_size(spec.phs, "phs");

  if (spec.chiral) {
    const Mat& g = *spec.chiral;
    if (hermiticity_residual(g) > tol || dist(g * g, eye(n)) > tol)
      rep.problems.push_back("chiral operator is not a self-adjoint unitary");
    rep.chiral_residual = 0.0;
  }
  if (spec.trs) {
    if (unitarity_residual(*spec.trs) > tol) rep.problems.push_back("trs operator is not unitary");
    rep.trs_residual = 0.0;
    rep.trs_parity = sign_or_problem(*spec.trs * spec.trs->conjugate(), "trs parity", rep.problems);
  }
  if (spec.phs) {
    if (unitarity_residual(*spec.phs) > tol) rep.problems.push_back("phs operator is not unitary");
    rep.phs_residual = 0.0;
    rep.phs_parity = sign_or_problem(*spec.phs * spec.phs->conjugate(), "phs parity", rep.problems);
  }
  std::optional<Mat> chiral = spec.chiral;
  if (!spec.chiral && spec.trs && spec.phs) {
    Mat g = *spec.phs * spec.trs->conjugate();
    cplx c;
    if (!scalar_value(g * g, c)) {
      rep.problems.push_back("phs conj(trs) does not square to a scalar");
    } else {
      g /= std::sqrt(c);
      // Fix the remaining sign so the trace is non-negative where possible.
      if (g.trace().real() < -kTolSign) g = -g;
      rep.implied_chiral = g;
      chiral = g;
      rep.chiral_residual = 0.0;
    }
  }
  if (chiral && spec.trs)
    rep.grading_reality = sign_or_problem(
        *spec.trs * chiral->conjugate() * spec.trs->adjoint() * *chiral, "grading reality", rep.problems);
  if (spec.chiral && spec.phs)
    rep.phs_grading_reality = sign_or_problem(
        *spec.phs * spec.chiral->conjugate() * spec.phs->adjoint() * *spec.chiral, "phs grading reality",
        rep.problems);
  if (spec.chiral && spec.trs && spec.phs) {
    // Theta_P must equal Gamma Theta_T up to a phase.
    const Mat m = (*spec.chiral * *spec.trs).adjoint() * *spec.phs;
    const cplx c = m.trace() / static_cast<double>(n);
    rep.product_residual = dist(m, c * eye(n));
  }

  const std::vector<Momentum> ks = model.d() == 0 ? std::vector<Momentum>{Momentum{}} : grid_points(model.d(), grid);
  for (const auto& k : ks) {
    const Mat h = evaluate(model, k);
    const Mat hr = (spec.trs || spec.phs) ? Mat(evaluate(model, reversed(k)).conjugate()) : Mat();
    if (chiral && rep.chiral_residual)
      rep.chiral_residual = std::max(*rep.chiral_residual, (*chiral * h * *chiral + h).norm());
    if (spec.trs)
      rep.trs_residual = std::max(*rep.trs_residual, dist(*spec.trs * hr * spec.trs->adjoint(), h));
    if (spec.phs)
      rep.phs_residual = std::max(*rep.phs_residual, (*spec.phs * hr * spec.phs->adjoint() + h).norm());
  }
  return rep;
}

ModelWithSymmetries direct_sum(const ModelWithSymmetries& a, const ModelWithSymmetries& b) {
  if (a.model.d() != b.model.d()) throw PreconditionError("direct_sum: dimensions differ");
  const int na = a.model.N(), nb = b.model.N();
  BlochModel m(a.model.name() + "+" + b.model.name(), a.model.d(), na + nb);
  std::map<Lattice, Mat> merged;
  for (const auto& [n, t] : a.model.hoppings()) merged[n] = direct_sum(t, Mat::Zero(nb, nb));
  for (const auto& [n, t] : b.model.hoppings()) {
    auto it = merged.find(n);
    if (it == merged.end()) merged[n] = direct_sum(Mat::Zero(na, na), t);
    else it->second.bottomRightCorner(nb, nb) = t;
  }
  for (const auto& [n, t] : merged)
    if (is_zero(n) || negate(n) < n) m.add_hopping(n, t);
  SymmetrySpec s;
  auto sum = [](const std::optional<Mat>& x, const std::optional<Mat>& y) -> std::optional<Mat> {
    if (x && y) return direct_sum(*x, *y);
    return std::nullopt;
  };
  s.chiral = sum(a.symmetries.chiral, b.symmetries.chiral);
  s.trs = sum(a.symmetries.trs, b.symmetries.trs);
  s.phs = sum(a.symmetries.phs, b.symmetries.phs);
  return {std::move(m), std::move(s)};
}

BlochModel transform(const BlochModel& model, const std::function<Mat(const Mat&)>& f, const std::string& name) {
  BlochModel out(name, model.d(), model.N());
  for (const auto& [n, t] : model.hoppings())
    if (is_zero(n) || negate(n) < n) out.add_hopping(n, f(t));
  out.parameters = model.parameters;
  out.notes = model.notes;
  return out;
}

BlochModel conjugate_model(const BlochModel& model) {
  return transform(model, [](const Mat& t) -> Mat { return t.conjugate(); }, model.name() + "_conj");
}

SpinBlockResiduals spin_block_residuals(const BlochModel& model, int grid) {
  if (model.N() != 4 || model.d() != 2) throw PreconditionError("spin_block_residuals: needs a 2D four-band model");
  SpinBlockResiduals out;
  for (const auto& k : grid_points(2, grid)) {
    const Mat h = evaluate(model, k);
    const Mat hr = evaluate(model, reversed(k)).conjugate();
    out.h_blocks = std::max(out.h_blocks, dist(hr.topLeftCorner(2, 2), h.bottomRightCorner(2, 2)));
    out.r_block = std::max(out.r_block, (hr.topRightCorner(2, 2) + h.topRightCorner(2, 2).adjoint()).norm());
  }
  return out;
}

}  // namespace tenfold
