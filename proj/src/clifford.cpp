#include "tenfold/clifford.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tenfold {

namespace {

// 2m+1 pairwise anticommuting self-adjoint unitaries on (C^2)^{(x)m}.
std::vector<Mat> jordan_wigner(int m) {
  const Mat I = pauli::id2(), X = pauli::x(), Y = pauli::y(), Z = pauli::z();
  auto chain = [&](int j, const Mat& mid) {
    Mat out = eye(1);
    for (int q = 0; q < m; ++q) out = kron(out, q < j ? Z : (q == j ? mid : I));
    return out;
  };
  std::vector<Mat> hs;
  for (int j = 0; j < m; ++j) {
    hs.push_back(chain(j, X));
    hs.push_back(chain(j, Y));
  }
  Mat last = eye(1);
  for (int q = 0; q < m; ++q) last = kron(last, Z);
  hs.push_back(last);
  return hs;
}

// Sign eps with conj(g) = eps * g.
int conj_sign(const Mat& g) { return dist(g.conjugate(), g) < kTolAlg ? 1 : -1; }

// A Theta fixing every generator is a product of ladder elements: such a
// monomial M_S satisfies M_S H_k M_S^dagger = (-1)^{|S| - [k in S]} H_k, so
// the search is purely combinatorial. The smallest subset wins.
Mat real_structure_for(const std::vector<Mat>& ladder, const std::vector<int>& used,
                       const std::vector<int>& eps, int n) {
  const int total = static_cast<int>(ladder.size());
  std::vector<unsigned> masks(1u << total);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (unsigned mask : masks) {
    const int size = std::popcount(mask);
    bool ok = true;
    for (std::size_t k = 0; k < used.size() && ok; ++k) {
      const int in = (mask >> used[k]) & 1u;
      const int want = (size + (eps[k] < 0 ? 1 : 0)) % 2;
      ok = (in == want);
    }
    if (!ok) continue;
    Mat theta = eye(n);
    for (int i = 0; i < total; ++i)
      if (mask & (1u << i)) theta = theta * ladder[i];
    return theta;
  }
  throw PreconditionError("no monomial real structure fixes the generators");
}

// Splits b into its even and odd parts under Gamma.
std::pair<Mat, Mat> homogeneous_parts(const Mat& b, const Mat& gamma) {
  const Mat g = gamma * b * gamma;
  return {(b + g) / 2.0, (b - g) / 2.0};
}

std::vector<Mat> generating_list(const GradedRealAlgebra& a) {
  if (!a.generators.empty()) return a.generators;
  return a.spanning_set();
}

// Theta for the right factor of a graded tensor product: with an imaginary
// inner grading on the left, R_b is replaced by R_b o gamma_b.
Mat right_theta(const GradedRealAlgebra& a, const GradedRealAlgebra& b) {
  const Mat ga = a.gamma_op();
  const Mat rga = (*a.theta) * ga.conjugate() * a.theta->adjoint();
  const int reality = coerce_sign(rga * ga, "R(Gamma) Gamma of left factor");
  if (reality > 0) return *b.theta;
  return (*b.theta) * b.gamma_op().conjugate();
}

}  // namespace

std::string CliffordRep::label() const {
  return std::string(real ? "Cl_{" : "Cl_c{") + std::to_string(r) + "," + std::to_string(s) + "}";
}

GradedRealAlgebra CliffordRep::algebra() const {
  GradedRealAlgebra a;
  a.n = dim();
  a.grading = grading;
  a.theta = theta;
  a.generators = gens;
  return a;
}

std::vector<Check> CliffordRep::invariant_checks() const {
  std::vector<Check> out;
  const int n = dim();
  const Mat one = eye(n);
  out.push_back({"grading self-adjoint", hermiticity_residual(grading)});
  out.push_back({"grading squares to 1", dist(grading * grading, one)});
  for (int i = 0; i < r + s; ++i) {
    const Mat& g = gens[i];
    const double sq = i < r ? 1.0 : -1.0;
    const std::string tag = "[" + std::to_string(i) + "]";
    out.push_back({"square" + tag, dist(g * g, sq * one)});
    out.push_back({"adjoint" + tag, dist(g.adjoint(), sq * g)});
    out.push_back({"odd" + tag, (grading * g * grading + g).norm()});
    for (int j = i + 1; j < r + s; ++j)
      out.push_back({"anticommute[" + std::to_string(i) + "," + std::to_string(j) + "]",
                     (g * gens[j] + gens[j] * g).norm()});
    if (theta) out.push_back({"real" + tag, dist((*theta) * g.conjugate() * theta->adjoint(), g)});
  }
  if (theta) {
    cplx c;
    const Mat tt = (*theta) * theta->conjugate();
    const bool scalar = scalar_value(tt, c) && std::abs(std::abs(c.real()) - 1.0) < kTolSign;
    out.push_back({"Theta conj(Theta) = +-1", scalar ? 0.0 : 1.0});
    const Mat h = grading * (*theta) * grading;
    out.push_back({"Theta homogeneous", std::min(dist(h, *theta), dist(h, -*theta))});
  }
  return out;
}

CliffordRep build_clifford(int r, int s, bool real) {
  if (r < 0 || s < 0) throw PreconditionError("generator counts must be non-negative");
  if (r + s > kMaxCliffordGenerators)
    throw PreconditionError("r+s exceeds the dimension guard of " +
                            std::to_string(kMaxCliffordGenerators));
  const int count = r + s;
  const int m = (count + 1) / 2;
  const auto ladder = jordan_wigner(m);
  const int n = 1 << m;

  // Even count: generators are the first 2m ladder elements, the last is the
  // grading. Odd count: the grading is the first, generators take the tail.
  std::vector<int> used;
  int grading_index;
  if (count % 2 == 0) {
    for (int i = 0; i < count; ++i) used.push_back(i);
    grading_index = 2 * m;
  } else {
    for (int i = 0; i < count; ++i) used.push_back(2 + i);
    grading_index = 0;
  }

  CliffordRep rep;
  rep.r = r;
  rep.s = s;
  rep.real = real;
  rep.grading = ladder[grading_index];
  std::vector<int> eps;
  for (int i = 0; i < count; ++i) {
    const Mat& h = ladder[used[i]];
    rep.gens.push_back(i < r ? h : Mat(cplx(0, 1) * h));
    eps.push_back(conj_sign(rep.gens.back()));
  }
  if (real) rep.theta = real_structure_for(ladder, used, eps, n);
  return rep;
}

CliffordRep graded_tensor(const CliffordRep& a, const CliffordRep& b) {
  if (a.real != b.real) throw PreconditionError("graded_tensor: real and complex operands mixed");
  const Mat ib = eye(b.dim());
  CliffordRep out;
  out.r = a.r + b.r;
  out.s = a.s + b.s;
  out.real = a.real;
  out.grading = kron(a.grading, b.grading);
  for (int i = 0; i < a.r; ++i) out.gens.push_back(kron(a.gens[i], ib));
  for (int i = 0; i < b.r; ++i) out.gens.push_back(kron(a.grading, b.gens[i]));
  for (int i = a.r; i < a.r + a.s; ++i) out.gens.push_back(kron(a.gens[i], ib));
  for (int i = b.r; i < b.r + b.s; ++i) out.gens.push_back(kron(a.grading, b.gens[i]));
  if (a.real) out.theta = kron(*a.theta, right_theta(a.algebra(), b.algebra()));
  return out;
}

GradedRealAlgebra graded_tensor(const GradedRealAlgebra& a, const GradedRealAlgebra& b) {
  if (a.has_real() != b.has_real())
    throw PreconditionError("graded_tensor: real structure on only one operand");
  const Mat ga = a.gamma_op();
  const Mat gb = b.gamma_op();
  GradedRealAlgebra out;
  out.n = a.n * b.n;
  if (a.grading || b.grading) out.grading = kron(ga, gb);
  if (a.has_real()) out.theta = kron(*a.theta, right_theta(a, b));
  if (!a.generators.empty() || !b.generators.empty()) {
    for (const auto& x : generating_list(a)) out.generators.push_back(kron(x, eye(b.n)));
    for (const auto& y : generating_list(b)) {
      auto [ev, od] = homogeneous_parts(y, gb);
      if (ev.norm() > 0) out.generators.push_back(kron(eye(a.n), ev));
      if (od.norm() > 0) out.generators.push_back(kron(ga, od));
    }
  }
  return out;
}

GradedRealAlgebra tensor(const GradedRealAlgebra& a, const GradedRealAlgebra& b) {
  if (a.has_real() != b.has_real())
    throw PreconditionError("tensor: real structure on only one operand");
  GradedRealAlgebra out;
  out.n = a.n * b.n;
  if (a.grading || b.grading) out.grading = kron(a.gamma_op(), b.gamma_op());
  if (a.has_real()) out.theta = kron(*a.theta, *b.theta);
  if (!a.generators.empty() || !b.generators.empty()) {
    for (const auto& x : generating_list(a)) out.generators.push_back(kron(x, eye(b.n)));
    for (const auto& y : generating_list(b)) out.generators.push_back(kron(eye(a.n), y));
  }
  return out;
}

IsoCertificate certify_iso(const CliffordRep& src, const GradedRealAlgebra& tgt,
                           const std::vector<Mat>& images, double tol) {
  const int count = src.r + src.s;
  if (static_cast<int>(images.size()) != count)
    throw PreconditionError("certify_iso: need one image per source generator");
  for (const auto& m : images)
    if (m.rows() != tgt.n || m.cols() != tgt.n)
      throw PreconditionError("certify_iso: image size does not match target");

  IsoCertificate cert;
  cert.source = src.label();
  cert.target = "algebra in M_" + std::to_string(tgt.n);
  cert.generator_images = images;
  const Mat one = eye(tgt.n);
  const Mat gamma = tgt.gamma_op();

  for (int i = 0; i < count; ++i) {
    const Mat& g = images[i];
    const double sq = i < src.r ? 1.0 : -1.0;
    const std::string tag = "[" + std::to_string(i) + "]";
    cert.add("square" + tag, dist(g * g, sq * one), tol);
    cert.add("adjoint" + tag, dist(g.adjoint(), sq * g), tol);
    cert.add("odd" + tag, (gamma * g * gamma + g).norm(), tol);
    for (int j = i + 1; j < count; ++j)
      cert.add("anticommute[" + std::to_string(i) + "," + std::to_string(j) + "]",
               (g * images[j] + images[j] * g).norm(), tol);
    if (src.real) {
      if (!tgt.has_real())
        cert.add("real" + tag + " target lacks real structure", 1.0, tol);
      else
        cert.add("real" + tag, dist(tgt.real(g), g), tol);
    }
  }

  // Bijectivity. The source model is faithful, so injectivity means the image
  // monomials span 2^(r+s) dimensions; surjectivity means that span is the
  // whole target. With R-fixed images the real span is then the R-fixed part.
  const int expected = 1 << count;
  SpanBuilder image_span(tgt.n);
  for (const auto& m : monomials(images, tgt.n)) image_span.add(m);
  cert.add_count("injective", image_span.rank(), expected);
  cert.add_count("surjective", image_span.rank(), tgt.dimension());
  if (!tgt.generators.empty()) {
    int outside = 0;
    SpanBuilder target_span(tgt.n);
    for (const auto& b : tgt.spanning_set()) target_span.add(b);
    for (const auto& m : images)
      if (!target_span.contains(m)) ++outside;
    cert.add_count("images inside target", outside, 0);
  }
  return cert;
}

IsoCertificate certify_iso(const CliffordRep& src, const CliffordRep& tgt,
                           const std::vector<Mat>& images, double tol) {
  IsoCertificate c = certify_iso(src, tgt.algebra(), images, tol);
  c.target = tgt.label();
  return c;
}

GradedRealAlgebra quaternions() { return GradedRealAlgebra::full(2, std::nullopt, pauli::y()); }

GradedRealAlgebra real_matrices_2() {
  return GradedRealAlgebra::full(2, pauli::z(), eye(2));
}

std::vector<IsoCertificate> quaternion_tensor_certificates(double tol) {
  const cplx I(0, 1);
  const Mat one = eye(2), X = pauli::x(), Y = pauli::y(), Z = pauli::z();
  const GradedRealAlgebra H = quaternions();
  std::vector<IsoCertificate> out;

  auto run = [&](const CliffordRep& factor, int r, int s, std::vector<Mat> images,
                 const std::string& name) {
    IsoCertificate c = certify_iso(build_clifford(r, s), tensor(H, factor.algebra()), images, tol);
    c.source = build_clifford(r, s).label();
    c.target = name;
    out.push_back(std::move(c));
  };

  {  // H (x) Cl_{1,0} -> Cl_{0,3}
    const auto c = build_clifford(1, 0);
    const Mat& e = c.gens[0];
    run(c, 0, 3, {kron(I * X, e), kron(I * Y, e), kron(I * Z, e)}, "H (x) Cl_{1,0}");
  }
  {  // H (x) Cl_{0,1} -> Cl_{3,0}
    const auto c = build_clifford(0, 1);
    const Mat& f = c.gens[0];
    run(c, 3, 0, {kron(I * X, f), kron(I * Y, f), kron(I * Z, f)}, "H (x) Cl_{0,1}");
  }
  {  // H (x) Cl_{1,1} -> Cl_{0,4}
    const auto c = build_clifford(1, 1);
    run(c, 0, 4, {kron(one, I * Y), kron(I * X, X), kron(I * Y, X), kron(I * Z, X)},
        "H (x) Cl_{1,1}");
  }
  {  // H (x) Cl_{2,0} -> Cl_{1,3}
    const auto c = build_clifford(2, 0);
    run(c, 1, 3, {kron(one, X), kron(I * X, Y), kron(I * Y, Y), kron(I * Z, Y)},
        "H (x) Cl_{2,0}");
  }
  {  // H (x) Cl_{0,2} -> Cl_{3,1}; positive images listed first
    const auto c = build_clifford(0, 2);
    run(c, 3, 1, {kron(X, Y), kron(Y, Y), kron(Z, Y), kron(one, I * X)}, "H (x) Cl_{0,2}");
  }
  out.push_back(certify_real_matrix_doubling(1, 1, tol));
  return out;
}

IsoCertificate certify_tensor_sum(int r1, int s1, int r2, int s2, double tol) {
  const auto a = build_clifford(r1, s1);
  const auto b = build_clifford(r2, s2);
  const auto prod = graded_tensor(a, b);
  IsoCertificate c = certify_iso(build_clifford(r1 + r2, s1 + s2), prod, prod.gens, tol);
  c.target = a.label() + " (x)^ " + b.label();
  return c;
}

namespace {
IsoCertificate matrix_doubling(const CliffordRep& base, const GradedRealAlgebra& m2,
                               const Mat& pos, const Mat& neg, double tol) {
  const Mat Z = pauli::z();
  std::vector<Mat> images;
  const Mat ib = eye(base.dim());
  images.push_back(kron(pos, ib));
  for (int i = 0; i < base.r; ++i) images.push_back(kron(Z, base.gens[i]));
  images.push_back(kron(neg, ib));
  for (int i = base.r; i < base.r + base.s; ++i) images.push_back(kron(Z, base.gens[i]));
  const auto src = build_clifford(base.r + 1, base.s + 1, base.real);
  IsoCertificate c = certify_iso(src, tensor(m2, base.algebra()), images, tol);
  c.target = (base.real ? "M_2(R) (x) " : "M_2(C) (x) ") + base.label();
  return c;
}
}  // namespace

IsoCertificate certify_real_matrix_doubling(int r, int s, double tol) {
  return matrix_doubling(build_clifford(r, s), real_matrices_2(), pauli::x(),
                         cplx(0, 1) * pauli::y(), tol);
}

IsoCertificate certify_complex_matrix_doubling(int n, double tol) {
  // In the complex algebra a negative generator is i times a positive one, so
  // the target is presented with n+2 positive generators.
  const auto base = build_clifford(n, 0, false);
  const Mat Z = pauli::z();
  std::vector<Mat> images{kron(pauli::x(), eye(base.dim())), kron(pauli::y(), eye(base.dim()))};
  for (const auto& g : base.gens) images.push_back(kron(Z, g));
  const auto src = build_clifford(n + 2, 0, false);
  IsoCertificate c = certify_iso(src, tensor(GradedRealAlgebra::full(2, Z), base.algebra()),
                                 images, tol);
  c.target = "M_2(C) (x) " + base.label();
  return c;
}

std::string Species::str() const {
  const char* f = field == Field::R ? "R" : (field == Field::C ? "C" : "H");
  std::string one = size == 1 ? std::string(f) : "M_" + std::to_string(size) + "(" + f + ")";
  return copies == 1 ? one : one + " + " + one;
}

namespace {
Species with_quaternions(Species x) {
  switch (x.field) {
    case Species::Field::R: x.field = Species::Field::H; break;
    case Species::Field::C: x.size *= 2; break;
    case Species::Field::H: x.field = Species::Field::R; x.size *= 4; break;
  }
  return x;
}
}  // namespace

Species species(int r, int s) {
  using F = Species::Field;
  if (r < 0 || s < 0) throw PreconditionError("species: negative generator count");
  if (r + s <= 2) {
    if (r == 0 && s == 0) return {F::R, 1, 1};
    if (r == 1 && s == 0) return {F::R, 1, 2};
    if (r == 0 && s == 1) return {F::C, 1, 1};
    if (r == 0 && s == 2) return {F::H, 1, 1};
    return {F::R, 2, 1};  // Cl_{2,0} and Cl_{1,1}
  }
  if (r >= 1 && s >= 1) {
    Species x = species(r - 1, s - 1);
    x.size *= 2;
    return x;
  }
  // Cl_{r,0} = Cl_{3,0} (x)^ Cl_{r-3,0} = H (x) Cl_{r-3,1}; symmetrically for s.
  if (s == 0) return with_quaternions(species(r - 3, 1));
  return with_quaternions(species(1, s - 3));
}

}  // namespace tenfold
