#include <doctest.h>

#include <map>
#include <set>

#include "tenfold/classify.hpp"
#include "tenfold/graded_real.hpp"

using namespace tenfold;

namespace {

SymmetryProfile profile(bool chiral, std::optional<int> trs, std::optional<int> phs,
                        std::optional<int> reality = std::nullopt) {
  SymmetryProfile p;
  p.chiral = chiral;
  p.trs = trs;
  p.phs = phs;
  p.grading_reality = reality;
  return p;
}

// Altland-Zirnbauer labels keyed by (T^2, C^2) with 0 for an absent symmetry,
// in the order of the real Bott clock.
const std::map<std::pair<int, int>, std::pair<std::string, int>> kAZ{
    {{1, 0}, {"AI", 0}},  {{1, 1}, {"BDI", 1}},  {{0, 1}, {"D", 2}},  {{-1, 1}, {"DIII", 3}},
    {{-1, 0}, {"AII", 4}}, {{-1, -1}, {"CII", 5}}, {{0, -1}, {"C", 6}}, {{1, -1}, {"CI", 7}},
};

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("complex rows") {
    const auto none = classify(profile(false, {}, {}));
    CHECK(none.k_functor == KFunctor::Complex);
    CHECK(none.degree == 0);
    CHECK(none.cartan_label == "A");
    const auto chiral = classify(profile(true, {}, {}));
    CHECK(chiral.k_functor == KFunctor::Complex);
    CHECK(chiral.degree == 1);
    CHECK(chiral.cartan_label == "AIII");
  }

  TEST_CASE("one real symmetry") {
    CHECK(classify(profile(false, 1, {})).degree == 0);
    CHECK(classify(profile(false, -1, {})).degree == 4);
    CHECK(classify(profile(false, {}, 1)).degree == 2);
    CHECK(classify(profile(false, {}, -1)).degree == 6);
    for (const auto& p : {profile(false, 1, {}), profile(false, -1, {}), profile(false, {}, 1), profile(false, {}, -1)})
      CHECK(classify(p).k_functor == KFunctor::Real);
  }

  TEST_CASE("balanced inner chiral rows") {
    CHECK(classify(profile(true, 1, {}, 1)).degree == 1);
    CHECK(classify(profile(true, 1, {}, -1)).degree == 7);
    CHECK(classify(profile(true, -1, {}, -1)).degree == 3);
    CHECK(classify(profile(true, -1, {}, 1)).degree == 5);
    // TRS even plus PHS even without a declared chiral operator.
    CHECK(classify(profile(false, 1, 1)).degree == 1);
  }

  TEST_CASE("implied PHS parity is the reality sign times the TRS parity") {
    for (int trs : {1, -1})
      for (int reality : {1, -1}) {
        const auto d = classify(profile(true, trs, {}, reality));
        REQUIRE(d.profile.phs);
        CHECK(*d.profile.phs == reality * trs);
        // Declaring the implied PHS leaves the row unchanged.
        CHECK(classify(profile(true, trs, reality * trs, reality)).degree == d.degree);
      }
  }

  TEST_CASE("labels agree with the Altland-Zirnbauer table") {
    std::vector<SymmetryProfile> real_profiles;
    for (int t : {1, -1}) real_profiles.push_back(profile(false, t, {}));
    for (int c : {1, -1}) real_profiles.push_back(profile(false, {}, c));
    for (int t : {1, -1})
      for (int c : {1, -1}) real_profiles.push_back(profile(false, t, c));
    for (const auto& p : real_profiles) {
      const auto d = classify(p);
      const std::pair<int, int> key{d.profile.trs.value_or(0), d.profile.phs.value_or(0)};
      REQUIRE(kAZ.count(key));
      CHECK(d.cartan_label == kAZ.at(key).first);
      CHECK(d.degree == kAZ.at(key).second);
    }
    CHECK(real_profiles.size() == 8);
  }

  TEST_CASE("inconsistent profiles are rejected") {
    // PHS parity contradicting TRS parity and grading reality.
    CHECK_THROWS_AS(classify(profile(true, 1, -1, 1)), InconsistentProfile);
    CHECK_THROWS_AS(classify(profile(true, -1, -1, -1)), InconsistentProfile);
    // Chiral and TRS without the reality sign.
    CHECK_THROWS_AS(classify(profile(true, 1, {})), InconsistentProfile);
    SymmetryProfile clash = profile(true, 1, {}, 1);
    clash.phs_grading_reality = -1;
    CHECK_THROWS_AS(classify(clash), InconsistentProfile);
  }

  TEST_CASE("ten consistent profiles, ten distinct rows") {
    std::vector<SymmetryProfile> all{profile(false, {}, {}), profile(true, {}, {})};
    for (int t : {1, -1}) all.push_back(profile(false, t, {}));
    for (int c : {1, -1}) all.push_back(profile(false, {}, c));
    for (int t : {1, -1})
      for (int r : {1, -1}) all.push_back(profile(true, t, {}, r));
    std::set<std::string> labels;
    for (const auto& p : all) labels.insert(classify(p).cartan_label);
    CHECK(labels.size() == 10);
  }

  TEST_CASE("strong invariant groups") {
    CHECK(strong_invariant_group(classify(profile(false, -1, {})), 2) == GroupKind::Z2);
    CHECK(strong_invariant_group(classify(profile(false, 1, {})), 3) == GroupKind::Trivial);
    CHECK(strong_invariant_group(classify(profile(false, {}, {})), 2) == GroupKind::Z);
    CHECK(strong_invariant_group(classify(profile(true, {}, {})), 1) == GroupKind::Z);
    CHECK(strong_invariant_group(classify(profile(true, {}, {})), 2) == GroupKind::Trivial);
    // Class D in two dimensions and DIII in one and two.
    CHECK(strong_invariant_group(classify(profile(false, {}, 1)), 2) == GroupKind::Z);
    CHECK(strong_invariant_group(classify(profile(true, -1, {}, -1)), 1) == GroupKind::Z2);
    CHECK(strong_invariant_group(classify(profile(true, -1, {}, -1)), 2) == GroupKind::Z2);
    CHECK(strong_invariant_group(classify(profile(true, 1, {}, 1)), 1) == GroupKind::Z);
    CHECK_THROWS_AS(strong_invariant_group(classify(profile(false, {}, {})), -1), PreconditionError);
  }

  TEST_CASE("KO table of the point") {
    const GroupKind expected[8] = {GroupKind::Z,       GroupKind::Z2,      GroupKind::Z2,      GroupKind::Trivial,
                                   GroupKind::Z,       GroupKind::Trivial, GroupKind::Trivial, GroupKind::Trivial};
    for (int i = -8; i < 16; ++i) CHECK(ko_point(i) == expected[mod(i, 8)]);
    CHECK(group_name(GroupKind::Z2) == "Z2");
    CHECK(group_name(GroupKind::Trivial) == "0");
  }

  TEST_CASE("rough classification relative to the symmetry's own real algebra") {
    CHECK(rough_classify(profile(false, -1, {})).degree == 0);
    CHECK(rough_classify(profile(false, {}, -1)).degree == 2);
    CHECK(rough_classify(profile(true, -1, {}, 1)).degree == 1);
    CHECK(rough_classify(profile(true, -1, {}, -1)).degree == 7);
    CHECK(rough_classify(profile(true, {}, {})).degree == 1);
    // Refining by the parity shifts the degree by 4 when the symmetry is odd.
    std::vector<SymmetryProfile> cases;
    for (int t : {1, -1}) cases.push_back(profile(false, t, {}));
    for (int c : {1, -1}) cases.push_back(profile(false, {}, c));
    for (int t : {1, -1})
      for (int r : {1, -1}) cases.push_back(profile(true, t, {}, r));
    for (const auto& p : cases) {
      const int parity = p.trs ? *p.trs : *p.phs;
      CHECK(mod(rough_classify(p).degree + (parity < 0 ? 4 : 0), 8) == classify(p).degree);
    }
  }

  TEST_CASE("graded sign table round trip") {
    struct Row {
      Mat gamma, theta;
      int r, s;
    };
    const Mat x = pauli::x(), y = pauli::y(), z = pauli::z(), one = eye(2);
    for (const auto& row : {Row{z, one, 1, 1}, Row{z, x, 2, 0}, Row{z, y, 0, 2}, Row{kron(one, z), kron(y, one), 0, 4}}) {
      const auto alg = GradedRealAlgebra::full(static_cast<int>(row.gamma.rows()), row.gamma);
      const SignPair eta = relative_signs(alg, row.theta);
      const int reality =
          coerce_sign(row.theta * row.gamma.conjugate() * row.theta.adjoint() * row.gamma, "grading reality");
      CHECK(classify(profile(true, eta.eta1, {}, reality)).degree == degree_from_real_subalgebra(row.r, row.s));
    }
  }

  TEST_CASE("profiles read from verified builder models") {
    auto from = [](const ModelWithSymmetries& m) {
      return classify(profile_from_report(verify_symmetries(m.model, m.symmetries, 16)));
    };
    const auto km = from(build_kane_mele(1, 0.1, 0, 0));
    CHECK(km.cartan_label == "AII");
    CHECK(strong_invariant_group(km, 2) == GroupKind::Z2);
    const auto ssh = from(build_ssh(0, 1));
    CHECK(ssh.cartan_label == "AIII");
    CHECK(strong_invariant_group(ssh, 1) == GroupKind::Z);
    CHECK(from(build_haldane(1, 0.2, 1.0, 0)).cartan_label == "A");

    auto bogus = build_haldane(1, 0.2, 1.0, 0);
    bogus.symmetries.trs = eye(2);
    CHECK_THROWS_AS(profile_from_report(verify_symmetries(bogus.model, bogus.symmetries, 16)), InconsistentProfile);
  }
}
