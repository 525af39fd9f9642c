#pragma once
// Verification suites behind `tenfold verify`: each runs a family of
// certificates and seeded property checks and returns a JSON record.

#include <cstdint>
#include <json.hpp>
#include <random>
#include <string>

#include "tenfold/algebra.hpp"

namespace tenfold {

struct SuiteResult {
  std::string name;
  nlohmann::json report;
  int passed = 0;
  int total = 0;
  bool ok() const { return passed == total; }
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

nlohmann::json certificate_json(const IsoCertificate& c);

SuiteResult run_clifford_suite();
SuiteResult run_signs_suite(std::uint64_t seed = kDefaultSeed);
SuiteResult run_morita_suite();
SuiteResult run_vandaele_suite(std::uint64_t seed = kDefaultSeed);

// name in {clifford, signs, morita, vandaele, all}; throws PreconditionError otherwise.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed);

// Random real orthogonal n x n matrix.
Mat random_orthogonal(int n, std::mt19937_64& rng);
// Random even unitary Theta with Theta = Theta^T for the grading Gamma
// (sign pair (+1,+1) relative to entrywise conjugation). Gamma must be diagonal.
Mat random_even_symmetric_unitary(const Mat& gamma, std::mt19937_64& rng);

}  // namespace tenfold
