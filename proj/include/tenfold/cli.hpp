#pragma once
// Command-line driver. Exit codes: 0 ok, 1 schema or usage error,
// 2 symmetry inconsistency or inapplicable invariant, 3 gap failure,
// 4 failed verification or invariant computation.

#include <ostream>

namespace tenfold {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 1;
inline constexpr int kExitSymmetry = 2;
inline constexpr int kExitGap = 3;
inline constexpr int kExitVerify = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tenfold
