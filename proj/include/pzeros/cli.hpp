#pragma once

// Command-line front end. Exit codes: 0 success, 1 invalid input or
// configuration, 2 computational failure, 3 when `verify` finds a violated
// invariant.

#include <iosfwd>
#include <string>
#include <vector>

#include "pzeros/verify.hpp"

namespace pzeros {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitComputation = 2;
inline constexpr int kExitViolation = 3;

// kExitViolation when any gating check failed, else kExitOk.
int verify_exit_code(const std::vector<CheckGroup>& groups);

// args excludes the program name. Artifacts go to --out, to output.dir, or
// to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pzeros
