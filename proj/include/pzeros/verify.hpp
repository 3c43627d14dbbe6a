#pragma once

// Invariant suites shared by the acceptance binary and the `verify`
// subcommand. Every check records what was measured so a report lists each
// inequality or identity that was tested, not just a verdict.

#include <string>
#include <vector>

#include "pzeros/harness.hpp"

namespace pzeros {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  // Informational checks are reported but never fail their group.
  bool gating = true;
};

struct CheckGroup {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  bool passed() const;
  std::size_t violations() const;
};

// Acceptance criteria 1 to 10.
CheckGroup check_special_values();
CheckGroup check_numeric_anchors();
CheckGroup check_identities(unsigned seed = 20240611);
CheckGroup check_inequalities();
CheckGroup check_beta();
CheckGroup check_combinatorics(long brute_force_max = 30, long stabilization_max = 400);
CheckGroup check_fourier_tables(unsigned seed = 20240611);
CheckGroup check_asymptotics();
CheckGroup check_zero_attractor(unsigned seed = 20240611);
CheckGroup check_root_integrity();

// Counts partitions of n into parts allowed by seq, by number of parts, by
// walking every partition. Exponential; meant for small n only.
std::vector<mpz_class> brute_force_counts(const ExponentSequence& seq, long n);

// Family-aware suite used by `verify`: the family-independent special
// function groups plus combinatorics, Fourier data, asymptotics, roots and
// zero locations for seq up to weight max_n.
std::vector<CheckGroup> verify_family(const ExponentSequence& seq, long max_n, unsigned seed = 20240611);

// Locale-independent scientific rendering used in check details.
std::string format_double(double x, int digits = 3);

}  // namespace pzeros
