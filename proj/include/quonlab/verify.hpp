#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quonlab {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checks = 0;
  double max_residual = 0.0;
  double seconds = 0.0;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  /// 0 keeps each suite's full sample count (the acceptance configuration);
  /// smaller values speed up ad-hoc runs.
  int samples = 0;
};

// The first ten suites implement the acceptance criteria one-to-one with
// their tolerances and sample counts pinned; the rest cover the remaining
// module invariants.
SuiteResult suite_paper_examples(const VerifyOptions&);     // printed Gram tables, exact
SuiteResult suite_determinants(const VerifyOptions&);       // closed-form determinant identities
SuiteResult suite_inverses(const VerifyOptions&);           // printed closed-form inverses
SuiteResult suite_oracle_gram(const VerifyOptions&);        // gram == Fock oracle, exact
SuiteResult suite_structural(const VerifyOptions&);         // diag/hermiticity/W/reduction
SuiteResult suite_positivity(const VerifyOptions&);         // min eigenvalue > 0
SuiteResult suite_twisted(const VerifyOptions&);            // factorization + lemma identities
SuiteResult suite_lemma2(const VerifyOptions&);             // transition matrix E
SuiteResult suite_diagonality(const VerifyOptions&);        // number operator, 3 letters
SuiteResult suite_single_oscillator(const VerifyOptions&);  // 1-letter alphabet
SuiteResult suite_prop2(const VerifyOptions&);              // twisted differential equations
SuiteResult suite_inversion_elements(const VerifyOptions&); // gamma_bar inverses, Y independence
SuiteResult suite_fock(const VerifyOptions&);               // hermiticity + anti-involution
SuiteResult suite_commutator(const VerifyOptions&);         // [N_k, a_l+] = delta a_k+
SuiteResult suite_kernels(const VerifyOptions&);            // serial == parallel, bitwise

std::vector<std::string> all_suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace quonlab
