// Acceptance suite: one criterion per invocation (--criterion N) or all in
// sequence. Prints one pass/fail line per criterion and exits nonzero if any
// requested criterion fails.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "quonlab/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* description;
  const char* suite;
};

const Criterion kCriteria[] = {
    {1, "printed Gram blocks 1, 12, 123, 11, 113 reproduced exactly (20 rational points, < 5 s)",
     "paper_examples"},
    {2, "closed-form determinant identities for A^12, A^123, A^113 (exact + double)",
     "determinants"},
    {3, "printed closed-form inverses of A^113 and A^123 (max abs error < 1e-10, 20 points)",
     "inverses"},
    {4, "every Gram entry equals the Fock-oracle inner product, n <= 4, 3 letters, exact (< 30 s)",
     "oracle_gram"},
    {5, "unit diagonal, hermiticity, W-conjugation, reduction agreement, n <= 5 (50 points, 1e-12)",
     "structural"},
    {6, "positive definiteness: min eigenvalue > 0, n <= 4 (50 samples, |q| <= 0.9)", "positivity"},
    {7, "twisted-algebra identities: factorizations, lemma 1, w eta w = xi, alternating sum, "
        "lemma 3 (n <= 5, 20 points, 1e-10; symbolic n <= 4)",
     "twisted"},
    {8, "transition matrix E equals restricted right multiplication (n <= 5, 1e-10)", "lemma2"},
    {9, "number operators diagonal with eigenvalue = letter count, modes agree, coefficients "
        "match the oracle (3 letters, degree 4, 20 points, 1e-9, < 2 min)",
     "diagonality"},
    {10, "single-oscillator limit: eigenvalue n on |k^n| up to n = 5 (1e-9)", "single_oscillator"},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::uint64_t seed = 20260810;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N] [--seed S]\n");
      return 2;
    }
  }
  quonlab::VerifyOptions opts;
  opts.seed = seed;
  bool all_passed = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    quonlab::SuiteResult r = quonlab::run_suite(c.suite, opts);
    all_passed = all_passed && r.passed;
    std::printf("[%s] criterion %d: %s (checks=%lld, max_residual=%.3g, time=%.2fs)\n",
                r.passed ? "PASS" : "FAIL", c.number, c.description, r.checks, r.max_residual,
                r.seconds);
    for (const std::string& note : r.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
