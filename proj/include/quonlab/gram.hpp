#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "quonlab/linalg.hpp"
#include "quonlab/params.hpp"
#include "quonlab/permutations.hpp"

namespace quonlab {

/// One block A^nu of the Fock-space Gram matrix: rows and columns are labelled
/// by the distinct rearrangements of the weight, in Johnson-Trotter-induced
/// order (coset_reps order). Hermitian; unit diagonal in the generic case.
template <class S>
struct GramBlock {
  Weight weight;
  std::vector<Word> labels;
  Matrix<S> matrix;
};

namespace detail {

/// Entry formula of the generic block, with letters supplied by an arbitrary
/// word: prod over inversions (r,s) of sigma^-1 pi of q(w[pi(r)], w[pi(s)]).
template <class S>
S generic_entry(const Permutation& pi, const Permutation& sigma_inv, const Word& letters,
                const QMatrix<S>& q) {
  Permutation tau = sigma_inv.compose(pi);
  S v(1);
  const int n = tau.degree();
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) {
      if (tau(r) > tau(s)) v *= q(letters[pi(r)], letters[pi(s)]);
    }
  }
  return v;
}

}  // namespace detail

/// The n! x n! block A^{12...n} specialized by substituting the weight's
/// letters, rows/columns in Johnson-Trotter order. For a generic weight this
/// IS the Gram block; for degenerate weights it is the object Eq.-6-style
/// reduction and the expanded number-operator mode work from.
template <class S>
Matrix<S> specialized_generic_block(const Weight& weight, const QMatrix<S>& q,
                                    Exec exec = Exec::Parallel) {
  const int n = weight.size();
  check_size_cap(n, "specialized_generic_block");
  std::vector<Permutation> perms = johnson_trotter(n);
  const int m = static_cast<int>(perms.size());
  std::vector<Permutation> inv(m);
  for (int i = 0; i < m; ++i) inv[i] = perms[i].inverse();
  Matrix<S> a(m, m);
  const Word& letters = weight.word();
#pragma omp parallel for collapse(2) schedule(static) if (exec == Exec::Parallel)
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      a(r, c) = detail::generic_entry(perms[r], inv[c], letters, q);
    }
  }
  return a;
}

/// Gram block of a weight with all letters distinct (Eq.-5 inversion
/// products), size n!.
template <class S>
GramBlock<S> gram_generic(const Weight& weight, const QMatrix<S>& q, Exec exec = Exec::Parallel) {
  for (int r = 1; r < weight.size(); ++r) {
    if (weight[r] == weight[r - 1]) {
      throw std::invalid_argument("gram_generic: weight letters must be distinct");
    }
  }
  GramBlock<S> out;
  out.weight = weight;
  for (const Permutation& p : johnson_trotter(weight.size())) out.labels.push_back(weight.word().acted(p));
  out.matrix = specialized_generic_block(weight, q, exec);
  return out;
}

/// Gram block of an arbitrary weight: entry (i, j) is the stabilizer-orbit sum
/// over tau in sigma^-1 H pi of the inversion product with letters from the
/// row word. Size n!/(n_1!...n_p!).
template <class S>
GramBlock<S> gram_weight(const Weight& weight, const QMatrix<S>& q, Exec exec = Exec::Parallel) {
  const int n = weight.size();
  check_size_cap(n, "gram_weight");
  std::vector<CosetRep> reps = coset_reps(weight);
  std::vector<Permutation> stab = weight.stabilizer();
  const int m = static_cast<int>(reps.size());
  GramBlock<S> out;
  out.weight = weight;
  for (const CosetRep& r : reps) out.labels.push_back(r.word);
  out.matrix = Matrix<S>(m, m);
  Matrix<S>& a = out.matrix;
#pragma omp parallel for collapse(2) schedule(static) if (exec == Exec::Parallel)
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      Permutation sigma_inv = reps[c].rep.inverse();
      S sum(0);
      for (const Permutation& h : stab) {
        Permutation tau = sigma_inv.compose(h).compose(reps[r].rep);
        S v(1);
        for (int x = 0; x < n; ++x) {
          for (int y = x + 1; y < n; ++y) {
            if (tau(x) > tau(y)) v *= q(reps[r].word[x], reps[r].word[y]);
          }
        }
        sum += v;
      }
      a(r, c) = sum;
    }
  }
  return out;
}

/// Eq.-6 reduction: specialize the generic n!-block at the target weight's
/// letters, then orbit-sum columns over the stabilizer. Agrees with
/// gram_weight entrywise (exactly, in exact mode).
template <class S>
GramBlock<S> reduce_from_generic(const Weight& weight, const QMatrix<S>& q,
                                 Exec exec = Exec::Parallel) {
  const int n = weight.size();
  Matrix<S> spec = specialized_generic_block(weight, q, exec);
  std::vector<Permutation> perms = johnson_trotter(n);
  std::map<Permutation, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<int>(i));
  auto jt_index = [&index](const Permutation& p) { return index.at(p); };
  std::vector<CosetRep> reps = coset_reps(weight);
  std::vector<Permutation> stab = weight.stabilizer();
  const int m = static_cast<int>(reps.size());
  GramBlock<S> out;
  out.weight = weight;
  for (const CosetRep& r : reps) out.labels.push_back(r.word);
  out.matrix = Matrix<S>(m, m);
  for (int r = 0; r < m; ++r) {
    int row = jt_index(reps[r].rep);
    for (int c = 0; c < m; ++c) {
      S sum(0);
      for (const Permutation& h : stab) sum += spec(row, jt_index(h.compose(reps[c].rep)));
      out.matrix(r, c) = sum;
    }
  }
  return out;
}

/// All weights of length n over nletters, lexicographic.
std::vector<Weight> weights_of_length(int n, int nletters);

/// One block per weight of each length 0..n_max, lexicographic within each
/// length; length 0 is the 1x1 vacuum block (1). Blocks are built in
/// parallel when exec == Parallel.
template <class S>
std::vector<GramBlock<S>> decompose(int n_max, const QMatrix<S>& q, Exec exec = Exec::Parallel) {
  std::vector<Weight> all;
  for (int n = 0; n <= n_max; ++n) {
    for (Weight& w : weights_of_length(n, q.size())) all.push_back(std::move(w));
  }
  std::vector<GramBlock<S>> out(all.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    out[i] = gram_weight(all[i], q, Exec::Serial);
  }
  return out;
}

template <class S>
S determinant(const GramBlock<S>& block) {
  return determinant(block.matrix);
}

template <class S>
struct InverseResult {
  GramBlock<S> block;      // same labels, inverse matrix
  double residual;         // max-norm of A * A^-1 - Id
};

template <class S>
InverseResult<S> invert(const GramBlock<S>& block) {
  InverseResult<S> out;
  out.block.weight = block.weight;
  out.block.labels = block.labels;
  out.block.matrix = inverse(block.matrix);
  out.residual =
      max_abs_diff(block.matrix * out.block.matrix, Matrix<S>::identity(block.matrix.rows()));
  return out;
}

/// W of Eq. 11 on the JT-ordered generic index set: W[pi][sigma] = 1 iff
/// pi w_n = sigma. Symmetric, W^2 = 1, and W A W = A^T for specialized
/// generic blocks.
template <class S>
Matrix<S> reversal_matrix(int n) {
  std::vector<Permutation> perms = johnson_trotter(n);
  Permutation w = longest(n);
  Matrix<S> W(static_cast<int>(perms.size()), static_cast<int>(perms.size()));
  for (size_t r = 0; r < perms.size(); ++r) {
    Permutation target = perms[r].compose(w);
    for (size_t c = 0; c < perms.size(); ++c) {
      if (perms[c] == target) {
        W(static_cast<int>(r), static_cast<int>(c)) = S(1);
        break;
      }
    }
  }
  return W;
}

}  // namespace quonlab
