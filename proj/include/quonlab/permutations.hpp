#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "quonlab/common.hpp"

namespace quonlab {

/// A permutation of {0..n-1} in one-line notation: images()[r] is the image of
/// position r. Composition is functional, (p*s)(r) = p(s(r)), so the right
/// action on words w.p defined by (w.p)[r] = w[p(r)] satisfies
/// w.(p*s) = (w.p).s. Printing uses 1-based one-line strings ("312").
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Parses 1-based one-line digits, e.g. "312" (n <= 9).
  static Permutation from_one_line(const std::string& s);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int r) const { return images_[r]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& s) const;  // this after s
  Permutation inverse() const;
  std::string one_line() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// I(p) = {(r,s) : r < s, p(r) > p(s)}, position pairs, 0-based.
std::vector<std::pair<int, int>> inversions(const Permutation& p);
int inversion_count(const Permutation& p);

/// All of S_n in Steinhaus-Johnson-Trotter order (adjacent transpositions);
/// for n = 3 this is 123,132,312,321,231,213. This order fixes the row and
/// column labelling of every n!-sized matrix in the library.
std::vector<Permutation> johnson_trotter(int n);

/// The cycle t_{k,l} (0-based k <= l < n): k -> l and j -> j-1 for k < j <= l.
Permutation cycle(int k, int l, int n);
/// Adjacent transposition t_k = t_{k,k+1}.
Permutation adjacent(int k, int n);
/// Longest element w_n = (n-1, ..., 1, 0).
Permutation longest(int n);

/// A word over the alphabet {0..alphabet_size-1}; the right action permutes
/// positions: acted(p)[r] = letters()[p(r)].
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int r) const { return letters_[r]; }
  const std::vector<int>& letters() const { return letters_; }

  Word acted(const Permutation& p) const;
  Word dropped(int pos) const;  // word with position pos removed
  Word sorted() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
};

/// A weight: a weakly increasing word. Weights label Gram blocks.
class Weight {
 public:
  Weight() = default;
  /// Sorts the letters.
  static Weight of_word(const Word& w);
  /// Requires already-sorted letters.
  explicit Weight(std::vector<int> letters);

  int size() const { return word_.size(); }
  const Word& word() const { return word_; }
  int operator[](int r) const { return word_[r]; }

  /// Run lengths of equal letters (the Young subgroup shape of Stab).
  std::vector<int> run_lengths() const;
  /// All elements of the stabilizer subgroup H = {h : word.h == word}.
  std::vector<Permutation> stabilizer() const;
  /// Number of distinct rearrangements, n!/(n_1!...n_p!).
  long long arrangement_count() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return a.word() <=> b.word();
  }

 private:
  Word word_;
};

/// Minimal-length permutation rho with weight.acted(rho) == word
/// (standardization: equal letters are assigned increasing positions).
Permutation min_coset_rep(const Weight& weight, const Word& word);

struct CosetRep {
  Permutation rep;  // minimal-length representative of Stab * rep
  Word word;        // weight.acted(rep)
};

/// One minimal-length representative per coset Stab\S_n, ordered by the first
/// occurrence of the coset's word in Johnson-Trotter order. For weight 113
/// the words come out as 113, 131, 311.
std::vector<CosetRep> coset_reps(const Weight& weight);

/// The Young subgroup S_{n_1} x S_{n_2} x ... on consecutive index blocks.
std::vector<Permutation> young_subgroup(const std::vector<int>& block_sizes);
/// S_1 x S_{n-1}: all permutations fixing position 0.
std::vector<Permutation> first_position_fixed(int n);

}  // namespace quonlab
