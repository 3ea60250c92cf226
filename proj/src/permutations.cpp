#include "quonlab/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace quonlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw std::invalid_argument("Permutation: images are not a bijection on {0..n-1}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_line(const std::string& s) {
  std::vector<int> im;
  im.reserve(s.size());
  for (char c : s) {
    if (c < '1' || c > '9') throw std::invalid_argument("Permutation: bad one-line string");
    im.push_back(c - '1');
  }
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& s) const {
  if (degree() != s.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<int> im(images_.size());
  for (int r = 0; r < degree(); ++r) im[r] = images_[s(r)];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int r = 0; r < degree(); ++r) im[images_[r]] = r;
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

std::string Permutation::one_line() const {
  std::string s;
  for (int v : images_) {
    if (v > 8) {
      s += "(" + std::to_string(v + 1) + ")";
    } else {
      s += static_cast<char>('1' + v);
    }
  }
  return s;
}

std::vector<std::pair<int, int>> inversions(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  const int n = p.degree();
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) {
      if (p(r) > p(s)) out.emplace_back(r, s);
    }
  }
  return out;
}

int inversion_count(const Permutation& p) {
  int c = 0;
  const int n = p.degree();
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) c += p(r) > p(s);
  }
  return c;
}

std::vector<Permutation> johnson_trotter(int n) {
  if (n < 0) throw std::invalid_argument("johnson_trotter: n < 0");
  check_size_cap(n, "johnson_trotter");
  if (n == 0) return {Permutation::identity(0)};
  std::vector<int> perm(n), dir(n, -1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Permutation> out;
  out.push_back(Permutation(perm));
  while (true) {
    int mobile = -1, mpos = -1;
    for (int i = 0; i < n; ++i) {
      int j = i + dir[i];
      if (j >= 0 && j < n && perm[i] > perm[j] && perm[i] > mobile) {
        mobile = perm[i];
        mpos = i;
      }
    }
    if (mobile < 0) break;
    int j = mpos + dir[mpos];
    std::swap(perm[mpos], perm[j]);
    std::swap(dir[mpos], dir[j]);
    for (int i = 0; i < n; ++i) {
      if (perm[i] > mobile) dir[i] = -dir[i];
    }
    out.push_back(Permutation(perm));
  }
  return out;
}

Permutation cycle(int k, int l, int n) {
  if (k < 0 || l < k || l >= n) throw std::invalid_argument("cycle: need 0 <= k <= l < n");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  im[k] = l;
  for (int j = k + 1; j <= l; ++j) im[j] = j - 1;
  return Permutation(std::move(im));
}

Permutation adjacent(int k, int n) { return cycle(k, k + 1, n); }

Permutation longest(int n) {
  std::vector<int> im(n);
  for (int r = 0; r < n; ++r) im[r] = n - 1 - r;
  return Permutation(std::move(im));
}

Word Word::acted(const Permutation& p) const {
  if (p.degree() != size()) throw std::invalid_argument("Word::acted: degree mismatch");
  std::vector<int> out(letters_.size());
  for (int r = 0; r < size(); ++r) out[r] = letters_[p(r)];
  return Word(std::move(out));
}

Word Word::dropped(int pos) const {
  std::vector<int> out = letters_;
  out.erase(out.begin() + pos);
  return Word(std::move(out));
}

Word Word::sorted() const {
  std::vector<int> out = letters_;
  std::sort(out.begin(), out.end());
  return Word(std::move(out));
}

Weight Weight::of_word(const Word& w) {
  Weight out;
  out.word_ = w.sorted();
  return out;
}

Weight::Weight(std::vector<int> letters) {
  if (!std::is_sorted(letters.begin(), letters.end())) {
    throw std::invalid_argument("Weight: letters must be weakly increasing");
  }
  word_ = Word(std::move(letters));
}

std::vector<int> Weight::run_lengths() const {
  std::vector<int> runs;
  for (int r = 0; r < size(); ++r) {
    if (r > 0 && word_[r] == word_[r - 1]) {
      ++runs.back();
    } else {
      runs.push_back(1);
    }
  }
  return runs;
}

std::vector<Permutation> Weight::stabilizer() const { return young_subgroup(run_lengths()); }

long long Weight::arrangement_count() const {
  long long num = 1;
  for (int i = 2; i <= size(); ++i) num *= i;
  for (int r : run_lengths()) {
    for (int i = 2; i <= r; ++i) num /= i;
  }
  return num;
}

Permutation min_coset_rep(const Weight& weight, const Word& word) {
  const int n = weight.size();
  if (word.size() != n || word.sorted() != weight.word()) {
    throw std::invalid_argument("min_coset_rep: word is not a rearrangement of weight");
  }
  // standardization: the r-th letter of word takes the first unused position
  // of that letter in weight; equal letters keep increasing positions, which
  // minimizes inversions within the stabilizer coset
  int max_letter = 0;
  for (int i = 0; i < n; ++i) max_letter = std::max(max_letter, weight[i]);
  std::vector<std::vector<int>> pos(max_letter + 1);
  for (int i = 0; i < n; ++i) pos[weight[i]].push_back(i);
  std::vector<int> im(n);
  std::vector<int> used(max_letter + 1, 0);
  for (int r = 0; r < n; ++r) {
    int l = word[r];
    im[r] = pos[l][used[l]++];
  }
  return Permutation(std::move(im));
}

std::vector<CosetRep> coset_reps(const Weight& weight) {
  std::vector<CosetRep> out;
  std::set<Word> seen;
  for (const Permutation& p : johnson_trotter(weight.size())) {
    Word w = weight.word().acted(p);
    if (seen.insert(w).second) {
      out.push_back(CosetRep{min_coset_rep(weight, w), std::move(w)});
    }
  }
  return out;
}

std::vector<Permutation> young_subgroup(const std::vector<int>& block_sizes) {
  int n = 0;
  for (int b : block_sizes) n += b;
  check_size_cap(n, "young_subgroup");
  std::vector<Permutation> out{Permutation::identity(n)};
  int start = 0;
  for (int b : block_sizes) {
    std::vector<Permutation> block = johnson_trotter(b);
    std::vector<Permutation> next;
    next.reserve(out.size() * block.size());
    for (const Permutation& base : out) {
      for (const Permutation& g : block) {
        std::vector<int> im = base.images();
        for (int r = 0; r < b; ++r) im[start + r] = base(start + g(r));
        next.push_back(Permutation(std::move(im)));
      }
    }
    out = std::move(next);
    start += b;
  }
  return out;
}

std::vector<Permutation> first_position_fixed(int n) {
  if (n <= 0) return {};
  return young_subgroup({1, n - 1});
}

}  // namespace quonlab
