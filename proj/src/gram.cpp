#include "quonlab/gram.hpp"

namespace quonlab {

std::vector<Weight> weights_of_length(int n, int nletters) {
  std::vector<Weight> out;
  std::vector<int> cur;
  // weakly increasing sequences, lexicographic
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(Weight(cur));
      return;
    }
    for (int l = start; l < nletters; ++l) {
      cur.push_back(l);
      self(self, l);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace quonlab
