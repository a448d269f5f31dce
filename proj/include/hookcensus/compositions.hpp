#pragma once

#include <vector>

namespace hookcensus {

// Compositions of `total` into `parts` parts, each >= min_part, emitted in
// lexicographic order as a reused buffer.
template <typename F>
void for_each_composition(int total, int parts, int min_part, F&& f) {
  std::vector<int> buf(parts, 0);
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == parts) {
      if (left == 0) f(const_cast<const std::vector<int>&>(buf));
      return;
    }
    int max_here = left - min_part * (parts - idx - 1);
    for (int a = min_part; a <= max_here; ++a) {
      buf[idx] = a;
      self(self, idx + 1, left - a);
    }
  };
  if (parts == 0) {
    if (total == 0) f(const_cast<const std::vector<int>&>(buf));
    return;
  }
  rec(rec, 0, total);
}

}  // namespace hookcensus
