#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hookcensus/trees.hpp"

namespace hookcensus {

// A permutation of {1,...,n} in one-line notation. Positions are 1-based
// throughout the library; this matches the wire formats, which also use
// 1-based indices.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);  // throws std::invalid_argument

  static Permutation identity(int n);

  // Accepts comma- or space-separated integers ("3,5,2,1,4"), or a compact
  // digit string when n <= 9 ("35214"). On failure returns nullopt and sets
  // *error to a diagnostic naming the first violation.
  static std::optional<Permutation> try_parse(std::string_view text, std::string* error = nullptr);
  static Permutation parse(std::string_view text);  // throws std::invalid_argument

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int pos) const { return entries_[pos - 1]; }          // pos in 1..n
  int position_of(int value) const { return pos_of_[value - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  // Compact digits when n <= 9, otherwise space-separated.
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const { return entries_ < other.entries_; }

private:
  std::vector<int> entries_;
  std::vector<int> pos_of_;  // pos_of_[v-1] = position of value v
};

// All i in 1..n-1 with pi_i > pi_{i+1}, ascending. n is never a descent.
std::vector<int> descents(const Permutation& pi);

// One pass through a stack: the next input entry is pushed when the stack is
// empty or the entry is smaller than the stack top; otherwise the top is
// popped to the output. The stack is drained at end of input.
Permutation stack_sort(const Permutation& sigma);

// Number of positions i with sigma_i below both neighbors, where the
// boundary neighbors sigma_0 and sigma_{n+1} count as +infinity. Equals the
// leaf count of symmetric_order_inverse(sigma). Requires n >= 1.
int padded_valleys(const Permutation& sigma);

// The unique decreasing binary tree whose symmetric-order (in-order) reading
// is sigma: root = max entry, left subtree from the prefix, right subtree
// from the suffix. Requires n >= 1.
DaryTree symmetric_order_inverse(const Permutation& sigma);

}  // namespace hookcensus
