#pragma once

#include <optional>
#include <set>
#include <utility>

#include "hookcensus/counting.hpp"
#include "hookcensus/hooks.hpp"
#include "hookcensus/permutation.hpp"
#include "hookcensus/trees.hpp"

namespace hookcensus {

// Everything here sums lazily over the configuration stream of pi and
// accumulates exactly; no configuration list is materialized.

// Decreasing plane trees (unbounded arity) with postorder pi.
BigCount count_ntrees_postorder(const Permutation& pi);

// Decreasing S-trees with postorder pi; 0 must be in S.
BigCount count_strees_postorder(const Permutation& pi, const std::set<int>& S);

// Decreasing d-ary trees with postorder pi; d >= 1.
BigCount count_dary_postorder(const Permutation& pi, int d);

// Trees with postorder pi having exactly p vertices whose child count lies
// in R. The general S-tree and d-ary evaluators; R must respect the family.
BigCount count_strees_refined_general(const Permutation& pi, const std::set<int>& S,
                                      const std::set<int>& R, int p);
BigCount count_dary_refined_general(const Permutation& pi, int d, const std::set<int>& R, int p);
BigCount count_ntrees_refined(const Permutation& pi, const std::set<int>& R, int p);

// Simplified forms for S = {0,1,2} and d = 2: every surviving configuration
// has twice as many hooks as pi has descents, so the outer sum collapses.
BigCount count_unary_binary_refined(const Permutation& pi, const std::set<int>& R, int p);
BigCount count_binary_refined(const Permutation& pi, const std::set<int>& R, int p);

struct CensusQuery {
  TreeFamily family;
  std::optional<std::pair<std::set<int>, int>> refine;  // (R, p)
};

// Dispatches on the family, using the simplified forms when they apply.
BigCount count_census(const Permutation& pi, const CensusQuery& query);

// Number of stack-sorting preimages of pi.
BigCount fertility(const Permutation& pi);

// Preimages with exactly p valleys (padded convention: boundary entries
// below their single neighbor count).
BigCount fertility_by_valleys(const Permutation& pi, int p);

// Preimages with exactly m descents.
BigCount fertility_by_descents(const Permutation& pi, int m);

}  // namespace hookcensus
