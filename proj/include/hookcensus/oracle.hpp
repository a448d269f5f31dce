#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hookcensus/counting.hpp"
#include "hookcensus/hooks.hpp"
#include "hookcensus/permutation.hpp"
#include "hookcensus/trees.hpp"

namespace hookcensus::oracle {

// Independent brute-force references. Deliberately naive: their only job is
// to be obviously correct at small n. Bounds are configuration values;
// HOOKCENSUS_ORACLE_MAX_N overrides both.
int max_perm_n();  // default 8: exhaustive sweeps over S_n
int max_hook_n();  // default 6: all hook subsets, doubly exponential

std::vector<Permutation> all_permutations(int n);  // lexicographic

// All sigma with stack_sort(sigma) = pi, and their count.
std::vector<Permutation> brute_preimages(const Permutation& pi);
BigCount brute_fertility(const Permutation& pi);

// Preimage lists for all of S_n at once, keyed by image.
std::map<Permutation, std::vector<Permutation>> brute_preimage_map(int n);

// Optional per-tree filters for the census.
struct CensusFilter {
  std::optional<std::pair<std::set<int>, int>> profile;  // profile_count(R) == p
  std::optional<int> right_edges;                        // binary trees only
};

// Counts decreasing trees of the family whose postorder equals word, by
// enumerating unlabeled shapes and forcing labels in postorder positions.
// word entries must be distinct positive integers.
BigCount brute_tree_census(const std::vector<int>& word, const TreeFamily& family,
                           const CensusFilter& filter = {});

// The trees themselves, for set-level comparisons.
std::vector<PlaneTree> brute_ntree_list(const std::vector<int>& word);
std::vector<PlaneTree> brute_stree_list(const std::vector<int>& word, const std::set<int>& S);
std::vector<DaryTree> brute_dary_list(const std::vector<int>& word, int d);

// Every subset of well-formed hooks with distinct southwest endpoints that
// passes the validity check, ordered like enumerate_configs.
std::vector<HookConfiguration> brute_hook_configs(const Permutation& pi);

}  // namespace hookcensus::oracle
