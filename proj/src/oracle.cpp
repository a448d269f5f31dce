#include "hookcensus/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hookcensus::oracle {

namespace {

std::optional<int> env_override() {
  static std::optional<int> cached = []() -> std::optional<int> {
    const char* raw = std::getenv("HOOKCENSUS_ORACLE_MAX_N");
    if (!raw || !*raw) return std::nullopt;
    return std::atoi(raw);
  }();
  return cached;
}

void require_within(int n, int bound, const char* what) {
  if (n > bound) {
    throw std::domain_error(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds the oracle bound " + std::to_string(bound));
  }
}

}  // namespace

int max_perm_n() { return env_override().value_or(8); }
int max_hook_n() { return env_override().value_or(6); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::vector<Permutation> brute_preimages(const Permutation& pi) {
  require_within(pi.size(), max_perm_n(), "brute_preimages");
  std::vector<Permutation> out;
  for (const Permutation& sigma : all_permutations(pi.size())) {
    if (stack_sort(sigma) == pi) out.push_back(sigma);
  }
  return out;
}

BigCount brute_fertility(const Permutation& pi) {
  return BigCount(brute_preimages(pi).size());
}

std::map<Permutation, std::vector<Permutation>> brute_preimage_map(int n) {
  require_within(n, max_perm_n(), "brute_preimage_map");
  std::map<Permutation, std::vector<Permutation>> out;
  for (const Permutation& sigma : all_permutations(n)) {
    out[stack_sort(sigma)].push_back(sigma);
  }
  return out;
}

namespace {

void check_word(const std::vector<int>& word) {
  std::set<int> seen;
  for (int v : word) {
    if (v < 1) throw std::invalid_argument("census word entries must be positive");
    if (!seen.insert(v).second) throw std::invalid_argument("census word entries must be distinct");
  }
}

template <typename Tree>
bool passes(const Tree& t, const CensusFilter& filter) {
  if (filter.profile) {
    const auto& [R, p] = *filter.profile;
    if (profile_count(t, R) != p) return false;
  }
  if (filter.right_edges) {
    if constexpr (std::is_same_v<Tree, DaryTree>) {
      if (right_edge_count(t) != *filter.right_edges) return false;
    } else {
      throw std::invalid_argument("right-edge filter applies to binary trees only");
    }
  }
  return true;
}

}  // namespace

BigCount brute_tree_census(const std::vector<int>& word, const TreeFamily& family,
                           const CensusFilter& filter) {
  const int n = static_cast<int>(word.size());
  require_within(n, max_perm_n(), "brute_tree_census");
  check_word(word);
  BigCount count = 0;
  switch (family.kind) {
    case TreeFamily::Kind::NTree:
    case TreeFamily::Kind::STree: {
      if (n == 0) return 0;
      auto shapes = family.kind == TreeFamily::Kind::NTree
                        ? enumerate_ntree_shapes(n)
                        : enumerate_plane_shapes(family.child_counts, n);
      for (const PlaneShape& s : shapes) {
        auto t = labeled_from_shape(s, word);
        if (t && passes(*t, filter)) ++count;
      }
      break;
    }
    case TreeFamily::Kind::Dary: {
      for (const auto& s : enumerate_dary_shapes(family.arity, n)) {
        if (!s) {
          // the empty tree: no vertices, every statistic is zero
          bool ok = true;
          if (filter.profile && filter.profile->second != 0) ok = false;
          if (filter.right_edges && *filter.right_edges != 0) ok = false;
          if (ok) ++count;
          continue;
        }
        auto t = labeled_from_shape(*s, word);
        if (t && passes(*t, filter)) ++count;
      }
      break;
    }
  }
  return count;
}

std::vector<PlaneTree> brute_ntree_list(const std::vector<int>& word) {
  require_within(static_cast<int>(word.size()), max_perm_n(), "brute_ntree_list");
  check_word(word);
  std::vector<PlaneTree> out;
  if (word.empty()) return out;
  for (const PlaneShape& s : enumerate_ntree_shapes(static_cast<int>(word.size()))) {
    auto t = labeled_from_shape(s, word);
    if (t) out.push_back(std::move(*t));
  }
  return out;
}

std::vector<PlaneTree> brute_stree_list(const std::vector<int>& word, const std::set<int>& S) {
  require_within(static_cast<int>(word.size()), max_perm_n(), "brute_stree_list");
  check_word(word);
  std::vector<PlaneTree> out;
  if (word.empty()) return out;
  for (const PlaneShape& s : enumerate_plane_shapes(S, static_cast<int>(word.size()))) {
    auto t = labeled_from_shape(s, word);
    if (t) out.push_back(std::move(*t));
  }
  return out;
}

std::vector<DaryTree> brute_dary_list(const std::vector<int>& word, int d) {
  require_within(static_cast<int>(word.size()), max_perm_n(), "brute_dary_list");
  check_word(word);
  std::vector<DaryTree> out;
  if (word.empty()) return out;
  for (const auto& s : enumerate_dary_shapes(d, static_cast<int>(word.size()))) {
    auto t = labeled_from_shape(*s, word);
    if (t) out.push_back(std::move(*t));
  }
  return out;
}

namespace {

void hook_subsets(const Permutation& pi, int p, std::vector<Hook>& cur,
                  std::vector<HookConfiguration>& out) {
  const int n = pi.size();
  if (p == n) {
    if (is_valid(pi, cur)) out.push_back(HookConfiguration{pi, cur});
    return;
  }
  hook_subsets(pi, p + 1, cur, out);  // no hook at this southwest point
  for (int j = p + 1; j <= n; ++j) {
    if (pi.at(p) >= pi.at(j)) continue;
    cur.push_back(Hook{p, j});
    hook_subsets(pi, p + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<HookConfiguration> brute_hook_configs(const Permutation& pi) {
  require_within(pi.size(), max_hook_n(), "brute_hook_configs");
  std::vector<HookConfiguration> out;
  if (pi.size() == 0) {
    out.push_back(HookConfiguration{pi, {}});
    return out;
  }
  std::vector<Hook> cur;
  hook_subsets(pi, 1, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hookcensus::oracle
