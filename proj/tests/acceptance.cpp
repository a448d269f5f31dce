// End-to-end verification binary. Each numbered criterion prints one
// PASS/FAIL line; the process exits nonzero if any fails. All comparisons
// are exact integer equalities.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "hookcensus/bijection.hpp"
#include "hookcensus/formulas.hpp"
#include "hookcensus/oracle.hpp"

using namespace hookcensus;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << " ("
            << ms << " ms)";
  if (!error.empty()) std::cout << " — " << error;
  std::cout << "\n";
  if (!ok) ++failures;
}

const std::vector<std::set<int>> kProfileSubsets{{},    {0},    {1},    {2},
                                                 {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};

bool worked_stack_sort() {
  return stack_sort(Permutation::parse("35214")).to_string() == "31245";
}

bool fertility_vs_brute() {
  for (int n = 1; n <= 7; ++n) {
    auto preimages = oracle::brute_preimage_map(n);
    for (const Permutation& pi : oracle::all_permutations(n)) {
      auto it = preimages.find(pi);
      BigCount expected = it == preimages.end() ? 0 : static_cast<int>(it->second.size());
      if (fertility(pi) != expected) return false;
    }
  }
  return true;
}

bool ntrees_vs_census() {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& pi : oracle::all_permutations(n)) {
      if (count_ntrees_postorder(pi) !=
          oracle::brute_tree_census(pi.entries(), TreeFamily::ntree())) {
        return false;
      }
    }
  }
  return true;
}

bool strees_vs_census() {
  const std::vector<std::set<int>> families{{0, 1}, {0, 2}, {0, 1, 2}, {0, 3}, {0, 1, 3}};
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& pi : oracle::all_permutations(n)) {
      for (const auto& S : families) {
        if (count_strees_postorder(pi, S) !=
            oracle::brute_tree_census(pi.entries(), TreeFamily::stree(S))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool dary_vs_census() {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& pi : oracle::all_permutations(n)) {
      for (int d = 1; d <= 3; ++d) {
        if (count_dary_postorder(pi, d) !=
            oracle::brute_tree_census(pi.entries(), TreeFamily::dary(d))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool refined_vs_census() {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& pi : oracle::all_permutations(n)) {
      for (const auto& R : kProfileSubsets) {
        for (int p = 0; p <= n; ++p) {
          oracle::CensusFilter filter;
          filter.profile = {{R, p}};
          BigCount s_want =
              oracle::brute_tree_census(pi.entries(), TreeFamily::stree({0, 1, 2}), filter);
          BigCount s_general = count_strees_refined_general(pi, {0, 1, 2}, R, p);
          BigCount s_fast = count_unary_binary_refined(pi, R, p);
          if (s_general != s_want || s_fast != s_want) return false;
          BigCount d_want =
              oracle::brute_tree_census(pi.entries(), TreeFamily::dary(2), filter);
          BigCount d_general = count_dary_refined_general(pi, 2, R, p);
          BigCount d_fast = count_binary_refined(pi, R, p);
          if (d_general != d_want || d_fast != d_want) return false;
        }
      }
    }
  }
  return true;
}

bool statistic_refined_vs_brute() {
  for (int n = 1; n <= 6; ++n) {
    auto preimages = oracle::brute_preimage_map(n);
    for (const Permutation& pi : oracle::all_permutations(n)) {
      std::map<int, BigCount> by_valleys, by_descents;
      if (auto it = preimages.find(pi); it != preimages.end()) {
        for (const Permutation& sigma : it->second) {
          by_valleys[padded_valleys(sigma)] += 1;
          by_descents[static_cast<int>(descents(sigma).size())] += 1;
        }
      }
      BigCount valley_total = 0, descent_total = 0;
      for (int s = 0; s <= n; ++s) {
        BigCount v = fertility_by_valleys(pi, s);
        BigCount m = fertility_by_descents(pi, s);
        if (v != (by_valleys.count(s) ? by_valleys[s] : BigCount(0))) return false;
        if (m != (by_descents.count(s) ? by_descents[s] : BigCount(0))) return false;
        valley_total += v;
        descent_total += m;
      }
      BigCount f = fertility(pi);
      if (valley_total != f || descent_total != f) return false;
    }
  }
  return true;
}

bool closed_forms_vs_dp() {
  for (int r = 1; r <= 12; ++r) {
    for (int u = 0; u <= r; ++u) {
      for (const auto& R : {std::set<int>{0}, std::set<int>{1}, std::set<int>{2},
                            std::set<int>{0, 1, 2}}) {
        if (unary_binary_profile_closed_form(R, r, u) !=
            count_strees_refined({0, 1, 2}, r, R, u)) {
          return false;
        }
        if (binary_profile_closed_form(R, r, u) != count_dary_refined(2, r, R, u)) return false;
      }
      // complement identity from the table caption
      const std::vector<std::pair<std::set<int>, std::set<int>>> pairs{
          {{1, 2}, {0}}, {{0, 2}, {1}}, {{0, 1}, {2}}};
      for (const auto& [Rc, Ra] : pairs) {
        if (count_strees_refined({0, 1, 2}, r, Rc, u) !=
            unary_binary_profile_closed_form(Ra, r, r - u)) {
          return false;
        }
        if (count_dary_refined(2, r, Rc, u) != binary_profile_closed_form(Ra, r, r - u)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool enumerator_complete() {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& pi : oracle::all_permutations(n)) {
      if (enumerate_configs(pi) != oracle::brute_hook_configs(pi)) return false;
    }
  }
  return true;
}

bool construction_round_trips() {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& pi : oracle::all_permutations(n)) {
      std::set<std::string> built;
      for (const HookConfiguration& config : enumerate_configs(pi)) {
        ColoredDiagram diagram = color(config);
        std::vector<std::vector<PlaneTree>> pools;
        for (const auto& cls : diagram.classes) {
          std::vector<int> vals;
          for (int k : cls) vals.push_back(pi.at(k));
          pools.push_back(increasing_postorder_trees(vals));
        }
        std::vector<size_t> idx(pools.size(), 0);
        while (true) {
          TreeTuple tuple;
          for (size_t g = 0; g < pools.size(); ++g) tuple.trees.push_back(pools[g][idx[g]]);
          PlaneTree tau = build_tree(config, tuple);
          if (postorder(tau) != pi.entries()) return false;
          if (!built.insert(serialize(tau)).second) return false;
          auto [config2, tuple2] = decompose(tau);
          if (!(config2 == config) || !(tuple2 == tuple)) return false;
          size_t g = 0;
          while (g < pools.size() && ++idx[g] == pools[g].size()) idx[g++] = 0;
          if (g == pools.size()) break;
        }
      }
      std::set<std::string> census;
      for (const PlaneTree& t : oracle::brute_ntree_list(pi.entries())) {
        census.insert(serialize(t));
        auto [config, tuple] = decompose(t);
        if (!(build_tree(config, tuple) == t)) return false;
      }
      if (built != census) return false;
    }
  }
  return true;
}

bool global_identities() {
  BigCount factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    factorial *= n;
    BigCount total = 0;
    for (const Permutation& pi : oracle::all_permutations(n)) total += fertility(pi);
    if (total != factorial) return false;
  }
  for (int n = 1; n <= 10; ++n) {
    if (fertility(Permutation::identity(n)) != catalan(n)) return false;
  }
  for (int n = 1; n <= 7; ++n) {
    for (const Permutation& pi : oracle::all_permutations(n)) {
      if (pi.at(n) != n && !enumerate_configs(pi).empty()) return false;
    }
  }
  return true;
}

bool coloring_invariants() {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& pi : oracle::all_permutations(n)) {
      for (const HookConfiguration& config : enumerate_configs(pi)) {
        ColoredDiagram d = color(config);
        int total = 0;
        for (int q : d.q) {
          if (q < 1) return false;  // composition parts are positive
          total += q;
        }
        if (total != n) return false;
        for (const auto& cls : d.classes) {  // classes increase left to right
          for (size_t g = 1; g < cls.size(); ++g) {
            if (pi.at(cls[g - 1]) >= pi.at(cls[g])) return false;
          }
        }
        int ne_count = 0;
        for (int j = 1; j <= n; ++j) {
          if (d.w[j - 1] > 0) {
            ++ne_count;
            if (d.q[d.color_of[j - 1]] != 1) return false;  // northeast classes are singletons
          }
        }
        if (static_cast<int>(d.theta.size()) - 1 != d.m - ne_count) return false;
        if (d.m_hat != d.m - ne_count) return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "worked example s(35214) = 31245", worked_stack_sort);
  criterion(2, "fertility equals brute preimage counts, n = 1..7", fertility_vs_brute);
  criterion(3, "plane tree counts equal the census, n = 1..6", ntrees_vs_census);
  criterion(4, "S-tree counts equal the census for five child-count sets, n = 1..6",
            strees_vs_census);
  criterion(5, "d-ary counts equal the census for d = 1,2,3, n = 1..6", dary_vs_census);
  criterion(6, "profile-refined counts and their fast paths equal the census, n = 1..5",
            refined_vs_census);
  criterion(7, "valley- and descent-refined fertility equal filtered preimages, n = 1..6",
            statistic_refined_vs_brute);
  criterion(8, "all eight closed forms equal the dynamic programs, r = 1..12",
            closed_forms_vs_dp);
  criterion(9, "configuration enumerator matches exhaustive filtering, n = 1..6",
            enumerator_complete);
  criterion(10, "construction and decomposition are mutually inverse, n = 1..6",
            construction_round_trips);
  criterion(11, "fertility sums to n!, identity fertility is Catalan, last-entry rule",
            global_identities);
  criterion(12, "coloring invariants hold on every configuration, n = 1..6",
            coloring_invariants);

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
