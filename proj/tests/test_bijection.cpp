#include <doctest.h>

#include <algorithm>
#include <set>

#include "hookcensus/bijection.hpp"
#include "hookcensus/oracle.hpp"

using namespace hookcensus;

namespace {

PlaneTree node(int label, std::vector<PlaneTree> kids = {}) {
  return PlaneTree{label, std::move(kids)};
}

TreeTuple singleton_tuple(const HookConfiguration& config) {
  ColoredDiagram d = color(config);
  TreeTuple tuple;
  for (const auto& cls : d.classes) {
    REQUIRE(cls.size() == 1);
    tuple.trees.push_back(node(config.pi.at(cls[0])));
  }
  return tuple;
}

// every tuple choice for a configuration: one increasing-postorder tree per
// color class
std::vector<TreeTuple> all_tuples(const HookConfiguration& config) {
  ColoredDiagram d = color(config);
  std::vector<std::vector<PlaneTree>> pools;
  for (const auto& cls : d.classes) {
    std::vector<int> vals;
    for (int k : cls) vals.push_back(config.pi.at(k));
    pools.push_back(increasing_postorder_trees(vals));
  }
  std::vector<TreeTuple> out;
  std::vector<size_t> idx(pools.size(), 0);
  while (true) {
    TreeTuple t;
    for (size_t g = 0; g < pools.size(); ++g) t.trees.push_back(pools[g][idx[g]]);
    out.push_back(std::move(t));
    size_t g = 0;
    while (g < pools.size() && ++idx[g] == pools[g].size()) idx[g++] = 0;
    if (g == pools.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("construction on the worked examples") {
  // identity with the empty configuration reproduces the class tree
  HookConfiguration id3{Permutation::identity(3), {}};
  PlaneTree cherry = node(3, {node(1), node(2)});
  CHECK(build_tree(id3, TreeTuple{{cherry}}) == cherry);
  PlaneTree chain = node(3, {node(2, {node(1)})});
  CHECK(build_tree(id3, TreeTuple{{chain}}) == chain);

  HookConfiguration c213{Permutation::parse("213"), {{1, 3}, {2, 3}}};
  PlaneTree built = build_tree(c213, singleton_tuple(c213));
  CHECK(serialize(built) == "3(2,1)");
  CHECK(postorder(built) == std::vector<int>{2, 1, 3});
}

TEST_CASE("construction rejects mismatched tuples") {
  HookConfiguration id3{Permutation::identity(3), {}};
  // right labels, wrong reading order: postorder 1 3 2 is not increasing
  PlaneTree bad = node(3, {node(1), node(2)});
  std::swap(bad.children[0], bad.children[1]);
  CHECK_THROWS_AS(build_tree(id3, TreeTuple{{bad}}), std::invalid_argument);
  // wrong label set
  CHECK_THROWS_AS(build_tree(id3, TreeTuple{{node(4, {node(1), node(2)})}}),
                  std::invalid_argument);
  // wrong tuple length
  CHECK_THROWS_AS(build_tree(id3, TreeTuple{{node(3, {node(1), node(2)}), node(7)}}),
                  std::invalid_argument);
}

TEST_CASE("attachment trace") {
  HookConfiguration c213{Permutation::parse("213"), {{1, 3}, {2, 3}}};
  std::vector<TraceEntry> trace;
  build_tree(c213, singleton_tuple(c213), &trace);
  REQUIRE(trace.size() == 2);
  CHECK(trace_json_lines(trace) ==
        "{\"l\": 2, \"case\": 1, \"parent\": 3}\n"
        "{\"l\": 1, \"case\": 1, \"parent\": 3}\n");

  // class-guided attachments report case 2
  HookConfiguration id3{Permutation::identity(3), {}};
  trace.clear();
  build_tree(id3, TreeTuple{{node(3, {node(1), node(2)})}}, &trace);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].case_tag == 2);
  CHECK(trace[1].case_tag == 2);
}

TEST_CASE("decomposition of the worked examples") {
  auto [cfg_chain, tup_chain] = decompose(node(3, {node(2, {node(1)})}));
  CHECK(cfg_chain.hooks.empty());
  CHECK(tup_chain.trees.size() == 1);

  auto [cfg, tup] = decompose(node(3, {node(2), node(1)}));
  CHECK(cfg.hooks == std::vector<Hook>{{1, 3}, {2, 3}});
  REQUIRE(tup.trees.size() == 3);
  for (const auto& t : tup.trees) CHECK(t.children.empty());

  auto [cfg_cherry, tup_cherry] = decompose(node(3, {node(1), node(2)}));
  CHECK(cfg_cherry.hooks.empty());
  CHECK(tup_cherry.trees.size() == 1);
}

TEST_CASE("both round trips are identities and the image is the full census") {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& pi : oracle::all_permutations(n)) {
      std::set<std::string> built;
      for (const HookConfiguration& config : enumerate_configs(pi)) {
        for (const TreeTuple& tuple : all_tuples(config)) {
          PlaneTree tau = build_tree(config, tuple);
          REQUIRE(postorder(tau) == pi.entries());
          REQUIRE(built.insert(serialize(tau)).second);  // injective
          auto [config2, tuple2] = decompose(tau);
          REQUIRE(config2 == config);
          REQUIRE(tuple2 == tuple);
        }
      }
      std::set<std::string> census;
      for (const PlaneTree& t : oracle::brute_ntree_list(pi.entries())) {
        census.insert(serialize(t));
        auto [config, tuple] = decompose(t);
        REQUIRE(build_tree(config, tuple) == t);
      }
      REQUIRE(built == census);  // surjective
    }
  }
}

TEST_CASE("class trees sit inside the built tree subtree by subtree") {
  // for vertices of one class, the subtree of the class parent containing a
  // class child has the same index in the class tree and in the full tree
  Permutation pi = Permutation::parse("14235");
  for (const HookConfiguration& config : enumerate_configs(pi)) {
    ColoredDiagram d = color(config);
    for (const TreeTuple& tuple : all_tuples(config)) {
      PlaneTree tau = build_tree(config, tuple);
      auto [config2, tuple2] = decompose(tau);
      REQUIRE(tuple2 == tuple);
    }
  }
}

namespace {

void slot_subsets(int d, int w, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == w) {
      out.push_back(cur);
      return;
    }
    for (int s = start; s < d; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

TEST_CASE("slot-level construction hits every slot tree exactly once") {
  for (int d = 2; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      for (const Permutation& pi : oracle::all_permutations(n)) {
        std::set<std::string> built;
        ConfigFilter filter;
        std::set<int> S{0};
        for (int j = 1; j <= d; ++j) S.insert(j);
        filter.allowed_w = S;
        for_each_config_filtered(pi, filter, [&](const HookConfiguration& config) {
          ColoredDiagram diag = color(config);
          std::vector<std::vector<DaryTree>> pools;
          for (const auto& cls : diag.classes) {
            std::vector<int> vals;
            for (int k : cls) vals.push_back(pi.at(k));
            pools.push_back(increasing_postorder_dary_trees(vals, d));
          }
          std::vector<int> ne;
          std::vector<std::vector<std::vector<int>>> slot_pools;
          for (int j = 1; j <= n; ++j) {
            if (diag.w[j - 1] > 0) {
              ne.push_back(j);
              slot_pools.emplace_back();
              slot_subsets(d, diag.w[j - 1], slot_pools.back());
            }
          }
          std::vector<size_t> ti(pools.size(), 0), si(slot_pools.size(), 0);
          while (true) {
            std::vector<DaryTree> tuple;
            for (size_t g = 0; g < pools.size(); ++g) tuple.push_back(pools[g][ti[g]]);
            DarySlotChoice choice;
            for (size_t g = 0; g < ne.size(); ++g) {
              choice.slots_by_ne_pos[ne[g]] = slot_pools[g][si[g]];
            }
            DaryTree tau = build_dary_tree(config, choice, tuple);
            REQUIRE(postorder(tau) == pi.entries());
            REQUIRE(is_decreasing(tau));
            REQUIRE(built.insert(serialize(tau)).second);
            size_t g = 0;
            while (g < pools.size() && ++ti[g] == pools[g].size()) ti[g++] = 0;
            if (g < pools.size()) continue;
            size_t h = 0;
            while (h < slot_pools.size() && ++si[h] == slot_pools[h].size()) si[h++] = 0;
            if (h == slot_pools.size()) break;
          }
        });
        std::set<std::string> census;
        for (const DaryTree& t : oracle::brute_dary_list(pi.entries(), d)) {
          census.insert(serialize(t));
        }
        REQUIRE(built == census);
      }
    }
  }
}
