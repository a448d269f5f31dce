#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "hookcensus/oracle.hpp"

using namespace hookcensus;

TEST_CASE("preimage enumeration") {
  auto pre = oracle::brute_preimages(Permutation::identity(3));
  REQUIRE(pre.size() == 5);
  std::vector<std::string> names;
  for (const auto& p : pre) names.push_back(p.to_string());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"123", "132", "213", "312", "321"});

  CHECK(oracle::brute_fertility(Permutation::parse("231")) == 0);
  CHECK(oracle::brute_fertility(Permutation::identity(4)) == 14);
  CHECK(oracle::brute_fertility(Permutation::parse("213")) == 1);

  auto map = oracle::brute_preimage_map(3);
  CHECK(map[Permutation::identity(3)].size() == 5);
  CHECK(map.count(Permutation::parse("231")) == 0);
}

TEST_CASE("tree census") {
  CHECK(oracle::brute_tree_census({2, 1, 3}, TreeFamily::ntree()) == 1);
  CHECK(oracle::brute_tree_census({1, 2, 3}, TreeFamily::ntree()) == 2);
  CHECK(oracle::brute_tree_census({1, 2, 3}, TreeFamily::stree({0, 1, 2})) == 2);
  CHECK(oracle::brute_tree_census({2, 1, 3}, TreeFamily::dary(2)) == 1);
  CHECK(oracle::brute_tree_census({}, TreeFamily::dary(2)) == 1);
  CHECK(oracle::brute_tree_census({}, TreeFamily::ntree()) == 0);

  // labels need not be 1..n, only distinct
  auto list = oracle::brute_ntree_list({1, 2, 7, 3, 5, 8});
  bool has_wide_tree = false;
  for (const auto& t : list) {
    if (serialize(t) == "8(7(1,2),3,5)") has_wide_tree = true;
  }
  CHECK(has_wide_tree);
  CHECK(BigCount(list.size()) ==
        oracle::brute_tree_census({1, 2, 7, 3, 5, 8}, TreeFamily::ntree()));

  oracle::CensusFilter leaves2;
  leaves2.profile = {{std::set<int>{0}, 2}};
  CHECK(oracle::brute_tree_census({2, 1, 3}, TreeFamily::dary(2), leaves2) == 1);

  oracle::CensusFilter one_right_edge;
  one_right_edge.right_edges = 1;
  CHECK(oracle::brute_tree_census({1, 2, 3}, TreeFamily::dary(2), one_right_edge) == 3);

  CHECK_THROWS_AS(oracle::brute_tree_census({1, 1}, TreeFamily::ntree()),
                  std::invalid_argument);
}

TEST_CASE("hook configuration filtering") {
  CHECK(oracle::brute_hook_configs(Permutation::parse("21")).empty());
  auto id = oracle::brute_hook_configs(Permutation::identity(4));
  REQUIRE(id.size() == 1);
  CHECK(id[0].hooks.empty());
  CHECK(oracle::brute_hook_configs(Permutation::parse("213")).size() == 1);
}

TEST_CASE("bounds are enforced") {
  CHECK(oracle::max_perm_n() >= 7);
  CHECK_THROWS_AS(oracle::brute_preimages(Permutation::identity(oracle::max_perm_n() + 1)),
                  std::domain_error);
  CHECK_THROWS_AS(oracle::brute_hook_configs(Permutation::identity(oracle::max_hook_n() + 1)),
                  std::domain_error);
}
