#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hookcensus/counting.hpp"
#include "hookcensus/trees.hpp"

using namespace hookcensus;

namespace {

PlaneTree node(int label, std::vector<PlaneTree> kids = {}) {
  return PlaneTree{label, std::move(kids)};
}

// Root 8 with children 7 (children 1, 2), 3, 5; postorder 1 2 7 3 5 8.
PlaneTree wide_example() {
  return node(8, {node(7, {node(1), node(2)}), node(3), node(5)});
}

}  // namespace

TEST_CASE("postorder") {
  CHECK(postorder(wide_example()) == std::vector<int>{1, 2, 7, 3, 5, 8});
  CHECK(postorder(node(5)) == std::vector<int>{5});
  CHECK(postorder(node(3, {node(2), node(1)})) == std::vector<int>{2, 1, 3});
}

TEST_CASE("preorder") {
  CHECK(preorder(node(5)) == std::vector<int>{5});
  CHECK(preorder(node(3, {node(2), node(1)})) == std::vector<int>{3, 2, 1});
  CHECK(preorder(wide_example()) == std::vector<int>{8, 7, 1, 2, 3, 5});
}

TEST_CASE("preorder equals reversed postorder of the reflection") {
  std::mt19937 rng(20240811);
  for (int r = 1; r <= 8; ++r) {
    for (const PlaneShape& shape : enumerate_ntree_shapes(r)) {
      std::vector<int> word(r);
      for (int i = 0; i < r; ++i) word[i] = i + 1;
      std::vector<std::vector<int>> words{word};
      for (int tries = 0; tries < 10; ++tries) {
        std::shuffle(word.begin(), word.end(), rng);
        words.push_back(word);
      }
      for (const auto& w : words) {
        auto t = labeled_from_shape(shape, w);
        if (!t) continue;
        std::vector<int> rev = postorder(reflect(*t));
        std::reverse(rev.begin(), rev.end());
        REQUIRE(preorder(*t) == rev);
        // the root is read last in postorder and is the maximum label
        REQUIRE(postorder(*t).back() == *std::max_element(w.begin(), w.end()));
      }
    }
  }
}

TEST_CASE("labeled_from_shape forces labels in postorder positions") {
  PlaneShape chain{{PlaneShape{{PlaneShape{}}}}};
  auto t = labeled_from_shape(chain, {1, 2, 3});
  REQUIRE(t);
  CHECK(serialize(*t) == "3(2(1))");

  PlaneShape cherry{{PlaneShape{}, PlaneShape{}}};
  auto c = labeled_from_shape(cherry, {1, 2, 3});
  REQUIRE(c);
  CHECK(serialize(*c) == "3(1,2)");

  CHECK(!labeled_from_shape(cherry, {2, 3, 1}));
  CHECK_THROWS_AS(labeled_from_shape(cherry, {1, 2}), std::invalid_argument);
}

TEST_CASE("shape enumeration counts match the standard sequences") {
  auto three = enumerate_ntree_shapes(3);
  REQUIRE(three.size() == 2);  // chain, then cherry in serialization order
  CHECK(serialize(three[0]) == "*(*(*))");
  CHECK(serialize(three[1]) == "*(*,*)");

  CHECK(enumerate_dary_shapes(2, 0).size() == 1);
  CHECK(!enumerate_dary_shapes(2, 0)[0].has_value());
  CHECK(enumerate_plane_shapes({0, 1, 2}, 4).size() == 4);  // Motzkin

  for (int r = 1; r <= 10; ++r) {
    CHECK(BigCount(enumerate_ntree_shapes(r).size()) == catalan(r - 1));
    CHECK(BigCount(enumerate_dary_shapes(2, r).size()) == catalan(r));
    CHECK(BigCount(enumerate_plane_shapes({0, 1, 2}, r).size()) == motzkin(r - 1));
  }

  // no duplicates, and a stable canonical order
  for (int r = 1; r <= 8; ++r) {
    std::set<std::string> seen;
    std::string prev;
    for (const PlaneShape& s : enumerate_ntree_shapes(r)) {
      std::string ser = serialize(s);
      REQUIRE(seen.insert(ser).second);
      REQUIRE(prev < ser);
      prev = ser;
    }
  }
}

TEST_CASE("slot trees with the same plane structure differ by slots") {
  // two placements of children 1 and 2 under 7 in a 4-slot tree
  DaryTree left{7, 4, {DaryTree{1, 4, {}, {}}, DaryTree{2, 4, {}, {}}}, {0, 1}};
  DaryTree right{7, 4, {DaryTree{1, 4, {}, {}}, DaryTree{2, 4, {}, {}}}, {0, 3}};
  CHECK(left != right);
  CHECK(to_plane(left) == to_plane(right));
  CHECK(postorder(left) == postorder(right));
}

TEST_CASE("serialization goldens") {
  CHECK(serialize(wide_example()) == "8(7(1,2),3,5)");
  DaryTree t{3, 2, {DaryTree{2, 2, {}, {}}}, {0}};
  CHECK(serialize(t) == "3(2,_)");
  DaryTree u{3, 2, {DaryTree{2, 2, {}, {}}}, {1}};
  CHECK(serialize(u) == "3(_,2)");
}

TEST_CASE("statistics") {
  PlaneTree t = node(3, {node(2), node(1)});
  CHECK(leaf_count(t) == 2);
  CHECK(profile_count(t, {2}) == 1);
  CHECK(leaf_count(node(5)) == 1);

  DaryTree single{5, 2, {}, {}};
  CHECK(right_edge_count(single) == 0);
  DaryTree chain{3, 2, {DaryTree{2, 2, {DaryTree{1, 2, {}, {}}}, {0}}}, {0}};
  CHECK(right_edge_count(chain) == 0);
  CHECK(leaf_count(chain) == 1);
  CHECK_THROWS_AS(right_edge_count(DaryTree{1, 3, {}, {}}), std::invalid_argument);
}

TEST_CASE("reflect swaps slots end to end") {
  DaryTree t{3, 2, {DaryTree{2, 2, {}, {}}}, {0}};
  CHECK(serialize(reflect(t)) == "3(_,2)");
  CHECK(reflect(reflect(t)) == t);
}
