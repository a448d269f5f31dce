#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hookcensus {

// Rooted ordered tree with positive integer labels, variable arity.
// "Decreasing" (every child label smaller than its parent's) is a property
// checked by predicates below, not enforced by the type.
struct PlaneTree {
  int label = 0;
  std::vector<PlaneTree> children;

  bool operator==(const PlaneTree&) const = default;
};

// Tree with a fixed number of child slots per vertex, each possibly empty.
// Only occupied slots are stored: children[g] sits in slot slots[g], with
// slots strictly increasing in [0, arity). Slot identity is significant, so
// equality is slot-exact.
struct DaryTree {
  int label = 0;
  int arity = 0;
  std::vector<DaryTree> children;
  std::vector<int> slots;

  bool operator==(const DaryTree&) const = default;
};

// Unlabeled shapes of the two flavors.
struct PlaneShape {
  std::vector<PlaneShape> children;

  bool operator==(const PlaneShape&) const = default;
  bool operator<(const PlaneShape& other) const;  // by serialization
};

struct DaryShape {
  int arity = 0;
  std::vector<DaryShape> children;
  std::vector<int> slots;

  bool operator==(const DaryShape&) const = default;
};

// A family of plane trees: unbounded arity, child counts drawn from a finite
// set S (0 in S), or d ordered slots per vertex.
struct TreeFamily {
  enum class Kind { NTree, STree, Dary };

  Kind kind = Kind::NTree;
  std::set<int> child_counts;  // STree only
  int arity = 0;               // Dary only

  static TreeFamily ntree() { return {Kind::NTree, {}, 0}; }
  static TreeFamily stree(std::set<int> S) { return {Kind::STree, std::move(S), 0}; }
  static TreeFamily dary(int d) { return {Kind::Dary, {}, d}; }

  bool operator==(const TreeFamily&) const = default;
};

int vertex_count(const PlaneTree&);
int vertex_count(const DaryTree&);
int vertex_count(const PlaneShape&);
int vertex_count(const DaryShape&);

bool is_decreasing(const PlaneTree&);
bool is_decreasing(const DaryTree&);

// Subtrees of the root left to right, then the root. Empty slots contribute
// nothing.
std::vector<int> postorder(const PlaneTree&);
std::vector<int> postorder(const DaryTree&);

// Root first, then subtrees left to right. Equals
// reverse(postorder(reflect(tau))).
std::vector<int> preorder(const PlaneTree&);
std::vector<int> preorder(const DaryTree&);

// Mirror image: child order reversed recursively; for slot trees, slot h
// maps to slot arity-1-h.
PlaneTree reflect(const PlaneTree&);
DaryTree reflect(const DaryTree&);

PlaneTree to_plane(const DaryTree&);  // forget slot positions

// Assigns word entries to the shape's vertices in postorder-visit order and
// returns the labeled tree if the decreasing property holds, nullopt
// otherwise. word.size() must equal the shape's vertex count. A sorted word
// always succeeds: postorder visits every vertex after its whole subtree, so
// increasing postorder labels are automatically decreasing along edges.
std::optional<PlaneTree> labeled_from_shape(const PlaneShape&, const std::vector<int>& word);
std::optional<DaryTree> labeled_from_shape(const DaryShape&, const std::vector<int>& word);

// Every S-tree shape with r vertices (child counts drawn from S, 0 in S),
// each exactly once, in a canonical deterministic order (sorted by
// serialization). Requires r >= 1.
std::vector<PlaneShape> enumerate_plane_shapes(const std::set<int>& child_counts, int r);

// Unbounded-arity trees handled by capping child counts at r-1, which is the
// most any vertex of an r-vertex tree can have.
std::vector<PlaneShape> enumerate_ntree_shapes(int r);

// Every d-ary shape with r vertices; nullopt denotes the empty tree, emitted
// exactly for r = 0. Requires r >= 0, d >= 1.
std::vector<std::optional<DaryShape>> enumerate_dary_shapes(int d, int r);

// Number of vertices whose child count (occupied slots, for slot trees) lies
// in R.
int profile_count(const PlaneTree&, const std::set<int>& R);
int profile_count(const DaryTree&, const std::set<int>& R);

int leaf_count(const PlaneTree&);
int leaf_count(const DaryTree&);

// Occupied right slots of a binary (arity 2) tree.
int right_edge_count(const DaryTree&);

// "8(7(1,2),3,5)" for plane trees; empty slots written "_", as in "3(2,_)".
std::string serialize(const PlaneTree&);
std::string serialize(const DaryTree&);
std::string serialize(const PlaneShape&);
std::string serialize(const DaryShape&);

}  // namespace hookcensus
