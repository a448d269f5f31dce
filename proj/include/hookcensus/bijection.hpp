#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hookcensus/hooks.hpp"
#include "hookcensus/trees.hpp"

namespace hookcensus {

// One decreasing tree per color class, aligned with the colors of the
// configuration's diagram. Tree t lives on exactly the values of class t and
// reads them in increasing order in postorder.
struct TreeTuple {
  std::vector<PlaneTree> trees;

  bool operator==(const TreeTuple&) const = default;
};

struct TraceEntry {
  int position = 0;      // the diagram position being attached
  int case_tag = 0;      // 1 = hooked southwest endpoint, 2 = class-guided
  int parent_value = 0;  // the value it was attached under
};

// Builds the decreasing plane tree with postorder equal to the
// configuration's permutation by attaching entries right to left: a hooked
// position goes under its hook's northeast entry, any other position goes
// under the class-tree parent of the latest class member to its left; every
// attachment is as leftmost child. Throws std::invalid_argument when the
// tuple does not match the coloring.
PlaneTree build_tree(const HookConfiguration& config, const TreeTuple& tuple,
                     std::vector<TraceEntry>* trace = nullptr);

// Inverse of build_tree: recovers the unique (configuration, tuple) pair
// producing the tree. The tree's labels must form {1,...,n}.
std::pair<HookConfiguration, TreeTuple> decompose(const PlaneTree& tau);

// One JSON object per line: {"l": position, "case": 1|2, "parent": value}.
std::string trace_json_lines(const std::vector<TraceEntry>& trace);

// All decreasing trees on the given values whose postorder is increasing;
// one per unlabeled shape. Values must be distinct; they are sorted
// internally.
std::vector<PlaneTree> increasing_postorder_trees(std::vector<int> values);

// Slot-level variant: which of the d slots the hook children of each
// northeast point occupy (ascending lists keyed by 1-based position, sizes
// matching the multiplicities w_j), with the tuple given as slot trees. The
// result is the plane construction with slots reinstated: hook children of a
// northeast entry take the chosen slots in southwest order; every other
// vertex keeps the slot pattern of its class tree.
struct DarySlotChoice {
  std::map<int, std::vector<int>> slots_by_ne_pos;
};

DaryTree build_dary_tree(const HookConfiguration& config, const DarySlotChoice& choice,
                         const std::vector<DaryTree>& tuple);

// All slot trees of the given arity on the given values whose postorder is
// increasing.
std::vector<DaryTree> increasing_postorder_dary_trees(std::vector<int> values, int d);

}  // namespace hookcensus
