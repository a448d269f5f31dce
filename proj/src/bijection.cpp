#include "hookcensus/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookcensus {

namespace {

void collect_parents(const PlaneTree& t, int parent, std::vector<int>& parent_of) {
  parent_of[t.label] = parent;
  for (const auto& c : t.children) collect_parents(c, t.label, parent_of);
}

void collect_children(const PlaneTree& t, std::vector<std::vector<int>>& kids) {
  for (const auto& c : t.children) {
    kids[t.label].push_back(c.label);
    collect_children(c, kids);
  }
}

PlaneTree assemble(int value, const std::vector<std::vector<int>>& kids) {
  PlaneTree t;
  t.label = value;
  for (int c : kids[value]) t.children.push_back(assemble(c, kids));
  return t;
}

std::vector<int> class_values(const Permutation& pi, const std::vector<int>& positions) {
  std::vector<int> vals;
  vals.reserve(positions.size());
  for (int k : positions) vals.push_back(pi.at(k));
  return vals;
}

void check_tuple(const HookConfiguration& config, const ColoredDiagram& diagram,
                 const std::vector<PlaneTree>& trees) {
  if (static_cast<int>(trees.size()) != diagram.m + 1) {
    throw std::invalid_argument("tree tuple size does not match color count");
  }
  for (int t = 0; t <= diagram.m; ++t) {
    if (!is_decreasing(trees[t])) {
      throw std::invalid_argument("tuple tree " + std::to_string(t) + " is not decreasing");
    }
    if (postorder(trees[t]) != class_values(config.pi, diagram.classes[t])) {
      throw std::invalid_argument("tuple tree " + std::to_string(t) +
                                  " does not read its color class in increasing order");
    }
  }
}

}  // namespace

PlaneTree build_tree(const HookConfiguration& config, const TreeTuple& tuple,
                     std::vector<TraceEntry>* trace) {
  const Permutation& pi = config.pi;
  const int n = pi.size();
  if (n == 0) throw std::invalid_argument("build_tree: permutation must be nonempty");
  ColoredDiagram diagram = color(config);
  check_tuple(config, diagram, tuple.trees);

  std::vector<int> tuple_parent(n + 1, 0);
  for (const auto& t : tuple.trees) collect_parents(t, 0, tuple_parent);

  std::vector<int> hook_target(n + 1, 0);
  for (const Hook& h : config.hooks) hook_target[h.sw] = h.ne;

  std::vector<std::vector<int>> kids(n + 1);
  for (int l = n - 1; l >= 1; --l) {
    int parent_value = 0;
    int case_tag = 0;
    if (hook_target[l] != 0) {
      parent_value = pi.at(hook_target[l]);
      case_tag = 1;
    } else {
      const int r = diagram.color_of[l];  // color of position l+1
      const auto& members = diagram.classes[r];
      auto it = std::upper_bound(members.begin(), members.end(), l);
      if (it == members.begin()) {
        throw std::logic_error("build_tree: no class member left of attachment point");
      }
      const int u = *std::prev(it);
      parent_value = tuple_parent[pi.at(u)];
      if (parent_value == 0) {
        throw std::logic_error("build_tree: class member has no tuple parent");
      }
      case_tag = 2;
    }
    kids[parent_value].insert(kids[parent_value].begin(), pi.at(l));
    if (trace) trace->push_back(TraceEntry{l, case_tag, parent_value});
  }
  return assemble(pi.at(n), kids);
}

std::pair<HookConfiguration, TreeTuple> decompose(const PlaneTree& tau) {
  Permutation pi(postorder(tau));
  const int n = pi.size();

  std::vector<int> parent_of(n + 1, 0);
  std::vector<std::vector<int>> kids(n + 1);
  collect_parents(tau, 0, parent_of);
  collect_children(tau, kids);

  // Hooks join the children of every vertex that is the parent of a descent
  // top.
  std::vector<char> hook_parent(n + 1, 0);
  for (int i : descents(pi)) hook_parent[parent_of[pi.at(i)]] = 1;
  std::vector<Hook> hooks;
  for (int v = 1; v <= n; ++v) {
    if (!hook_parent[v]) continue;
    for (int c : kids[v]) hooks.push_back(Hook{pi.position_of(c), pi.position_of(v)});
  }
  std::sort(hooks.begin(), hooks.end());

  HookConfiguration config{pi, hooks};
  ColoredDiagram diagram = color(config);

  TreeTuple tuple;
  tuple.trees.resize(diagram.m + 1);
  for (int t = 0; t <= diagram.m; ++t) {
    std::vector<int> vals = class_values(pi, diagram.classes[t]);
    std::vector<char> in_class(n + 1, 0);
    for (int v : vals) in_class[v] = 1;

    // parent within the class = nearest proper ancestor in the class;
    // children keep the order of the subtrees of tau that contain them
    std::vector<std::vector<std::pair<int, int>>> indexed_kids(n + 1);  // (subtree idx, value)
    int root = 0;
    for (int v : vals) {
      int walk = v;
      int via = 0;
      while (parent_of[walk] != 0) {
        via = walk;
        walk = parent_of[walk];
        if (in_class[walk]) break;
      }
      if (parent_of[v] == 0 || !in_class[walk]) {
        root = v;
        continue;
      }
      const auto& tau_kids = kids[walk];
      int subtree = -1;
      for (size_t g = 0; g < tau_kids.size(); ++g) {
        if (tau_kids[g] == via) subtree = static_cast<int>(g);
      }
      if (subtree < 0) throw std::logic_error("decompose: broken ancestor chain");
      indexed_kids[walk].push_back({subtree, v});
    }
    if (root == 0) throw std::logic_error("decompose: class has no root");
    std::vector<std::vector<int>> class_kids(n + 1);
    for (int v : vals) {
      auto& ik = indexed_kids[v];
      std::sort(ik.begin(), ik.end());
      for (size_t g = 1; g < ik.size(); ++g) {
        if (ik[g].first == ik[g - 1].first) {
          throw std::logic_error("decompose: two class children share a subtree");
        }
      }
      for (const auto& [idx, val] : ik) class_kids[v].push_back(val);
    }
    tuple.trees[t] = assemble(root, class_kids);
  }
  return {std::move(config), std::move(tuple)};
}

std::string trace_json_lines(const std::vector<TraceEntry>& trace) {
  std::string out;
  for (const auto& e : trace) {
    out += "{\"l\": " + std::to_string(e.position) + ", \"case\": " + std::to_string(e.case_tag) +
           ", \"parent\": " + std::to_string(e.parent_value) + "}\n";
  }
  return out;
}

std::vector<PlaneTree> increasing_postorder_trees(std::vector<int> values) {
  if (values.empty()) throw std::invalid_argument("increasing_postorder_trees: empty value set");
  std::sort(values.begin(), values.end());
  std::vector<PlaneTree> out;
  for (const PlaneShape& s : enumerate_ntree_shapes(static_cast<int>(values.size()))) {
    auto t = labeled_from_shape(s, values);
    if (!t) throw std::logic_error("sorted labeling unexpectedly failed");
    out.push_back(std::move(*t));
  }
  return out;
}

std::vector<DaryTree> increasing_postorder_dary_trees(std::vector<int> values, int d) {
  if (values.empty()) {
    throw std::invalid_argument("increasing_postorder_dary_trees: empty value set");
  }
  std::sort(values.begin(), values.end());
  std::vector<DaryTree> out;
  for (const auto& s : enumerate_dary_shapes(d, static_cast<int>(values.size()))) {
    auto t = labeled_from_shape(*s, values);
    if (!t) throw std::logic_error("sorted labeling unexpectedly failed");
    out.push_back(std::move(*t));
  }
  return out;
}

namespace {

void collect_slot_patterns(const DaryTree& t, std::vector<std::vector<int>>& slots_of) {
  slots_of[t.label] = t.slots;
  for (const auto& c : t.children) collect_slot_patterns(c, slots_of);
}

DaryTree decorate(const PlaneTree& t, int d, const std::vector<char>& is_ne_value,
                  const std::vector<const std::vector<int>*>& slot_source) {
  DaryTree out;
  out.label = t.label;
  out.arity = d;
  const std::vector<int>& slots = *slot_source[t.label];
  if (slots.size() != t.children.size()) {
    throw std::invalid_argument("slot pattern size does not match child count for value " +
                                std::to_string(t.label));
  }
  for (size_t g = 0; g < t.children.size(); ++g) {
    out.children.push_back(decorate(t.children[g], d, is_ne_value, slot_source));
    out.slots.push_back(slots[g]);
  }
  return out;
}

}  // namespace

DaryTree build_dary_tree(const HookConfiguration& config, const DarySlotChoice& choice,
                         const std::vector<DaryTree>& tuple) {
  const Permutation& pi = config.pi;
  const int n = pi.size();
  if (n == 0) throw std::invalid_argument("build_dary_tree: permutation must be nonempty");
  if (tuple.empty()) throw std::invalid_argument("build_dary_tree: empty tuple");
  const int d = tuple[0].arity;

  TreeTuple plane_tuple;
  std::vector<std::vector<int>> slots_of(n + 1);
  for (const auto& t : tuple) {
    if (t.arity != d) throw std::invalid_argument("build_dary_tree: mixed arities in tuple");
    plane_tuple.trees.push_back(to_plane(t));
    collect_slot_patterns(t, slots_of);
  }

  PlaneTree plane = build_tree(config, plane_tuple);

  std::vector<char> is_ne_value(n + 1, 0);
  std::vector<const std::vector<int>*> slot_source(n + 1, nullptr);
  for (int v = 1; v <= n; ++v) slot_source[v] = &slots_of[v];
  std::vector<int> w = config.w_multiplicities();
  for (int j = 1; j <= n; ++j) {
    if (w[j - 1] == 0) continue;
    is_ne_value[pi.at(j)] = 1;
    auto it = choice.slots_by_ne_pos.find(j);
    if (it == choice.slots_by_ne_pos.end()) {
      throw std::invalid_argument("build_dary_tree: no slot choice for northeast position " +
                                  std::to_string(j));
    }
    if (static_cast<int>(it->second.size()) != w[j - 1]) {
      throw std::invalid_argument("build_dary_tree: slot choice size mismatch at position " +
                                  std::to_string(j));
    }
    for (size_t g = 0; g < it->second.size(); ++g) {
      int s = it->second[g];
      if (s < 0 || s >= d || (g > 0 && it->second[g - 1] >= s)) {
        throw std::invalid_argument("build_dary_tree: slot choice must be increasing in [0,d)");
      }
    }
    slot_source[pi.at(j)] = &it->second;
  }
  return decorate(plane, d, is_ne_value, slot_source);
}

}  // namespace hookcensus
