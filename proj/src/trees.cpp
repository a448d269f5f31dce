#include "hookcensus/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hookcensus {

int vertex_count(const PlaneTree& t) {
  int n = 1;
  for (const auto& c : t.children) n += vertex_count(c);
  return n;
}

int vertex_count(const DaryTree& t) {
  int n = 1;
  for (const auto& c : t.children) n += vertex_count(c);
  return n;
}

int vertex_count(const PlaneShape& s) {
  int n = 1;
  for (const auto& c : s.children) n += vertex_count(c);
  return n;
}

int vertex_count(const DaryShape& s) {
  int n = 1;
  for (const auto& c : s.children) n += vertex_count(c);
  return n;
}

bool is_decreasing(const PlaneTree& t) {
  for (const auto& c : t.children) {
    if (c.label >= t.label || !is_decreasing(c)) return false;
  }
  return true;
}

bool is_decreasing(const DaryTree& t) {
  for (const auto& c : t.children) {
    if (c.label >= t.label || !is_decreasing(c)) return false;
  }
  return true;
}

namespace {

template <typename Tree>
void postorder_into(const Tree& t, std::vector<int>& out) {
  for (const auto& c : t.children) postorder_into(c, out);
  out.push_back(t.label);
}

template <typename Tree>
void preorder_into(const Tree& t, std::vector<int>& out) {
  out.push_back(t.label);
  for (const auto& c : t.children) preorder_into(c, out);
}

}  // namespace

std::vector<int> postorder(const PlaneTree& t) {
  std::vector<int> out;
  postorder_into(t, out);
  return out;
}

std::vector<int> postorder(const DaryTree& t) {
  std::vector<int> out;
  postorder_into(t, out);
  return out;
}

std::vector<int> preorder(const PlaneTree& t) {
  std::vector<int> out;
  preorder_into(t, out);
  return out;
}

std::vector<int> preorder(const DaryTree& t) {
  std::vector<int> out;
  preorder_into(t, out);
  return out;
}

PlaneTree reflect(const PlaneTree& t) {
  PlaneTree out;
  out.label = t.label;
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) {
    out.children.push_back(reflect(*it));
  }
  return out;
}

DaryTree reflect(const DaryTree& t) {
  DaryTree out;
  out.label = t.label;
  out.arity = t.arity;
  for (int g = static_cast<int>(t.children.size()) - 1; g >= 0; --g) {
    out.children.push_back(reflect(t.children[g]));
    out.slots.push_back(t.arity - 1 - t.slots[g]);
  }
  return out;
}

PlaneTree to_plane(const DaryTree& t) {
  PlaneTree out;
  out.label = t.label;
  for (const auto& c : t.children) out.children.push_back(to_plane(c));
  return out;
}

namespace {

// Returns the root label of the subtree, or -1 once a decreasing violation
// is found.
template <typename Shape, typename Tree>
int label_postorder(const Shape& s, const std::vector<int>& word, size_t& next, Tree& out) {
  if constexpr (std::is_same_v<Tree, DaryTree>) {
    out.arity = s.arity;
    out.slots = s.slots;
  }
  out.children.resize(s.children.size());
  int max_child = -1;
  for (size_t g = 0; g < s.children.size(); ++g) {
    int c = label_postorder(s.children[g], word, next, out.children[g]);
    if (c < 0) return -1;
    max_child = std::max(max_child, c);
  }
  out.label = word[next++];
  if (max_child >= out.label) return -1;
  return out.label;
}

}  // namespace

std::optional<PlaneTree> labeled_from_shape(const PlaneShape& s, const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != vertex_count(s)) {
    throw std::invalid_argument("labeled_from_shape: word length does not match vertex count");
  }
  PlaneTree out;
  size_t next = 0;
  if (label_postorder(s, word, next, out) < 0) return std::nullopt;
  return out;
}

std::optional<DaryTree> labeled_from_shape(const DaryShape& s, const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != vertex_count(s)) {
    throw std::invalid_argument("labeled_from_shape: word length does not match vertex count");
  }
  DaryTree out;
  size_t next = 0;
  if (label_postorder(s, word, next, out) < 0) return std::nullopt;
  return out;
}

std::string serialize(const PlaneTree& t) {
  std::string s = std::to_string(t.label);
  if (!t.children.empty()) {
    s += '(';
    for (size_t g = 0; g < t.children.size(); ++g) {
      if (g) s += ',';
      s += serialize(t.children[g]);
    }
    s += ')';
  }
  return s;
}

std::string serialize(const DaryTree& t) {
  std::string s = std::to_string(t.label);
  if (t.arity > 0 && !t.children.empty()) {
    s += '(';
    size_t g = 0;
    for (int slot = 0; slot < t.arity; ++slot) {
      if (slot) s += ',';
      if (g < t.slots.size() && t.slots[g] == slot) {
        s += serialize(t.children[g]);
        ++g;
      } else {
        s += '_';
      }
    }
    s += ')';
  }
  return s;
}

std::string serialize(const PlaneShape& s) {
  std::string out = "*";
  if (!s.children.empty()) {
    out += '(';
    for (size_t g = 0; g < s.children.size(); ++g) {
      if (g) out += ',';
      out += serialize(s.children[g]);
    }
    out += ')';
  }
  return out;
}

std::string serialize(const DaryShape& s) {
  std::string out = "*";
  if (!s.children.empty()) {
    out += '(';
    size_t g = 0;
    for (int slot = 0; slot < s.arity; ++slot) {
      if (slot) out += ',';
      if (g < s.slots.size() && s.slots[g] == slot) {
        out += serialize(s.children[g]);
        ++g;
      } else {
        out += '_';
      }
    }
    out += ')';
  }
  return out;
}

bool PlaneShape::operator<(const PlaneShape& other) const {
  return serialize(*this) < serialize(other);
}

namespace {

// Compositions of v into j positive parts.
void for_each_positive_composition(int v, int j, std::vector<int>& parts,
                                   const std::function<void(const std::vector<int>&)>& f) {
  if (j == 0) {
    if (v == 0) f(parts);
    return;
  }
  for (int a = 1; a <= v - (j - 1); ++a) {
    parts.push_back(a);
    for_each_positive_composition(v - a, j - 1, parts, f);
    parts.pop_back();
  }
}

// Compositions of v into j nonnegative parts.
void for_each_nonneg_composition(int v, int j, std::vector<int>& parts,
                                 const std::function<void(const std::vector<int>&)>& f) {
  if (j == 0) {
    if (v == 0) f(parts);
    return;
  }
  for (int a = 0; a <= v; ++a) {
    parts.push_back(a);
    for_each_nonneg_composition(v - a, j - 1, parts, f);
    parts.pop_back();
  }
}

void append_plane_products(const std::vector<const std::vector<PlaneShape>*>& pools, size_t idx,
                           PlaneShape& partial, std::vector<PlaneShape>& out) {
  if (idx == pools.size()) {
    out.push_back(partial);
    return;
  }
  for (const auto& piece : *pools[idx]) {
    partial.children.push_back(piece);
    append_plane_products(pools, idx + 1, partial, out);
    partial.children.pop_back();
  }
}

const std::vector<PlaneShape>& plane_shapes_rec(const std::vector<int>& counts, int r,
                                                std::map<int, std::vector<PlaneShape>>& memo) {
  if (auto it = memo.find(r); it != memo.end()) return it->second;
  std::vector<PlaneShape> out;
  for (int j : counts) {
    if (j > r - 1) break;
    if (j == 0) {
      if (r == 1) out.push_back(PlaneShape{});
      continue;
    }
    std::vector<int> parts;
    for_each_positive_composition(r - 1, j, parts, [&](const std::vector<int>& p) {
      std::vector<const std::vector<PlaneShape>*> pools;
      pools.reserve(p.size());
      for (int size : p) pools.push_back(&plane_shapes_rec(counts, size, memo));
      for (const auto* pool : pools) {
        if (pool->empty()) return;
      }
      PlaneShape partial;
      append_plane_products(pools, 0, partial, out);
    });
  }
  std::sort(out.begin(), out.end());
  return memo[r] = std::move(out);
}

void append_dary_products(const std::vector<const std::vector<DaryShape>*>& pools,
                          const std::vector<int>& slots, size_t idx, DaryShape& partial,
                          std::vector<DaryShape>& out) {
  if (idx == pools.size()) {
    out.push_back(partial);
    return;
  }
  for (const auto& piece : *pools[idx]) {
    partial.children.push_back(piece);
    partial.slots.push_back(slots[idx]);
    append_dary_products(pools, slots, idx + 1, partial, out);
    partial.children.pop_back();
    partial.slots.pop_back();
  }
}

const std::vector<DaryShape>& dary_shapes_rec(int d, int r,
                                              std::map<int, std::vector<DaryShape>>& memo) {
  if (auto it = memo.find(r); it != memo.end()) return it->second;
  std::vector<DaryShape> out;
  std::vector<int> parts;
  for_each_nonneg_composition(r - 1, d, parts, [&](const std::vector<int>& sizes) {
    std::vector<const std::vector<DaryShape>*> pools;
    std::vector<int> slots;
    for (int slot = 0; slot < d; ++slot) {
      if (sizes[slot] == 0) continue;
      pools.push_back(&dary_shapes_rec(d, sizes[slot], memo));
      slots.push_back(slot);
    }
    for (const auto* pool : pools) {
      if (pool->empty()) return;
    }
    DaryShape partial;
    partial.arity = d;
    append_dary_products(pools, slots, 0, partial, out);
  });
  std::sort(out.begin(), out.end(),
            [](const DaryShape& a, const DaryShape& b) { return serialize(a) < serialize(b); });
  return memo[r] = std::move(out);
}

}  // namespace

std::vector<PlaneShape> enumerate_plane_shapes(const std::set<int>& child_counts, int r) {
  if (r < 1) throw std::invalid_argument("enumerate_plane_shapes: r must be >= 1");
  if (!child_counts.count(0)) throw std::invalid_argument("enumerate_plane_shapes: 0 must be in S");
  std::vector<int> counts(child_counts.begin(), child_counts.end());
  std::map<int, std::vector<PlaneShape>> memo;
  return plane_shapes_rec(counts, r, memo);
}

std::vector<PlaneShape> enumerate_ntree_shapes(int r) {
  if (r < 1) throw std::invalid_argument("enumerate_ntree_shapes: r must be >= 1");
  std::set<int> capped;
  for (int j = 0; j <= r - 1; ++j) capped.insert(j);
  return enumerate_plane_shapes(capped, r);
}

std::vector<std::optional<DaryShape>> enumerate_dary_shapes(int d, int r) {
  if (d < 1) throw std::invalid_argument("enumerate_dary_shapes: d must be >= 1");
  if (r < 0) throw std::invalid_argument("enumerate_dary_shapes: r must be >= 0");
  std::vector<std::optional<DaryShape>> out;
  if (r == 0) {
    out.push_back(std::nullopt);
    return out;
  }
  std::map<int, std::vector<DaryShape>> memo;
  for (const auto& s : dary_shapes_rec(d, r, memo)) out.emplace_back(s);
  return out;
}

int profile_count(const PlaneTree& t, const std::set<int>& R) {
  int n = R.count(static_cast<int>(t.children.size())) ? 1 : 0;
  for (const auto& c : t.children) n += profile_count(c, R);
  return n;
}

int profile_count(const DaryTree& t, const std::set<int>& R) {
  int n = R.count(static_cast<int>(t.children.size())) ? 1 : 0;
  for (const auto& c : t.children) n += profile_count(c, R);
  return n;
}

int leaf_count(const PlaneTree& t) { return profile_count(t, {0}); }
int leaf_count(const DaryTree& t) { return profile_count(t, {0}); }

int right_edge_count(const DaryTree& t) {
  if (t.arity != 2) throw std::invalid_argument("right_edge_count: tree is not binary");
  int n = 0;
  for (size_t g = 0; g < t.children.size(); ++g) {
    if (t.slots[g] == 1) ++n;
    n += right_edge_count(t.children[g]);
  }
  return n;
}

}  // namespace hookcensus
