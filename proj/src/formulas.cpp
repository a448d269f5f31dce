#include "hookcensus/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "hookcensus/compositions.hpp"

namespace hookcensus {

namespace {

std::set<int> dary_w_set(int d) {
  std::set<int> S{0};
  for (int j = 1; j <= d; ++j) S.insert(j);
  return S;
}

// D_N(r; R, u) through the capped-child-count device: child counts above r-1
// cannot occur in an r-vertex tree, so S = {0,...,r-1} extended to cover R.
BigCount ntree_refined_count(int r, const std::set<int>& R, int u) {
  std::set<int> S;
  for (int j = 0; j <= r - 1; ++j) S.insert(j);
  for (int x : R) S.insert(x);
  return count_strees_refined(S, r, R, u);
}

}  // namespace

BigCount count_ntrees_postorder(const Permutation& pi) {
  if (pi.size() == 0) return 0;  // every tree of this family is nonempty
  BigCount total = 0;
  for_each_config(pi, [&](const HookConfiguration& config) {
    ColoredDiagram d = color(config);
    BigCount term = 1;
    for (int qt : d.q) term *= catalan(qt - 1);
    total += term;
  });
  return total;
}

BigCount count_strees_postorder(const Permutation& pi, const std::set<int>& S) {
  if (!S.count(0)) throw std::invalid_argument("count_strees_postorder: 0 must be in S");
  if (pi.size() == 0) return 0;
  ConfigFilter filter;
  filter.allowed_w = S;
  BigCount total = 0;
  for_each_config_filtered(pi, filter, [&](const HookConfiguration& config) {
    ColoredDiagram d = color(config);
    BigCount term = 1;
    for (int qt : d.q) term *= count_strees(S, qt);
    total += term;
  });
  return total;
}

BigCount count_dary_postorder(const Permutation& pi, int d) {
  if (d < 1) throw std::invalid_argument("count_dary_postorder: d must be >= 1");
  if (pi.size() == 0) return 1;  // the empty tree
  ConfigFilter filter;
  filter.allowed_w = dary_w_set(d);
  BigCount total = 0;
  for_each_config_filtered(pi, filter, [&](const HookConfiguration& config) {
    ColoredDiagram diagram = color(config);
    BigCount term = 1;
    for (int j = 1; j <= pi.size(); ++j) term *= binomial(d, diagram.w[j - 1]);
    for (int qt : diagram.q) term *= count_dary_trees(d, qt);
    total += term;
  });
  return total;
}

namespace {

// Shared skeleton of the refined evaluators: per configuration, count the
// northeast points whose multiplicity lies in R, then distribute the
// remaining profile weight over the reduced classes.
template <typename TermOfClass, typename Prefactor>
BigCount refined_sum(const Permutation& pi, const ConfigFilter& filter, const std::set<int>& R,
                     int p, const Prefactor& prefactor, const TermOfClass& class_term) {
  BigCount total = 0;
  for_each_config_filtered(pi, filter, [&](const HookConfiguration& config) {
    ColoredDiagram diagram = color(config);
    int u = 0;
    for (int x : diagram.w) {
      if (x > 0 && R.count(x)) ++u;
    }
    if (u > p) return;
    BigCount pre = prefactor(diagram);
    if (pre == 0) return;
    BigCount inner = 0;
    const int parts = diagram.m_hat + 1;
    for_each_composition(p - u, parts, 0, [&](const std::vector<int>& js) {
      BigCount term = 1;
      for (int t = 0; t < parts && term != 0; ++t) {
        term *= class_term(diagram.q_hat[t], js[t]);
      }
      inner += term;
    });
    total += pre * inner;
  });
  return total;
}

}  // namespace

BigCount count_strees_refined_general(const Permutation& pi, const std::set<int>& S,
                                      const std::set<int>& R, int p) {
  if (!S.count(0)) throw std::invalid_argument("count_strees_refined_general: 0 must be in S");
  for (int x : R) {
    if (!S.count(x)) {
      throw std::invalid_argument("count_strees_refined_general: R must be a subset of S");
    }
  }
  if (p < 0) return 0;
  if (pi.size() == 0) return 0;
  ConfigFilter filter;
  filter.allowed_w = S;
  return refined_sum(
      pi, filter, R, p, [](const ColoredDiagram&) { return BigCount(1); },
      [&](int q, int j) { return count_strees_refined(S, q, R, j); });
}

BigCount count_dary_refined_general(const Permutation& pi, int d, const std::set<int>& R, int p) {
  if (d < 1) throw std::invalid_argument("count_dary_refined_general: d must be >= 1");
  for (int x : R) {
    if (x < 0 || x > d) {
      throw std::invalid_argument("count_dary_refined_general: R must be within {0,...,d}");
    }
  }
  if (p < 0) return 0;
  if (pi.size() == 0) return p == 0 ? 1 : 0;  // the empty tree has no vertices at all
  ConfigFilter filter;
  filter.allowed_w = dary_w_set(d);
  return refined_sum(
      pi, filter, R, p,
      [&](const ColoredDiagram& diagram) {
        BigCount pre = 1;
        for (int x : diagram.w) pre *= binomial(d, x);
        return pre;
      },
      [&](int q, int j) { return count_dary_refined(d, q, R, j); });
}

BigCount count_ntrees_refined(const Permutation& pi, const std::set<int>& R, int p) {
  if (p < 0) return 0;
  if (pi.size() == 0) return 0;
  ConfigFilter filter;  // w is unrestricted for unbounded arity
  return refined_sum(
      pi, filter, R, p, [](const ColoredDiagram&) { return BigCount(1); },
      [&](int q, int j) { return ntree_refined_count(q, R, j); });
}

namespace {

template <typename TermOfClass>
BigCount collapsed_refined_sum(const Permutation& pi, const std::set<int>& R, int p,
                               const TermOfClass& class_term) {
  const int k = static_cast<int>(descents(pi).size());
  const int chi = R.count(2) ? k : 0;
  if (p - chi < 0) return 0;
  ConfigFilter filter;
  filter.allowed_w = std::set<int>{0, 2};
  BigCount total = 0;
  for_each_config_filtered(pi, filter, [&](const HookConfiguration& config) {
    ColoredDiagram diagram = color(config);
    BigCount inner = 0;
    for_each_composition(p - chi, k + 1, 0, [&](const std::vector<int>& js) {
      BigCount term = 1;
      for (int t = 0; t <= k && term != 0; ++t) term *= class_term(diagram.q_hat[t], js[t]);
      inner += term;
    });
    total += inner;
  });
  return total;
}

}  // namespace

BigCount count_unary_binary_refined(const Permutation& pi, const std::set<int>& R, int p) {
  for (int x : R) {
    if (x < 0 || x > 2) {
      throw std::invalid_argument("count_unary_binary_refined: R must be within {0,1,2}");
    }
  }
  if (p < 0) return 0;
  if (pi.size() == 0) return 0;
  return collapsed_refined_sum(pi, R, p, [&](int q, int j) {
    return count_strees_refined({0, 1, 2}, q, R, j);
  });
}

BigCount count_binary_refined(const Permutation& pi, const std::set<int>& R, int p) {
  for (int x : R) {
    if (x < 0 || x > 2) {
      throw std::invalid_argument("count_binary_refined: R must be within {0,1,2}");
    }
  }
  if (p < 0) return 0;
  if (pi.size() == 0) return p == 0 ? 1 : 0;
  return collapsed_refined_sum(pi, R, p,
                               [&](int q, int j) { return count_dary_refined(2, q, R, j); });
}

BigCount count_census(const Permutation& pi, const CensusQuery& query) {
  const TreeFamily& fam = query.family;
  if (!query.refine) {
    switch (fam.kind) {
      case TreeFamily::Kind::NTree:
        return count_ntrees_postorder(pi);
      case TreeFamily::Kind::STree:
        return count_strees_postorder(pi, fam.child_counts);
      case TreeFamily::Kind::Dary:
        return count_dary_postorder(pi, fam.arity);
    }
  }
  const auto& [R, p] = *query.refine;
  switch (fam.kind) {
    case TreeFamily::Kind::NTree:
      return count_ntrees_refined(pi, R, p);
    case TreeFamily::Kind::STree:
      if (fam.child_counts == std::set<int>{0, 1, 2} && pi.size() > 0) {
        return count_unary_binary_refined(pi, R, p);
      }
      return count_strees_refined_general(pi, fam.child_counts, R, p);
    case TreeFamily::Kind::Dary:
      if (fam.arity == 2 && pi.size() > 0) return count_binary_refined(pi, R, p);
      return count_dary_refined_general(pi, fam.arity, R, p);
  }
  throw std::logic_error("count_census: unreachable");
}

BigCount fertility(const Permutation& pi) {
  if (pi.size() == 0) return 1;  // the empty permutation is its own preimage
  ConfigFilter filter;
  filter.allowed_w = std::set<int>{0, 2};
  BigCount total = 0;
  for_each_config_filtered(pi, filter, [&](const HookConfiguration& config) {
    ColoredDiagram diagram = color(config);
    BigCount term = 1;
    for (int q : diagram.q_hat) term *= catalan(q);
    total += term;
  });
  return total;
}

BigCount fertility_by_valleys(const Permutation& pi, int p) {
  if (p < 0) return 0;
  const int n = pi.size();
  if (n == 0) return p == 0 ? 1 : 0;
  const int k = static_cast<int>(descents(pi).size());
  ConfigFilter filter;
  filter.allowed_w = std::set<int>{0, 2};
  BigCount sum = 0;
  for_each_config_filtered(pi, filter, [&](const HookConfiguration& config) {
    ColoredDiagram diagram = color(config);
    // terms with any j_t = 0 vanish, so only positive compositions remain
    for_each_composition(p, k + 1, 1, [&](const std::vector<int>& js) {
      BigCount term = 1;
      for (int t = 0; t <= k && term != 0; ++t) {
        term *= binomial(diagram.q_hat[t] - 1, 2 * js[t] - 2) * catalan(js[t] - 1);
      }
      sum += term;
    });
  });
  if (sum == 0) return 0;
  return power_of_two(n - 2 * p + 1) * sum;
}

BigCount fertility_by_descents(const Permutation& pi, int m) {
  if (m < 0) return 0;
  if (pi.size() == 0) return m == 0 ? 1 : 0;
  const int k = static_cast<int>(descents(pi).size());
  if (m < k) return 0;
  ConfigFilter filter;
  filter.allowed_w = std::set<int>{0, 2};
  BigCount total = 0;
  for_each_config_filtered(pi, filter, [&](const HookConfiguration& config) {
    ColoredDiagram diagram = color(config);
    for_each_composition(m - k, k + 1, 0, [&](const std::vector<int>& js) {
      BigCount term = 1;
      for (int t = 0; t <= k && term != 0; ++t) {
        term *= narayana(diagram.q_hat[t], js[t] + 1);
      }
      total += term;
    });
  });
  return total;
}

}  // namespace hookcensus
