#include "hookcensus/hooks.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookcensus {

std::vector<int> HookConfiguration::w_multiplicities() const {
  std::vector<int> w(pi.size(), 0);
  for (const Hook& h : hooks) ++w[h.ne - 1];
  return w;
}

std::vector<int> HookConfiguration::ne_positions() const {
  std::vector<int> out;
  for (const Hook& h : hooks) out.push_back(h.ne);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValidityResult check_valid(const Permutation& pi, const std::vector<Hook>& hooks) {
  const int n = pi.size();
  for (const Hook& h : hooks) {
    if (h.sw < 1 || h.ne > n || h.sw >= h.ne) {
      return {false, 'h',
              "hook (" + std::to_string(h.sw) + "," + std::to_string(h.ne) +
                  ") is not a southwest-to-northeast pair"};
    }
    if (pi.at(h.sw) >= pi.at(h.ne)) {
      return {false, 'h',
              "hook (" + std::to_string(h.sw) + "," + std::to_string(h.ne) +
                  ") does not rise: " + std::to_string(pi.at(h.sw)) + " >= " +
                  std::to_string(pi.at(h.ne))};
    }
  }
  for (size_t l = 1; l < hooks.size(); ++l) {
    if (hooks[l - 1].sw >= hooks[l].sw) {
      return {false, 'a',
              "southwest positions not strictly increasing at hooks " + std::to_string(l) +
                  "," + std::to_string(l + 1)};
    }
  }
  for (int i : descents(pi)) {
    bool covered = false;
    for (const Hook& h : hooks) covered = covered || h.sw == i;
    if (!covered) {
      return {false, 'b', "descent position " + std::to_string(i) + " has no hook"};
    }
  }
  std::vector<int> desc = descents(pi);
  auto is_descent = [&](int i) { return std::binary_search(desc.begin(), desc.end(), i); };
  std::vector<char> is_ne(n + 1, 0);
  for (const Hook& h : hooks) is_ne[h.ne] = 1;
  for (int j = 1; j <= n; ++j) {
    if (!is_ne[j]) continue;
    bool from_descent = false, adjacent = false;
    for (const Hook& h : hooks) {
      if (h.ne != j) continue;
      from_descent = from_descent || is_descent(h.sw);
      adjacent = adjacent || h.sw == j - 1;
    }
    if (!from_descent) {
      return {false, 'c',
              "northeast point at position " + std::to_string(j) + " has no hook from a descent"};
    }
    if (!adjacent) {
      return {false, 'c',
              "northeast point at position " + std::to_string(j) + " has no hook from position " +
                  std::to_string(j - 1)};
    }
  }
  for (size_t l = 0; l < hooks.size(); ++l) {
    for (size_t l2 = l + 1; l2 < hooks.size(); ++l2) {
      // sw[l] < sw[l2]; x-spans overlap in more than one point iff the later
      // southwest endpoint falls strictly inside the earlier hook's span
      if (hooks[l2].sw >= hooks[l].ne) continue;
      int j = hooks[l].ne, j2 = hooks[l2].ne;
      if (j2 == j) continue;  // shared northeast point, nested automatically
      if (j2 > j || pi.at(j2) >= pi.at(j)) {
        return {false, 'd',
                "hooks (" + std::to_string(hooks[l].sw) + "," + std::to_string(j) + ") and (" +
                    std::to_string(hooks[l2].sw) + "," + std::to_string(j2) +
                    ") overlap without nesting"};
      }
    }
  }
  return {true, ' ', ""};
}

bool is_valid(const Permutation& pi, const std::vector<Hook>& hooks) {
  return check_valid(pi, hooks).ok;
}

ColoredDiagram color(const HookConfiguration& config) {
  ValidityResult v = check_valid(config.pi, config.hooks);
  if (!v.ok) throw std::invalid_argument("color: invalid configuration: " + v.reason);

  const Permutation& pi = config.pi;
  const int n = pi.size();
  const int m = config.hook_count();
  ColoredDiagram d;
  d.n = n;
  d.m = m;
  d.w = config.w_multiplicities();
  d.color_of.assign(n, 0);

  for (int k = 1; k <= n; ++k) {
    if (n > 0 && d.w[k - 1] > 0) {
      // northeast point: highest-numbered hook ending here (the one from
      // position k-1, which has the largest southwest position)
      for (int l = m - 1; l >= 0; --l) {
        if (config.hooks[l].ne == k) {
          d.color_of[k - 1] = l + 1;
          break;
        }
      }
      continue;
    }
    int best = -1;
    for (int l = 0; l < m; ++l) {
      const Hook& h = config.hooks[l];
      // top of hook l spans x in (sw, ne] at height pi(ne)
      if (h.sw >= k || k > h.ne) continue;
      if (pi.at(h.ne) <= pi.at(k)) continue;
      if (best < 0) {
        best = l;
        continue;
      }
      int bh = pi.at(config.hooks[best].ne), lh = pi.at(h.ne);
      if (lh < bh || (lh == bh && h.sw > config.hooks[best].sw)) best = l;
    }
    d.color_of[k - 1] = best < 0 ? 0 : best + 1;
  }

  d.classes.assign(m + 1, {});
  for (int k = 1; k <= n; ++k) d.classes[d.color_of[k - 1]].push_back(k);
  d.q.resize(m + 1);
  for (int t = 0; t <= m; ++t) d.q[t] = static_cast<int>(d.classes[t].size());

  std::vector<char> used_on_ne(m + 1, 0);
  int ne_count = 0;
  for (int k = 1; k <= n; ++k) {
    if (d.w[k - 1] > 0) {
      used_on_ne[d.color_of[k - 1]] = 1;
      ++ne_count;
    }
  }
  for (int t = 0; t <= m; ++t) {
    if (!used_on_ne[t]) {
      d.theta.push_back(t);
      d.q_hat.push_back(d.q[t]);
    }
  }
  d.m_hat = static_cast<int>(d.theta.size()) - 1;

  // structural consequences of validity; a failure here is a library bug
  int total = 0;
  for (int t = 0; t <= m; ++t) {
    total += d.q[t];
    if (n > 0 && d.q[t] == 0) throw std::logic_error("color: empty color class");
    for (size_t g = 1; g < d.classes[t].size(); ++g) {
      if (pi.at(d.classes[t][g - 1]) >= pi.at(d.classes[t][g])) {
        throw std::logic_error("color: class is not increasing");
      }
    }
  }
  if (total != n) throw std::logic_error("color: classes do not partition the diagram");
  for (int k = 1; k <= n; ++k) {
    if (d.w[k - 1] > 0 && d.q[d.color_of[k - 1]] != 1) {
      throw std::logic_error("color: northeast class is not a singleton");
    }
  }
  if (d.m_hat != m - ne_count) throw std::logic_error("color: theta size mismatch");
  return d;
}

namespace {

struct Enumerator {
  const Permutation& pi;
  const std::function<void(const HookConfiguration&)>& sink;
  int n;
  std::vector<char> is_descent;   // index by position
  std::vector<int> w;             // hooks into each position so far
  std::vector<char> has_desc_sw;  // position has a hook from a descent
  std::vector<Hook> cur;

  Enumerator(const Permutation& p, const std::function<void(const HookConfiguration&)>& s)
      : pi(p), sink(s), n(p.size()) {
    is_descent.assign(n + 2, 0);
    for (int i : descents(pi)) is_descent[i] = 1;
    w.assign(n + 2, 0);
    has_desc_sw.assign(n + 2, 0);
  }

  // The hook (p -> j) must rise, and no entry strictly between may exceed
  // the northeast value; a violation would force an unnestable descent hook.
  bool admissible_target(int p, int j) const {
    if (pi.at(j) <= pi.at(p)) return false;
    for (int k = p + 1; k < j; ++k) {
      if (pi.at(k) > pi.at(j)) return false;
    }
    // nesting against every earlier hook whose span contains p
    for (const Hook& h : cur) {
      if (p >= h.ne) continue;
      if (j == h.ne) continue;
      if (j > h.ne || pi.at(j) >= pi.at(h.ne)) return false;
    }
    return true;
  }

  // Hooks into position p+1 are complete once position p is decided.
  bool ne_complete(int p) const {
    int j = p + 1;
    if (w[j] == 0) return true;
    if (!has_desc_sw[j]) return false;
    return !cur.empty() && cur.back().sw == p && cur.back().ne == j;
  }

  void recurse(int p) {
    if (p == n) {
      sink(HookConfiguration{pi, cur});
      return;
    }
    const bool adjacent_required = w[p + 1] > 0;
    if (!adjacent_required && !is_descent[p]) {
      recurse(p + 1);
    }
    const int lo = p + 1;
    const int hi = adjacent_required ? p + 1 : n;
    for (int j = lo; j <= hi; ++j) {
      if (!admissible_target(p, j)) continue;
      cur.push_back(Hook{p, j});
      ++w[j];
      char saved = has_desc_sw[j];
      if (is_descent[p]) has_desc_sw[j] = 1;
      if (ne_complete(p)) recurse(p + 1);
      has_desc_sw[j] = saved;
      --w[j];
      cur.pop_back();
    }
  }
};

}  // namespace

void for_each_config(const Permutation& pi,
                     const std::function<void(const HookConfiguration&)>& sink) {
  if (pi.size() == 0) {
    sink(HookConfiguration{pi, {}});
    return;
  }
  Enumerator e(pi, sink);
  e.recurse(1);
}

std::vector<HookConfiguration> enumerate_configs(const Permutation& pi) {
  std::vector<HookConfiguration> out;
  for_each_config(pi, [&](const HookConfiguration& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

bool ConfigFilter::passes(const HookConfiguration& config) const {
  std::vector<int> w = config.w_multiplicities();
  if (allowed_w) {
    if (!allowed_w->count(0)) throw std::invalid_argument("ConfigFilter: S must contain 0");
    for (int x : w) {
      if (!allowed_w->count(x)) return false;
    }
  }
  if (refinement) {
    const auto& [R, u] = *refinement;
    int hits = 0;
    for (int x : w) {
      if (x > 0 && R.count(x)) ++hits;
    }
    if (hits != u) return false;
  }
  return true;
}

std::vector<HookConfiguration> filter_configs(std::vector<HookConfiguration> configs,
                                              const ConfigFilter& filter) {
  std::erase_if(configs, [&](const HookConfiguration& c) { return !filter.passes(c); });
  return configs;
}

void for_each_config_filtered(const Permutation& pi, const ConfigFilter& filter,
                              const std::function<void(const HookConfiguration&)>& sink) {
  for_each_config(pi, [&](const HookConfiguration& c) {
    if (filter.passes(c)) sink(c);
  });
}

}  // namespace hookcensus
