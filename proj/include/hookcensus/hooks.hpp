#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hookcensus/permutation.hpp"

namespace hookcensus {

// A two-segment path in the permutation diagram from the southwest endpoint
// (sw, pi_sw) up and right to the northeast endpoint (ne, pi_ne). Well-formed
// when sw < ne and pi_sw < pi_ne. Positions are 1-based.
struct Hook {
  int sw = 0;
  int ne = 0;

  auto operator<=>(const Hook&) const = default;
};

// A configuration of hooks over a fixed permutation, ordered by southwest
// position. Valid configurations satisfy:
//   (a) southwest positions strictly increasing (at most one hook per
//       southwest point);
//   (b) every descent position is some hook's southwest endpoint;
//   (c) every northeast point is hit both by a hook whose southwest position
//       is a descent and by the hook from the immediately preceding
//       position;
//   (d) hooks whose x-spans overlap in more than one point are nested, the
//       one with the lower northeast value inside the other; hooks sharing a
//       northeast point nest automatically.
struct HookConfiguration {
  Permutation pi;
  std::vector<Hook> hooks;

  int hook_count() const { return static_cast<int>(hooks.size()); }

  // w[j-1] = number of hooks with northeast endpoint at position j.
  std::vector<int> w_multiplicities() const;
  std::vector<int> ne_positions() const;  // ascending, distinct

  bool operator==(const HookConfiguration&) const = default;
  bool operator<(const HookConfiguration& other) const { return hooks < other.hooks; }
};

struct ValidityResult {
  bool ok = false;
  char clause = ' ';    // 'h' = malformed hook, otherwise 'a'..'d'
  std::string reason;
};

ValidityResult check_valid(const Permutation& pi, const std::vector<Hook>& hooks);
bool is_valid(const Permutation& pi, const std::vector<Hook>& hooks);

// The coloring induced by a valid configuration: each point takes the color
// of the lowest hook top strictly above it whose x-span covers it (the top
// of hook (i -> j) spans x in (i, j] at height pi_j); ties between tops at
// the same height go to the hook with the rightmost southwest endpoint;
// uncovered points get color 0; a northeast point takes the color of the
// highest-numbered hook ending on it.
struct ColoredDiagram {
  int n = 0;
  int m = 0;                              // number of hooks
  std::vector<int> color_of;              // per position (index pos-1), values 0..m
  std::vector<std::vector<int>> classes;  // positions per color, ascending
  std::vector<int> q;                     // class sizes, length m+1
  std::vector<int> w;                     // per position (index pos-1)
  std::vector<int> theta;                 // colors unused on northeast points, ascending
  std::vector<int> q_hat;                 // q[theta[t]]
  int m_hat = 0;                          // theta.size() - 1 == m - |NE|
};

// Requires a valid configuration; throws std::invalid_argument otherwise.
ColoredDiagram color(const HookConfiguration& config);

// Calls the sink for every valid hook configuration of pi exactly once
// (depth-first order). Nothing is materialized; safe for lazy accumulation.
void for_each_config(const Permutation& pi,
                     const std::function<void(const HookConfiguration&)>& sink);

// All valid configurations, ordered lexicographically by the (sw, ne) pair
// sequence.
std::vector<HookConfiguration> enumerate_configs(const Permutation& pi);

// Keeps configurations whose multiplicities w_j all lie in S, and, when the
// refinement is present, having exactly u northeast points with w_j in R.
struct ConfigFilter {
  std::optional<std::set<int>> allowed_w;                    // S, 0 in S
  std::optional<std::pair<std::set<int>, int>> refinement;   // (R, u)

  bool passes(const HookConfiguration& config) const;
};

std::vector<HookConfiguration> filter_configs(std::vector<HookConfiguration> configs,
                                              const ConfigFilter& filter);

void for_each_config_filtered(const Permutation& pi, const ConfigFilter& filter,
                              const std::function<void(const HookConfiguration&)>& sink);

}  // namespace hookcensus
