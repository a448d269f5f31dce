#include "hookcensus/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "hookcensus/cache.hpp"
#include "hookcensus/formulas.hpp"
#include "hookcensus/oracle.hpp"

namespace hookcensus {

void parallel_for_indexed(int count, const std::function<void(int)>& f) {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min({workers, 8, count}));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

namespace {

void warm_counting_tables(int n) {
  // touch the shared memo tables up front so workers mostly read
  catalan(n + 1);
  count_ntrees(std::max(1, n));
  for (int r = 1; r <= n; ++r) {
    count_strees({0, 1}, r);
    count_strees({0, 2}, r);
    count_strees({0, 1, 2}, r);
  }
  for (int d = 1; d <= 3; ++d) count_dary_trees(d, n);
}

std::vector<std::string> check_one_fertility(const Permutation& pi, const BigCount& expected) {
  std::vector<std::string> bad;
  BigCount got = fertility(pi);
  if (got != expected) {
    bad.push_back("fertility(" + pi.to_string() + ") = " + got.str() + ", brute force says " +
                  expected.str());
  }
  return bad;
}

std::vector<std::string> check_one_census(const Permutation& pi) {
  std::vector<std::string> bad;
  auto mismatch = [&](const std::string& what, const BigCount& got, const BigCount& want) {
    if (got != want) {
      bad.push_back(what + "(" + pi.to_string() + ") = " + got.str() + ", oracle says " +
                    want.str());
    }
  };
  const std::vector<int>& word = pi.entries();
  mismatch("ntrees", count_ntrees_postorder(pi),
           oracle::brute_tree_census(word, TreeFamily::ntree()));
  for (const std::set<int>& S :
       {std::set<int>{0, 1}, std::set<int>{0, 2}, std::set<int>{0, 1, 2}}) {
    std::string name = "strees{";
    for (int x : S) name += std::to_string(x);
    name += "}";
    mismatch(name, count_strees_postorder(pi, S),
             oracle::brute_tree_census(word, TreeFamily::stree(S)));
  }
  for (int d = 1; d <= 3; ++d) {
    mismatch("dary" + std::to_string(d), count_dary_postorder(pi, d),
             oracle::brute_tree_census(word, TreeFamily::dary(d)));
  }
  return bad;
}

std::vector<std::string> check_one_hooks(const Permutation& pi) {
  std::vector<std::string> bad;
  auto fast = enumerate_configs(pi);
  auto brute = oracle::brute_hook_configs(pi);
  if (fast != brute) {
    bad.push_back("enumerate_configs(" + pi.to_string() + ") found " +
                  std::to_string(fast.size()) + " configurations, brute force found " +
                  std::to_string(brute.size()));
  }
  for (const auto& config : fast) {
    if (!is_valid(pi, config.hooks)) {
      bad.push_back("enumerate_configs(" + pi.to_string() + ") emitted an invalid configuration");
      break;
    }
    color(config);  // throws on any broken structural invariant
  }
  return bad;
}

}  // namespace

CheckReport run_check(int n, const std::string& suite) {
  const bool do_fertility = suite == "fertility" || suite == "all";
  const bool do_census = suite == "census" || suite == "all";
  const bool do_hooks = suite == "hooks" || suite == "all";
  if (!do_fertility && !do_census && !do_hooks) {
    throw std::invalid_argument("unknown suite: " + suite +
                                " (expected fertility, census, hooks, or all)");
  }
  if (n < 1) throw std::invalid_argument("check needs n >= 1");
  if ((do_fertility || do_census) && n > oracle::max_perm_n()) {
    throw std::domain_error("n = " + std::to_string(n) + " exceeds the oracle bound " +
                            std::to_string(oracle::max_perm_n()));
  }
  if (do_hooks && n > oracle::max_hook_n()) {
    throw std::domain_error("n = " + std::to_string(n) +
                            " exceeds the hook enumeration oracle bound " +
                            std::to_string(oracle::max_hook_n()));
  }

  warm_counting_tables(n);
  std::vector<Permutation> perms = oracle::all_permutations(n);
  std::map<Permutation, std::vector<Permutation>> preimages;
  if (do_fertility) preimages = oracle::brute_preimage_map(n);

  std::vector<std::vector<std::string>> results(perms.size());
  parallel_for_indexed(static_cast<int>(perms.size()), [&](int idx) {
    const Permutation& pi = perms[idx];
    std::vector<std::string> bad;
    if (do_fertility) {
      auto it = preimages.find(pi);
      BigCount expected = it == preimages.end() ? 0 : static_cast<int>(it->second.size());
      for (auto& s : check_one_fertility(pi, expected)) bad.push_back(std::move(s));
    }
    if (do_census) {
      for (auto& s : check_one_census(pi)) bad.push_back(std::move(s));
    }
    if (do_hooks) {
      for (auto& s : check_one_hooks(pi)) bad.push_back(std::move(s));
    }
    results[idx] = std::move(bad);
  });

  CheckReport report;
  report.compared = static_cast<int>(perms.size());
  for (auto& r : results) {
    for (auto& line : r) report.mismatches.push_back(std::move(line));
  }
  return report;
}

void write_fertility_table(int n, const std::string& csv_path,
                           const std::optional<std::string>& cache_path) {
  if (n < 1) throw std::invalid_argument("table needs n >= 1");
  const std::string fingerprint = "fertility/v1";

  std::optional<JsonlCache> cache;
  bool was_corrupt = false;
  if (cache_path) {
    cache = JsonlCache::load(*cache_path);
    if (!cache) {
      was_corrupt = true;
      cache = JsonlCache{};
    }
  }

  warm_counting_tables(n);
  std::vector<Permutation> perms = oracle::all_permutations(n);
  std::vector<std::string> values(perms.size());
  std::vector<int> missing;
  for (size_t i = 0; i < perms.size(); ++i) {
    if (cache) {
      if (auto hit = cache->lookup(fingerprint, perms[i].to_string())) {
        values[i] = *hit;
        continue;
      }
    }
    missing.push_back(static_cast<int>(i));
  }
  parallel_for_indexed(static_cast<int>(missing.size()), [&](int g) {
    const int i = missing[g];
    values[i] = fertility(perms[i]).str();
  });
  if (cache) {
    for (int i : missing) cache->put(fingerprint, perms[i].to_string(), values[i]);
    if (was_corrupt) {
      cache->rewrite(*cache_path);
    } else {
      cache->append_new(*cache_path);
    }
  }

  std::ofstream out(csv_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + csv_path);
  out << "perm,value\n";
  for (size_t i = 0; i < perms.size(); ++i) {
    out << perms[i].to_string() << "," << values[i] << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + csv_path);
}

}  // namespace hookcensus
