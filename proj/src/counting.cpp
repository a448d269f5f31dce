#include "hookcensus/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hookcensus {

namespace {

BigCount exact_div(const BigCount& num, const BigCount& den) {
  BigCount q = num / den;
  if (q * den != num) throw std::logic_error("exact_div: inexact division");
  return q;
}

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

BigCount binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r = exact_div(r, i);
  }
  return r;
}

BigCount catalan(int i) {
  if (i < 0) throw std::invalid_argument("catalan: index must be >= 0");
  std::lock_guard<std::mutex> lock(table_mutex());
  static std::vector<BigCount> C{1};
  while (static_cast<int>(C.size()) <= i) {
    int k = static_cast<int>(C.size());
    C.push_back(exact_div(C.back() * 2 * (2 * k - 1), k + 1));
  }
  return C[i];
}

BigCount motzkin(int i) {
  if (i < 0) throw std::invalid_argument("motzkin: index must be >= 0");
  std::lock_guard<std::mutex> lock(table_mutex());
  static std::vector<BigCount> M{1};
  while (static_cast<int>(M.size()) <= i) {
    int n = static_cast<int>(M.size());
    BigCount v = M[n - 1];
    for (int a = 0; a + 2 <= n; ++a) v += M[a] * M[n - 2 - a];
    M.push_back(v);
  }
  return M[i];
}

BigCount narayana(int a, int b) {
  if (a < 1) throw std::invalid_argument("narayana: a must be >= 1");
  if (b < 0) throw std::invalid_argument("narayana: b must be >= 0");
  if (b == 0 || b > a) return 0;
  return exact_div(binomial(a, b) * binomial(a, b - 1), a);
}

BigCount fuss_catalan(int d, int r) {
  if (d < 1 || r < 0) throw std::invalid_argument("fuss_catalan: need d >= 1, r >= 0");
  long long dr1 = static_cast<long long>(d) * r + 1;
  return exact_div(binomial(dr1, r), dr1);
}

BigCount power_of_two(int e) {
  if (e < 0) throw std::invalid_argument("power_of_two: exponent must be >= 0");
  return BigCount(1) << e;
}

namespace {

// D_S tables, one per S, index = vertex count, D[0] = 0.
std::vector<BigCount>& stree_table(const std::vector<int>& S, int r) {
  static std::map<std::vector<int>, std::vector<BigCount>> tables;
  auto& D = tables[S];
  if (D.empty()) D.push_back(0);
  for (int v = static_cast<int>(D.size()); v <= r; ++v) {
    const int w = v - 1;
    BigCount total = 0;
    std::vector<BigCount> forests(w + 1, BigCount(0));  // j-part forest counts by size
    forests[0] = 1;
    for (int j = 0; j <= std::min(S.back(), w); ++j) {
      if (std::binary_search(S.begin(), S.end(), j)) total += forests[w];
      std::vector<BigCount> next(w + 1, BigCount(0));
      for (int a = 0; a <= w; ++a) {
        if (forests[a] == 0) continue;
        for (int b = 1; a + b <= w; ++b) next[a + b] += forests[a] * D[b];
      }
      forests = std::move(next);
    }
    D.push_back(total);
  }
  return D;
}

// E_d tables, one per d, index = vertex count, E[0] = 1 (empty tree).
std::vector<BigCount>& dary_table(int d, int r) {
  static std::map<int, std::vector<BigCount>> tables;
  auto& E = tables[d];
  if (E.empty()) E.push_back(1);
  for (int v = static_cast<int>(E.size()); v <= r; ++v) {
    const int w = v - 1;
    BigCount total = 0;
    std::vector<BigCount> forests(w + 1, BigCount(0));  // j nonempty subtrees by size
    forests[0] = 1;
    for (int j = 0; j <= std::min(d, w); ++j) {
      total += binomial(d, j) * forests[w];
      std::vector<BigCount> next(w + 1, BigCount(0));
      for (int a = 0; a <= w; ++a) {
        if (forests[a] == 0) continue;
        for (int b = 1; a + b <= w; ++b) next[a + b] += forests[a] * E[b];
      }
      forests = std::move(next);
    }
    E.push_back(total);
  }
  return E;
}

using RefinedTable = std::vector<std::vector<BigCount>>;  // [v][u]

void extend_refined_stree(RefinedTable& D2, const std::vector<int>& S, const std::set<int>& R,
                          int r) {
  if (D2.empty()) D2.push_back({BigCount(0)});  // v = 0
  for (int v = static_cast<int>(D2.size()); v <= r; ++v) {
    const int w = v - 1;
    std::vector<BigCount> row(v + 1, BigCount(0));
    // forest[a][c]: ordered j-tuples of trees with a vertices, c marked
    RefinedTable forest(w + 1);
    for (int a = 0; a <= w; ++a) forest[a].assign(a + 1, BigCount(0));
    forest[0][0] = 1;
    for (int j = 0; j <= std::min(S.back(), w); ++j) {
      if (std::binary_search(S.begin(), S.end(), j)) {
        const int mark = R.count(j) ? 1 : 0;
        for (int c = 0; c <= w; ++c) {
          if (forest[w][c] != 0) row[c + mark] += forest[w][c];
        }
      }
      RefinedTable next(w + 1);
      for (int a = 0; a <= w; ++a) next[a].assign(a + 1, BigCount(0));
      for (int a = 0; a <= w; ++a) {
        for (int c = 0; c <= a; ++c) {
          if (forest[a][c] == 0) continue;
          for (int b = 1; a + b <= w; ++b) {
            for (int e = 0; e <= b && e < static_cast<int>(D2[b].size()); ++e) {
              if (D2[b][e] != 0) next[a + b][c + e] += forest[a][c] * D2[b][e];
            }
          }
        }
      }
      forest = std::move(next);
    }
    D2.push_back(std::move(row));
  }
}

void extend_refined_dary(RefinedTable& E2, int d, const std::set<int>& R, int r) {
  if (E2.empty()) E2.push_back({BigCount(1)});  // empty tree: zero marked vertices
  for (int v = static_cast<int>(E2.size()); v <= r; ++v) {
    const int w = v - 1;
    std::vector<BigCount> row(v + 1, BigCount(0));
    RefinedTable forest(w + 1);
    for (int a = 0; a <= w; ++a) forest[a].assign(a + 1, BigCount(0));
    forest[0][0] = 1;
    for (int j = 0; j <= std::min(d, w); ++j) {
      const BigCount places = binomial(d, j);
      const int mark = R.count(j) ? 1 : 0;
      for (int c = 0; c <= w; ++c) {
        if (forest[w][c] != 0) row[c + mark] += places * forest[w][c];
      }
      RefinedTable next(w + 1);
      for (int a = 0; a <= w; ++a) next[a].assign(a + 1, BigCount(0));
      for (int a = 0; a <= w; ++a) {
        for (int c = 0; c <= a; ++c) {
          if (forest[a][c] == 0) continue;
          for (int b = 1; a + b <= w; ++b) {
            for (int e = 0; e <= b; ++e) {
              if (E2[b][e] != 0) next[a + b][c + e] += forest[a][c] * E2[b][e];
            }
          }
        }
      }
      forest = std::move(next);
    }
    E2.push_back(std::move(row));
  }
}

}  // namespace

BigCount count_strees(const std::set<int>& S, int r) {
  if (r < 1) throw std::invalid_argument("count_strees: r must be >= 1");
  if (!S.count(0)) throw std::invalid_argument("count_strees: 0 must be in S");
  std::vector<int> key(S.begin(), S.end());
  std::lock_guard<std::mutex> lock(table_mutex());
  return stree_table(key, r)[r];
}

BigCount count_ntrees(int r) {
  if (r < 1) throw std::invalid_argument("count_ntrees: r must be >= 1");
  std::set<int> capped;
  for (int j = 0; j <= r - 1; ++j) capped.insert(j);
  return count_strees(capped, r);
}

BigCount count_dary_trees(int d, int r) {
  if (d < 1 || r < 0) throw std::invalid_argument("count_dary_trees: need d >= 1, r >= 0");
  std::lock_guard<std::mutex> lock(table_mutex());
  return dary_table(d, r)[r];
}

BigCount count_strees_refined(const std::set<int>& S, int r, const std::set<int>& R, int u) {
  if (r < 1) throw std::invalid_argument("count_strees_refined: r must be >= 1");
  if (!S.count(0)) throw std::invalid_argument("count_strees_refined: 0 must be in S");
  for (int x : R) {
    if (!S.count(x)) throw std::invalid_argument("count_strees_refined: R must be a subset of S");
  }
  if (u < 0 || u > r) return 0;
  std::vector<int> skey(S.begin(), S.end());
  std::vector<int> rkey(R.begin(), R.end());
  std::lock_guard<std::mutex> lock(table_mutex());
  static std::map<std::pair<std::vector<int>, std::vector<int>>, RefinedTable> tables;
  auto& D2 = tables[{skey, rkey}];
  extend_refined_stree(D2, skey, R, r);
  return D2[r][u];
}

BigCount count_dary_refined(int d, int r, const std::set<int>& R, int u) {
  if (d < 1 || r < 0) throw std::invalid_argument("count_dary_refined: need d >= 1, r >= 0");
  for (int x : R) {
    if (x < 0 || x > d) {
      throw std::invalid_argument("count_dary_refined: R must be a subset of {0,...,d}");
    }
  }
  if (u < 0 || u > r) return (r == 0 && u == 0) ? BigCount(1) : BigCount(0);
  std::vector<int> rkey(R.begin(), R.end());
  std::lock_guard<std::mutex> lock(table_mutex());
  static std::map<std::pair<int, std::vector<int>>, RefinedTable> tables;
  auto& E2 = tables[{d, rkey}];
  extend_refined_dary(E2, d, R, r);
  return E2[r][u];
}

namespace {

BigCount catalan_if_integral(int twice_index) {
  if (twice_index < 0 || twice_index % 2 != 0) return 0;
  return catalan(twice_index / 2);
}

}  // namespace

BigCount unary_binary_profile_closed_form(const std::set<int>& R, int r, int u) {
  if (r < 1) throw std::invalid_argument("closed form: r must be >= 1");
  if (R == std::set<int>{0}) {
    if (u < 1) return 0;
    return exact_div(binomial(r - 1, u - 1) * binomial(r - u, u - 1), u);
  }
  if (R == std::set<int>{1}) {
    return binomial(r - 1, u) * catalan_if_integral(r - u - 1);
  }
  if (R == std::set<int>{2}) {
    return exact_div(binomial(r - 1, u) * binomial(r - u - 1, u), u + 1);
  }
  if (R == std::set<int>{0, 1, 2}) {
    return r == u ? motzkin(r - 1) : BigCount(0);
  }
  if (R == std::set<int>{1, 2}) return unary_binary_profile_closed_form({0}, r, r - u);
  if (R == std::set<int>{0, 2}) return unary_binary_profile_closed_form({1}, r, r - u);
  if (R == std::set<int>{0, 1}) return unary_binary_profile_closed_form({2}, r, r - u);
  throw std::invalid_argument("closed form: R must be a nonempty subset of {0,1,2}");
}

BigCount binary_profile_closed_form(const std::set<int>& R, int r, int u) {
  if (r < 1) throw std::invalid_argument("closed form: r must be >= 1");
  if (R == std::set<int>{0}) {
    if (u < 1) return 0;
    BigCount b = binomial(r - 1, 2 * u - 2);
    if (b == 0) return 0;
    return power_of_two(r - 2 * u + 1) * b * catalan(u - 1);
  }
  if (R == std::set<int>{1}) {
    return power_of_two(u) * binomial(r - 1, u) * catalan_if_integral(r - u - 1);
  }
  if (R == std::set<int>{2}) {
    BigCount b = binomial(r - 1, 2 * u);
    if (b == 0) return 0;
    return power_of_two(r - 2 * u - 1) * b * catalan(u);
  }
  if (R == std::set<int>{0, 1, 2}) {
    return r == u ? catalan(r) : BigCount(0);
  }
  if (R == std::set<int>{1, 2}) return binary_profile_closed_form({0}, r, r - u);
  if (R == std::set<int>{0, 2}) return binary_profile_closed_form({1}, r, r - u);
  if (R == std::set<int>{0, 1}) return binary_profile_closed_form({2}, r, r - u);
  throw std::invalid_argument("closed form: R must be a nonempty subset of {0,1,2}");
}

}  // namespace hookcensus
