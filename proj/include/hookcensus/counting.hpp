#pragma once

#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hookcensus {

// Every count and formula value is exact; no fixed-width overflow, no
// floating point.
using BigCount = boost::multiprecision::cpp_int;

// binomial(n, k) = 0 when k < 0, k > n, or n < 0.
BigCount binomial(long long n, long long k);

BigCount catalan(int i);   // i >= 0
BigCount motzkin(int i);   // i >= 0
BigCount narayana(int a, int b);       // a >= 1, b >= 0; narayana(a, 0) = 0
BigCount fuss_catalan(int d, int r);   // d >= 1, r >= 0

BigCount power_of_two(int e);  // e >= 0

// D_S(r): number of S-trees with r vertices (child counts drawn from S,
// 0 in S). Requires r >= 1. Memoized per S; thread-safe.
BigCount count_strees(const std::set<int>& S, int r);

// D_N(r) via the capped-child-count device; equals catalan(r-1).
BigCount count_ntrees(int r);

// E_d(r): number of d-ary plane trees with r vertices; equals
// fuss_catalan(d, r). Requires d >= 1, r >= 0.
BigCount count_dary_trees(int d, int r);

// D_S(r; R, u): S-trees with r vertices of which exactly u have child count
// in R. Requires R subset of S.
BigCount count_strees_refined(const std::set<int>& S, int r, const std::set<int>& R, int u);

// E_d(r; R, u): d-ary trees with r vertices of which exactly u have child
// count (occupied slots) in R. Requires R subset of {0,...,d}.
BigCount count_dary_refined(int d, int r, const std::set<int>& R, int u);

// Closed forms for D_{0,1,2}(r; R, u) and E_2(r; R, u), R a nonempty subset
// of {0,1,2}, r >= 1. Complementary R handled through
// D(r; R, u) = D(r; {a}, r-u) when R = {0,1,2} minus {a}. Half-integer
// Catalan indices count as zero.
BigCount unary_binary_profile_closed_form(const std::set<int>& R, int r, int u);
BigCount binary_profile_closed_form(const std::set<int>& R, int r, int u);

}  // namespace hookcensus
