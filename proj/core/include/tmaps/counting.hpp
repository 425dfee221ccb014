#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tmaps {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Renders an exact rational as "p" (denominator 1) or "p/q".
std::string to_string(const BigRat& value);

namespace counting {

// All functions below evaluate closed formulas or recurrences in exact
// arithmetic. Values are memoized; the memo tables are mutex-guarded so
// callers may share them across threads.

BigInt factorial(unsigned k);

// k-th Catalan number (2k)! / (k! (k+1)!).
BigInt catalan(unsigned k);

// Number of edge-rooted proper planar triangulations with 2n faces,
// T_n = 2 (4n-3)! / (n! (3n-1)!), n >= 1.
BigInt tutte_T(unsigned n);

// f_{-1} = 1/2, f_0 = 2, and for n >= 1
//   f_n = (4 (3n+2) / (n+1)) * sum_{i,j >= -1, i+j = n-2} f_i f_j
// with the sum taken over ordered pairs (i, j).
BigRat gj_f(int n);

// Number of edge-rooted planar cubic maps with 2n vertices,
// F_n = f_n / (3n+2). Throws std::logic_error if the division is inexact.
BigInt edge_rooted_cubic_F(unsigned n);

// Number of tree-rooted planar cubic maps with 2n vertices whose root edge
// lies outside the spanning tree: C_{2n} * C_{n+1}.
BigInt tree_rooted_cubic_count(unsigned n);

// Number of tree-rooted planar maps with e edges (root edge unrestricted),
// C_e * C_{e+1}.
BigInt mullin_count(unsigned e);

}  // namespace counting
}  // namespace tmaps
