#pragma once

#include "gencat/param_vec.hpp"

namespace gencat::oracle {

inline constexpr long kTreeSumMaxN = 10;
inline constexpr long kPathCountMaxN = 8;

/// Sum over plane trees with n + 1 leaves and internal arities in 2..r of the
/// product of a_arity over internal nodes. Enumerates every tree through its
/// preorder arity word; nothing is memoized. n <= 10.
Rational weighted_tree_sum(const ParamVec& a, long n);

/// Number of labeled step sequences u_1..u_s with u_k in {1, -1, ..., 1-r},
/// positive partial sums ending at 1, n + 1 up-steps, and a step 1-j carrying
/// one of a_j labels. Requires nonnegative integer a_j; n <= 8.
BigInt labeled_path_count(const ParamVec& a, long n);

}  // namespace gencat::oracle
