#include "gencat/oracle.hpp"

#include "gencat/errors.hpp"

namespace gencat::oracle {

namespace {

// `open` counts child slots still to be filled in preorder; every open slot
// needs at least one of the remaining leaves.
void walk_trees(const ParamVec& a, long leaves_left, long open, const Rational& weight, Rational& total) {
  if (open == 0) {
    if (leaves_left == 0) total += weight;
    return;
  }
  if (open > leaves_left) return;
  walk_trees(a, leaves_left - 1, open - 1, weight, total);
  for (std::size_t j = 2; j <= a.r(); ++j) {
    const Rational aj = a.a(j);
    if (aj.is_zero()) continue;
    walk_trees(a, leaves_left, open - 1 + static_cast<long>(j), weight * aj, total);
  }
}

void walk_paths(const std::vector<long>& labels, long ups_left, long height, const BigInt& weight, BigInt& total) {
  if (ups_left == 0 && height == 1) total += weight;
  if (ups_left > 0) walk_paths(labels, ups_left - 1, height + 1, weight, total);
  for (std::size_t j = 2; j < labels.size(); ++j) {
    const long drop = static_cast<long>(j) - 1;
    if (labels[j] == 0 || height - drop < 1) continue;
    walk_paths(labels, ups_left, height - drop, weight * labels[j], total);
  }
}

}  // namespace

Rational weighted_tree_sum(const ParamVec& a, long n) {
  if (n < 0 || n > kTreeSumMaxN) throw DomainError("weighted_tree_sum: n must lie in 0..10");
  Rational total;
  walk_trees(a, n + 1, 1, Rational(1), total);
  return total;
}

BigInt labeled_path_count(const ParamVec& a, long n) {
  if (n < 0 || n > kPathCountMaxN) throw DomainError("labeled_path_count: n must lie in 0..8");
  std::vector<long> labels(a.r() + 1, 0);
  for (std::size_t j = 2; j <= a.r(); ++j) {
    const Rational aj = a.a(j);
    if (!aj.is_integer() || aj.sign() < 0) throw DomainError("labeled_path_count needs nonnegative integer parameters");
    if (!aj.numerator().fits_slong_p()) throw DomainError("labeled_path_count: parameter too large");
    labels[j] = aj.numerator().get_si();
  }
  BigInt total = 0;
  walk_paths(labels, n + 1, 0, BigInt(1), total);
  return total;
}

}  // namespace gencat::oracle
