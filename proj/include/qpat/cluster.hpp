#pragma once

/**
 * Distributions over multiset permutations via the cluster operator
 * recurrence.
 *
 * Marking a subset of the descents (rises) of each word and weighting every
 * marked position by (q^weight - 1) turns q^{sigma(w)} into a sum over marked
 * words. Stripping the maximal terminal marked run T = t_1 > ... > t_k gives
 *
 *   F(m) = sum_{T nonempty, T in support(m)}
 *            prod_{j=1}^{k-1} (prod_i v_i^{e_i(m, T, j)} - 1) * F(m - 1_T)
 *
 * with e_i the table exponent of the i-th bundle pattern (weight_exponent),
 * F of the empty vector equal to 1, and zero multiplicities dropped. Bundles
 * of type-(2,1) patterns are evaluated on their reversals, which leaves the
 * distribution over A*_m unchanged.
 */

#include <map>
#include <vector>

#include "qpat/bundle.hpp"
#include "qpat/pattern.hpp"
#include "qpat/polynomial.hpp"

namespace qpat {

// Deletes zero entries (relabelling the remaining letters consecutively).
AlphabetVector normalize_alphabet(const AlphabetVector& m);

// The box shared by every pattern of the bundle. When several boxes qualify
// (bundles made only of (ab)/(ba)) the lowest-numbered one is returned.
// Throws IncompatibleBundle otherwise.
Box compatibility_check(const StatisticBundle& bundle);

struct ClusterOptions {
  bool memoize = true;
};

class ClusterEngine {
 public:
  explicit ClusterEngine(const StatisticBundle& bundle, ClusterOptions options = {});

  Polynomial distribution(const AlphabetVector& m);

  Box box() const { return box_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  // Product over j of (monomial_j - 1) for the run T at content m.
  Polynomial run_weight(const AlphabetVector& m, const std::vector<int>& run) const;
  Polynomial expand(const AlphabetVector& m);  // one application of the operator
  Polynomial evaluate_unmemoized(const AlphabetVector& m);

  std::vector<PatternBinding> effective_;  // type-(1,2) representatives
  Box box_ = Box::none;
  ClusterOptions options_;
  std::map<AlphabetVector, Polynomial> memo_;
};

Polynomial cluster_distribution(const StatisticBundle& bundle, const AlphabetVector& m);

}  // namespace qpat
