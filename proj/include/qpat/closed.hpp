#pragma once

/**
 * Polynomial-time recurrences for F(n) = sum over S_n of q^{sigma(pi)}.
 *
 * Over permutations the operator sum collapses to F(n) = sum_k a(n,k) F(n-k)
 * where a(n,k) sums the run weights over all k-subsets of [n]. The tables
 * below compute a(n,k) with auxiliary sums b (and c) by conditioning on the
 * largest (or smallest) run letter. Reversal and complement are bijections on
 * S_n, so four base patterns cover all fourteen strict-letter patterns.
 */

#include <optional>
#include <vector>

#include "qpat/pattern.hpp"
#include "qpat/polynomial.hpp"

namespace qpat {

// a, b, c indexed [n][k] for 0 <= n, k <= n_max. Unused tables stay empty.
struct CoefficientTables {
  std::vector<std::vector<Polynomial>> a, b, c;
};

// (a-cb): a(n,k) = a(n-1,k) + b(n-1,k-1),
//         b(n,k) = b(n-1,k) + (q^{n-k} - 1) b(n-1,k-1).
CoefficientTables tables_acb(int n_max);

// (b-ca): a(n,k) = a(n-1,k) + q^{n-1} b(n-1,k-1) - a(n-1,k-1),
//         b(n,k) = b(n-1,k) + q^{-n} (q^{n-1} b(n-1,k-1) - a(n-1,k-1)).
// The b entries are Laurent polynomials.
CoefficientTables tables_bca(int n_max);

// (c-ba): a(n,k) = b(n-1,k-1),
//         b(n,k) = b(n-1,k) + c(n-1,k) + (q^{n-1} - 1) c(n-1,k-1),
//         c(n,k) = c(n-1,k) + (q^{n-1} - 1) c(n-1,k-1).
CoefficientTables tables_cba(int n_max);

enum class BasePattern { ba, acb, bca, cba };

// Base recurrence serving p over S_n, if any. Patterns with repeated
// letters never occur in a permutation and have no base.
std::optional<BasePattern> base_pattern(const Pattern& p);

// F(0), ..., F(n_max) for one base pattern.
std::vector<Polynomial> dist_sn_sequence(BasePattern base, int n_max);

// Throws UnsupportedPattern for patterns outside the supported shapes.
Polynomial dist_sn(const Pattern& p, int n);

}  // namespace qpat
