#pragma once

/**
 * Applications built on distributions: method dispatch, equidistribution
 * sweeps, avoidance and packing numbers, compound statistics such as maj,
 * and a few classical sequences used as independent oracles.
 */

#include <optional>
#include <string>
#include <vector>

#include "qpat/bundle.hpp"
#include "qpat/pattern.hpp"
#include "qpat/polynomial.hpp"

namespace qpat {

// A word class: multiset permutations of a content vector, or S_n.
class Target {
 public:
  static Target multiset(AlphabetVector m);
  static Target permutations(int n);

  bool is_permutations() const { return permutations_; }
  int size() const { return content_.total(); }
  const AlphabetVector& content() const { return content_; }
  std::string to_string() const;

 private:
  AlphabetVector content_;
  bool permutations_ = false;
};

enum class Method { automatic, bf, cluster, closed };

// automatic: the S_n recurrence for a single supported pattern over S_n,
// else the cluster recurrence when the bundle fits one box, else brute force.
// closed throws UnsupportedPattern unless the bundle is one supported
// pattern over permutations; cluster throws IncompatibleBundle.
Polynomial distribution(const StatisticBundle& bundle, const Target& target,
                        Method method = Method::automatic);
Polynomial distribution(const Pattern& p, const Target& target,
                        Method method = Method::automatic);

struct Mismatch {
  AlphabetVector m;
  Polynomial first;
  Polynomial second;
};

struct EquidistributionReport {
  std::vector<AlphabetVector> tested;
  std::optional<Mismatch> mismatch;  // first differing m, if any

  bool equal() const { return !mismatch.has_value(); }
};

// Stops at the first m where the two distributions differ.
EquidistributionReport equidistributed(const Pattern& p1, const Pattern& p2,
                                       const std::vector<AlphabetVector>& ms);

// All vectors of positive entries with sum <= max_total, in order of
// increasing sum (the empty vector first). Up to relabelling these are all
// word classes of that size.
std::vector<AlphabetVector> compositions_up_to(int max_total);

// All vectors of length <= max_letters with nonnegative entries summing to
// at most max_total.
std::vector<AlphabetVector> alphabet_vectors(int max_letters, int max_total);

// Number of words in the target avoiding p (constant term).
Integer avoidance_count(const Pattern& p, const Target& target);

// Largest number of occurrences of p over the target (degree in q).
std::int64_t packing_degree(const Pattern& p, const Target& target);

struct CompoundTerm {
  Pattern pattern;
  int coefficient = 1;
};

// (ba) + (a-cb) + (b-ca) + (c-ba) + (b-ba) + (a-ba): the sum of descent
// positions.
std::vector<CompoundTerm> maj_terms();

// Parses "maj" or a list such as "ba:1,a-cb:2" (coefficient defaults to 1).
std::vector<CompoundTerm> parse_compound(std::string_view s);

// Distribution in q of sum_k c_k sigma_k, computed as the multivariate
// cluster distribution specialised at v_k -> q^{c_k}. Throws
// IncompatibleBundle when the patterns do not share a box.
Polynomial compound_distribution(const std::vector<CompoundTerm>& terms, const Target& target);

// sum over the target of t^{maj(w)} q^{des(w)}.
Polynomial euler_mahonian(const Target& target);

// Oracles, independent of every distribution code path.
Polynomial eulerian(int n);     // sum_k A(n,k) q^k via the triangle recurrence
Integer bell(int n);            // Bell triangle
Polynomial q_factorial(int n);  // prod_{i=1}^n (1 + q + ... + q^{i-1})

}  // namespace qpat
