#pragma once

/**
 * Exhaustive enumeration of multiset permutations and brute-force pattern
 * distributions. This is the reference every recurrence is checked against.
 */

#include <cstdint>
#include <functional>

#include "qpat/bundle.hpp"
#include "qpat/pattern.hpp"
#include "qpat/polynomial.hpp"

namespace qpat {

// Streams the words with content m in lexicographic order, one at a time.
class MultisetPermutations {
 public:
  explicit MultisetPermutations(const AlphabetVector& m);

  // Advances to the next word; false once the stream is exhausted. The first
  // call yields the sorted word (the empty word when m sums to 0).
  bool next();
  const Word& current() const { return current_; }

 private:
  std::vector<Letter> letters_;
  Word current_;
  bool started_ = false;
  bool done_ = false;
};

void for_each_multiset_permutation(const AlphabetVector& m,
                                   const std::function<void(const Word&)>& visit);

// (sum m_i)! / prod m_i!
Integer multinomial(const AlphabetVector& m);

// sum over w with content m of prod_k v_k^{sigma_k(w)}.
Polynomial bf_distribution(const StatisticBundle& bundle, const AlphabetVector& m);

}  // namespace qpat
