#include "qpat/enumerate.hpp"

#include <algorithm>
#include <map>

namespace qpat {

MultisetPermutations::MultisetPermutations(const AlphabetVector& m) {
  for (int letter = 1; letter <= m.alphabet_size(); ++letter) {
    letters_.insert(letters_.end(), m[letter], letter);
  }
}

bool MultisetPermutations::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else if (!std::next_permutation(letters_.begin(), letters_.end())) {
    done_ = true;
    return false;
  }
  current_ = Word(letters_);
  return true;
}

void for_each_multiset_permutation(const AlphabetVector& m,
                                   const std::function<void(const Word&)>& visit) {
  MultisetPermutations stream(m);
  while (stream.next()) visit(stream.current());
}

Integer multinomial(const AlphabetVector& m) {
  Integer result = 1;
  unsigned long placed = 0;
  for (int c : m.counts()) {
    for (int i = 1; i <= c; ++i) {
      ++placed;
      result *= placed;
      result /= static_cast<unsigned long>(i);
    }
  }
  return result;
}

Polynomial bf_distribution(const StatisticBundle& bundle, const AlphabetVector& m) {
  const auto& bindings = bundle.bindings();
  std::map<std::vector<std::int64_t>, std::int64_t> histogram;
  std::vector<std::int64_t> key(bindings.size());
  for_each_multiset_permutation(m, [&](const Word& w) {
    for (std::size_t k = 0; k < bindings.size(); ++k) key[k] = occurrences(bindings[k].pattern, w);
    ++histogram[key];
  });

  std::vector<Polynomial::Term> terms;
  terms.reserve(histogram.size());
  for (const auto& [exps, count] : histogram) {
    std::vector<Monomial::Factor> factors;
    for (std::size_t k = 0; k < bindings.size(); ++k)
      factors.emplace_back(bindings[k].variable, exps[k]);
    terms.emplace_back(Monomial(std::move(factors)), Integer(static_cast<long>(count)));
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace qpat
