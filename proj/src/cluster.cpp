#include "qpat/cluster.hpp"

#include <algorithm>
#include <set>

#include "qpat/errors.hpp"

namespace qpat {

// ------------------------------------------------------- StatisticBundle

StatisticBundle::StatisticBundle(std::vector<PatternBinding> bindings)
    : bindings_(std::move(bindings)) {
  std::set<std::string> seen;
  for (const auto& b : bindings_) {
    if (b.variable.empty()) throw Error("bundle: empty variable name");
    if (!seen.insert(b.variable).second)
      throw Error("bundle: variable '" + b.variable + "' bound twice");
  }
}

std::string StatisticBundle::default_variable(std::size_t index) {
  static const char* const names[] = {"q", "t", "u", "v", "w", "x", "y", "z"};
  if (index < std::size(names)) return names[index];
  return "s" + std::to_string(index - std::size(names) + 1);
}

StatisticBundle StatisticBundle::of(const std::vector<Pattern>& patterns) {
  std::vector<PatternBinding> bindings;
  for (std::size_t i = 0; i < patterns.size(); ++i)
    bindings.push_back({patterns[i], default_variable(i)});
  return StatisticBundle(std::move(bindings));
}

StatisticBundle StatisticBundle::single(const Pattern& p, std::string variable) {
  return StatisticBundle({{p, std::move(variable)}});
}

std::vector<std::string> StatisticBundle::variables() const {
  std::vector<std::string> out;
  for (const auto& b : bindings_) out.push_back(b.variable);
  return out;
}

// ---------------------------------------------------------------- helpers

AlphabetVector normalize_alphabet(const AlphabetVector& m) {
  std::vector<int> out;
  for (int c : m.counts()) {
    if (c != 0) out.push_back(c);
  }
  return AlphabetVector(std::move(out));
}

Box compatibility_check(const StatisticBundle& bundle) {
  if (bundle.empty()) throw IncompatibleBundle("empty bundle");
  std::set<Box> common;
  bool first = true;
  for (const auto& b : bundle.bindings()) {
    auto boxes = b.pattern.boxes();
    if (boxes.empty())
      throw IncompatibleBundle("pattern (" + b.pattern.to_string() +
                               ") has no cluster recurrence");
    std::set<Box> mine(boxes.begin(), boxes.end());
    if (first) {
      common = std::move(mine);
      first = false;
    } else {
      std::set<Box> both;
      std::set_intersection(common.begin(), common.end(), mine.begin(), mine.end(),
                            std::inserter(both, both.begin()));
      common = std::move(both);
    }
    if (common.empty())
      throw IncompatibleBundle("pattern (" + b.pattern.to_string() +
                               ") cannot be combined with the preceding patterns");
  }
  return *common.begin();
}

// ---------------------------------------------------------- ClusterEngine

ClusterEngine::ClusterEngine(const StatisticBundle& bundle, ClusterOptions options)
    : box_(compatibility_check(bundle)), options_(options) {
  bool reverse = box_ == Box::descent21 || box_ == Box::rise21;
  for (const auto& b : bundle.bindings()) {
    effective_.push_back({reverse ? b.pattern.reversed() : b.pattern, b.variable});
  }
  memo_.emplace(AlphabetVector{}, Polynomial(1L));
}

Polynomial ClusterEngine::run_weight(const AlphabetVector& m, const std::vector<int>& run) const {
  Polynomial weight(1L);
  const int k = static_cast<int>(run.size());
  for (int j = 1; j < k; ++j) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(effective_.size());
    for (const auto& b : effective_)
      factors.emplace_back(b.variable, weight_exponent(b.pattern, m, run, j));
    Monomial mono(std::move(factors));
    if (mono.is_one()) return {};  // factor q^0 - 1 vanishes
    weight *= Polynomial(std::move(mono)) - Polynomial(1L);
  }
  return weight;
}

namespace {

// Calls visit(run, reduced) for every nonempty subset T of the letters of a
// normalized m; run lists T in decreasing order, reduced is m - 1_T.
template <typename Visit>
void for_each_run(const AlphabetVector& m, Visit&& visit) {
  const int n = m.alphabet_size();
  std::vector<int> run;
  std::vector<int> reduced = m.counts();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    run.clear();
    reduced = m.counts();
    for (int letter = n; letter >= 1; --letter) {
      if (mask & (1UL << (letter - 1))) {
        run.push_back(letter);
        --reduced[letter - 1];
      }
    }
    visit(run, AlphabetVector(reduced));
  }
}

}  // namespace

Polynomial ClusterEngine::expand(const AlphabetVector& m) {
  Polynomial total;
  for_each_run(m, [&](const std::vector<int>& run, const AlphabetVector& reduced) {
    Polynomial weight = run_weight(m, run);
    if (weight.is_zero()) return;
    const Polynomial& rest = memo_.at(normalize_alphabet(reduced));
    total += weight * rest;
  });
  return total;
}

Polynomial ClusterEngine::evaluate_unmemoized(const AlphabetVector& m) {
  AlphabetVector norm = normalize_alphabet(m);
  if (norm.alphabet_size() == 0) return Polynomial(1L);
  Polynomial total;
  for_each_run(norm, [&](const std::vector<int>& run, const AlphabetVector& reduced) {
    Polynomial weight = run_weight(norm, run);
    if (weight.is_zero()) return;
    total += weight * evaluate_unmemoized(reduced);
  });
  return total;
}

Polynomial ClusterEngine::distribution(const AlphabetVector& m) {
  if (!options_.memoize) return evaluate_unmemoized(m);

  AlphabetVector target = normalize_alphabet(m);
  if (auto it = memo_.find(target); it != memo_.end()) return it->second;

  // Collect every normalized state reachable from the target, then fill the
  // memo in order of increasing total size so each expansion only reads
  // finished entries.
  std::set<AlphabetVector> pending{target};
  std::vector<AlphabetVector> stack{target};
  while (!stack.empty()) {
    AlphabetVector cur = std::move(stack.back());
    stack.pop_back();
    for_each_run(cur, [&](const std::vector<int>&, const AlphabetVector& reduced) {
      AlphabetVector next = normalize_alphabet(reduced);
      if (memo_.count(next) || pending.count(next)) return;
      pending.insert(next);
      stack.push_back(std::move(next));
    });
  }
  std::vector<AlphabetVector> order(pending.begin(), pending.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.total() < b.total();
  });
  for (const auto& state : order) memo_.emplace(state, expand(state));
  return memo_.at(target);
}

Polynomial cluster_distribution(const StatisticBundle& bundle, const AlphabetVector& m) {
  return ClusterEngine(bundle).distribution(m);
}

}  // namespace qpat
