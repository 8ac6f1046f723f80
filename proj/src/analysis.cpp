#include "qpat/analysis.hpp"

#include <algorithm>
#include <cctype>

#include "qpat/closed.hpp"
#include "qpat/cluster.hpp"
#include "qpat/enumerate.hpp"
#include "qpat/errors.hpp"

namespace qpat {

Target Target::multiset(AlphabetVector m) {
  Target t;
  t.content_ = std::move(m);
  return t;
}

Target Target::permutations(int n) {
  if (n < 0) throw Error("n must be nonnegative");
  Target t;
  t.content_ = AlphabetVector::permutations(n);
  t.permutations_ = true;
  return t;
}

std::string Target::to_string() const {
  if (permutations_) return "S_" + std::to_string(size());
  return content_.to_string();
}

namespace {

bool is_all_ones(const AlphabetVector& m) {
  const auto c = normalize_alphabet(m).counts();
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 1; });
}

bool closed_supports(const StatisticBundle& bundle) {
  if (bundle.size() != 1) return false;
  const Pattern& p = bundle.bindings()[0].pattern;
  return base_pattern(p).has_value() || is_table_pattern(p) || is_table_pattern(p.reversed());
}

bool boxable(const StatisticBundle& bundle) {
  try {
    compatibility_check(bundle);
    return true;
  } catch (const IncompatibleBundle&) {
    return false;
  }
}

Polynomial rename_q(const Polynomial& p, const std::string& var) {
  if (var == "q") return p;
  return specialize(p, {{"q", Monomial::var(var)}});
}

}  // namespace

Polynomial distribution(const StatisticBundle& bundle, const Target& target, Method method) {
  const bool sn = target.is_permutations() || is_all_ones(target.content());
  if (method == Method::automatic) {
    if (sn && closed_supports(bundle)) {
      method = Method::closed;
    } else if (boxable(bundle)) {
      method = Method::cluster;
    } else {
      method = Method::bf;
    }
  }
  switch (method) {
    case Method::bf:
      return bf_distribution(bundle, target.content());
    case Method::cluster:
      return cluster_distribution(bundle, target.content());
    case Method::closed: {
      if (!sn)
        throw UnsupportedPattern("the permutation recurrences need a target of distinct letters");
      if (bundle.size() != 1)
        throw UnsupportedPattern("the permutation recurrences handle a single pattern");
      const auto& b = bundle.bindings()[0];
      int n = normalize_alphabet(target.content()).alphabet_size();
      return rename_q(dist_sn(b.pattern, n), b.variable);
    }
    case Method::automatic:
      break;
  }
  return {};
}

Polynomial distribution(const Pattern& p, const Target& target, Method method) {
  return distribution(StatisticBundle::single(p), target, method);
}

EquidistributionReport equidistributed(const Pattern& p1, const Pattern& p2,
                                       const std::vector<AlphabetVector>& ms) {
  EquidistributionReport report;
  for (const auto& m : ms) {
    report.tested.push_back(m);
    if (p1 == p2) continue;
    auto target = Target::multiset(m);
    Polynomial f1 = distribution(p1, target);
    Polynomial f2 = distribution(p2, target);
    if (f1 != f2) {
      report.mismatch = Mismatch{m, std::move(f1), std::move(f2)};
      break;
    }
  }
  return report;
}

namespace {

void compositions_of(int remaining, std::vector<int>& prefix, std::vector<AlphabetVector>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    compositions_of(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

void vectors_of(int length, int budget, std::vector<int>& prefix,
                std::vector<AlphabetVector>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.emplace_back(prefix);
    return;
  }
  for (int c = 0; c <= budget; ++c) {
    prefix.push_back(c);
    vectors_of(length, budget - c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<AlphabetVector> compositions_up_to(int max_total) {
  std::vector<AlphabetVector> out;
  std::vector<int> prefix;
  for (int s = 0; s <= max_total; ++s) compositions_of(s, prefix, out);
  return out;
}

std::vector<AlphabetVector> alphabet_vectors(int max_letters, int max_total) {
  std::vector<AlphabetVector> out;
  std::vector<int> prefix;
  for (int len = 0; len <= max_letters; ++len) vectors_of(len, max_total, prefix, out);
  return out;
}

Integer avoidance_count(const Pattern& p, const Target& target) {
  return distribution(p, target).constant_term();
}

std::int64_t packing_degree(const Pattern& p, const Target& target) {
  return degree(distribution(p, target), "q");
}

std::vector<CompoundTerm> maj_terms() {
  std::vector<CompoundTerm> out;
  for (const char* s : {"ba", "a-cb", "b-ca", "c-ba", "b-ba", "a-ba"})
    out.push_back({Pattern::parse(s), 1});
  return out;
}

std::vector<CompoundTerm> parse_compound(std::string_view s) {
  std::string text;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text == "maj") return maj_terms();
  std::vector<CompoundTerm> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    if (item.empty()) throw ParseError("compound: empty term");
    int coeff = 1;
    if (auto colon = item.find(':'); colon != std::string::npos) {
      try {
        std::size_t used = 0;
        coeff = std::stoi(item.substr(colon + 1), &used);
        if (used != item.size() - colon - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("compound: bad coefficient in '" + item + "'");
      }
      if (coeff < 1) throw ParseError("compound: coefficients must be positive");
      item = item.substr(0, colon);
    }
    out.push_back({Pattern::parse(item), coeff});
    pos = end + 1;
  }
  return out;
}

namespace {

std::string internal_variable(std::size_t k) { return "v" + std::to_string(k + 1); }

StatisticBundle compound_bundle(const std::vector<CompoundTerm>& terms) {
  std::vector<PatternBinding> bindings;
  for (std::size_t k = 0; k < terms.size(); ++k)
    bindings.push_back({terms[k].pattern, internal_variable(k)});
  return StatisticBundle(std::move(bindings));
}

}  // namespace

Polynomial compound_distribution(const std::vector<CompoundTerm>& terms, const Target& target) {
  if (terms.empty()) throw Error("compound statistic without terms");
  Polynomial joint = cluster_distribution(compound_bundle(terms), target.content());
  Bindings bind;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms[k].coefficient < 1) throw Error("compound coefficients must be positive");
    bind.emplace(internal_variable(k), Monomial::var("q", terms[k].coefficient));
  }
  return specialize(joint, bind);
}

Polynomial euler_mahonian(const Target& target) {
  auto terms = maj_terms();
  Polynomial joint = cluster_distribution(compound_bundle(terms), target.content());
  Bindings bind;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    bool des = terms[k].pattern.to_string() == "ba";
    bind.emplace(internal_variable(k),
                 des ? Monomial({{"q", 1}, {"t", 1}}) : Monomial::var("t"));
  }
  return specialize(joint, bind);
}

Polynomial eulerian(int n) {
  if (n < 0) throw Error("n must be nonnegative");
  if (n == 0) return Polynomial(1L);
  // row[k] = number of permutations of [n] with k - 1 descents
  std::vector<Integer> row{0, 1};
  for (int m = 2; m <= n; ++m) {
    std::vector<Integer> next(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
      if (k < static_cast<int>(row.size())) next[k] += k * row[k];
      if (k - 1 >= 1) next[k] += (m - k + 1) * row[k - 1];
    }
    row = std::move(next);
  }
  std::vector<Polynomial::Term> terms;
  for (int k = 1; k <= n; ++k) terms.emplace_back(Monomial::var("q", k), row[k]);
  return Polynomial::from_terms(std::move(terms));
}

Integer bell(int n) {
  if (n < 0) throw Error("n must be nonnegative");
  std::vector<Integer> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

Polynomial q_factorial(int n) {
  if (n < 0) throw Error("n must be nonnegative");
  // coefficients of the product, dense in q
  std::vector<Integer> coeffs{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(coeffs.size() + i - 1, 0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      for (int e = 0; e < i; ++e) next[d + e] += coeffs[d];
    }
    coeffs = std::move(next);
  }
  std::vector<Polynomial::Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    terms.emplace_back(Monomial::var("q", static_cast<std::int64_t>(d)), coeffs[d]);
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace qpat
