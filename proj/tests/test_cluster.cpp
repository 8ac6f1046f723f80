#include <doctest.h>

#include "qpat/analysis.hpp"
#include "qpat/cluster.hpp"
#include "qpat/enumerate.hpp"
#include "qpat/errors.hpp"

using namespace qpat;

namespace {

Pattern pat(const char* s) { return Pattern::parse(s); }

std::vector<Pattern> pats(std::initializer_list<const char*> names) {
  std::vector<Pattern> out;
  for (const char* n : names) out.push_back(pat(n));
  return out;
}

}  // namespace

TEST_CASE("normalize_alphabet") {
  CHECK(normalize_alphabet(AlphabetVector({1, 0, 2})) == AlphabetVector({1, 2}));
  CHECK(normalize_alphabet(AlphabetVector({0, 0})) == AlphabetVector{});
  CHECK(normalize_alphabet(AlphabetVector({1, 1, 1, 2})) == AlphabetVector({1, 1, 1, 2}));
}

TEST_CASE("cluster_distribution") {
  AlphabetVector m({1, 1, 1, 2});
  CHECK(cluster_distribution(StatisticBundle::single(pat("a-cb")), m) ==
        parse_text("31 + 17*q + 11*q^2 + q^3"));
  CHECK(cluster_distribution(StatisticBundle::single(pat("c-ba")), m) ==
        parse_text("37 + 10*q + 9*q^2 + 3*q^3 + q^5"));
  for (const auto& p : table_patterns()) {
    CHECK(cluster_distribution(StatisticBundle::single(p), AlphabetVector{}) == Polynomial(1L));
    CHECK(cluster_distribution(StatisticBundle::single(p), AlphabetVector({0, 0, 0})) ==
          Polynomial(1L));
  }
  // zero entries are irrelevant
  CHECK(cluster_distribution(StatisticBundle::single(pat("a-cb")), AlphabetVector({1, 0, 1, 1, 0, 2})) ==
        cluster_distribution(StatisticBundle::single(pat("a-cb")), m));
}

TEST_CASE("compatibility_check") {
  CHECK(compatibility_check(StatisticBundle::of(
            pats({"ba", "a-cb", "b-ca", "c-ba", "b-ba", "a-ba"}))) == Box::descent12);
  CHECK_THROWS_AS(compatibility_check(StatisticBundle::of(pats({"a-cb", "a-bc"}))),
                  IncompatibleBundle);
  CHECK(compatibility_check(StatisticBundle::of(pats({"bc-a"}))) == Box::descent21);
  CHECK(compatibility_check(StatisticBundle::of(pats({"ab", "bc-a", "ab-c"}))) == Box::descent21);
  CHECK(compatibility_check(StatisticBundle::of(pats({"ba", "cb-a"}))) == Box::rise21);
  CHECK(compatibility_check(StatisticBundle::of(pats({"ab", "c-ab"}))) == Box::rise12);
  CHECK(compatibility_check(StatisticBundle::of(pats({"ba"}))) == Box::descent12);
  CHECK_THROWS_AS(compatibility_check(StatisticBundle::of(pats({"ba", "bc-a"}))),
                  IncompatibleBundle);
  CHECK_THROWS_AS(compatibility_check(StatisticBundle::of(pats({"abc"}))), IncompatibleBundle);
  CHECK_THROWS_AS(compatibility_check(StatisticBundle{}), IncompatibleBundle);
  CHECK_THROWS_AS(cluster_distribution(StatisticBundle::of(pats({"a-cb", "a-bc"})),
                                       AlphabetVector({1, 1})),
                  IncompatibleBundle);
}

TEST_CASE("single patterns agree with brute force") {
  for (const auto& m : alphabet_vectors(3, 6)) {
    for (const auto& p : table_patterns()) {
      auto bundle = StatisticBundle::single(p);
      auto f = cluster_distribution(bundle, m);
      CHECK_MESSAGE(f == bf_distribution(bundle, m), p.to_string() << " at " << m.to_string());
      auto r = StatisticBundle::single(p.reversed());
      CHECK(cluster_distribution(r, m) == f);
    }
  }
}

TEST_CASE("multistatistics agree with brute force") {
  const std::vector<std::vector<Pattern>> bundles{
      pats({"ba", "a-cb"}),
      pats({"a-cb", "b-ca", "c-ba"}),
      pats({"ba", "b-ba", "a-ba", "c-ba"}),
      pats({"ab", "a-bc", "c-ab"}),
      pats({"b-ac", "a-ab", "b-ab"}),
      pats({"bc-a", "ab-c", "ab"}),
      pats({"cb-a", "ba-c", "ba-b"}),
      pats({"a-cb", "a-cb"}),
  };
  for (const auto& m : compositions_up_to(6)) {
    for (const auto& ps : bundles) {
      auto bundle = StatisticBundle::of(ps);
      CHECK_MESSAGE(cluster_distribution(bundle, m) == bf_distribution(bundle, m),
                    ps.front().to_string() << " bundle at " << m.to_string());
    }
  }
}

TEST_CASE("equidistributed pairs") {
  const std::pair<const char*, const char*> pairs[] = {
      {"b-ac", "b-ca"}, {"a-ab", "a-ba"}, {"b-ab", "b-ba"}};
  for (const auto& m : compositions_up_to(7)) {
    for (const auto& [x, y] : pairs) {
      CHECK(cluster_distribution(StatisticBundle::single(pat(x)), m) ==
            cluster_distribution(StatisticBundle::single(pat(y)), m));
    }
  }
  AlphabetVector m({1, 1, 1, 2});
  CHECK(cluster_distribution(StatisticBundle::single(pat("a-cb")), m) !=
        cluster_distribution(StatisticBundle::single(pat("a-bc")), m));
}

TEST_CASE("memoization is transparent") {
  for (const auto& m : compositions_up_to(5)) {
    for (const auto& ps : {pats({"a-cb"}), pats({"ba", "c-ba"}), pats({"c-ab", "ab"})}) {
      auto bundle = StatisticBundle::of(ps);
      ClusterEngine memo(bundle);
      ClusterEngine plain(bundle, {.memoize = false});
      CHECK(memo.distribution(m) == plain.distribution(m));
    }
  }
  ClusterEngine engine(StatisticBundle::single(pat("a-cb")));
  auto first = engine.distribution(AlphabetVector({2, 2, 1}));
  std::size_t entries = engine.memo_size();
  CHECK(engine.distribution(AlphabetVector({2, 2, 1})) == first);
  CHECK(engine.memo_size() == entries);
}

TEST_CASE("specialization and positivity") {
  for (const auto& m : compositions_up_to(6)) {
    for (const auto& p : table_patterns()) {
      auto f = cluster_distribution(StatisticBundle::single(p), m);
      CHECK(coefficient_sum(f) == multinomial(m));
      CHECK(min_degree(f, "q") == 0);
    }
  }
}
