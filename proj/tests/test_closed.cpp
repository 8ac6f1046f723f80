#include <doctest.h>

#include <functional>

#include "qpat/analysis.hpp"
#include "qpat/closed.hpp"
#include "qpat/cluster.hpp"
#include "qpat/enumerate.hpp"
#include "qpat/errors.hpp"

using namespace qpat;

namespace {

Pattern pat(const char* s) { return Pattern::parse(s); }
Polynomial q(std::int64_t e) { return Polynomial::variable("q", e); }
Polynomial qm1(std::int64_t e) { return q(e) - Polynomial(1L); }

// Sum of weight(t) over all chains n >= t_1 > ... > t_k >= 1 (t is 1-based
// in the callback: t[1] .. t[k]).
Polynomial chain_sum(int n, int k, const std::function<Polynomial(const std::vector<int>&)>& weight) {
  Polynomial total;
  std::vector<int> t(k + 1, 0);
  std::function<void(int, int)> rec = [&](int idx, int below) {
    if (idx > k) {
      total += weight(t);
      return;
    }
    for (int v = below - 1; v >= 1; --v) {
      t[idx] = v;
      rec(idx + 1, v);
    }
  };
  rec(1, n + 1);
  return total;
}

}  // namespace

TEST_CASE("tables_acb against the defining sums") {
  const int N = 7;
  auto tab = tables_acb(N);
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= N; ++k) {
      auto a = chain_sum(n, k, [k](const std::vector<int>& t) {
        Polynomial p(1L);
        for (int j = 1; j <= k - 1; ++j) p *= qm1(t[j + 1] + j - k);
        return p;
      });
      auto b = chain_sum(n, k, [k](const std::vector<int>& t) {
        Polynomial p(1L);
        for (int j = 1; j <= k; ++j) p *= qm1(t[j] + j - k - 1);
        return p;
      });
      CHECK_MESSAGE(tab.a[n][k] == a, "a(" << n << "," << k << ")");
      CHECK_MESSAGE(tab.b[n][k] == b, "b(" << n << "," << k << ")");
    }
  }
  CHECK(tab.a[3][2] == q(1) - Polynomial(1L));
  CHECK(tab.a[2][2].is_zero());
  CHECK(tab.a[1][1] == Polynomial(1L));
  for (int n = 1; n <= N; ++n) CHECK(tab.a[n][1] == Polynomial(static_cast<long>(n)));
}

TEST_CASE("tables_bca against the defining sums") {
  const int N = 7;
  auto tab = tables_bca(N);
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= N; ++k) {
      auto a = chain_sum(n, k, [k](const std::vector<int>& t) {
        Polynomial p(1L);
        for (int j = 1; j <= k - 1; ++j) p *= qm1(t[j] - t[j + 1] - 1);
        return p;
      });
      auto b = chain_sum(n, k, [k](const std::vector<int>& t) {
        Polynomial p = q(-t[1]);
        for (int j = 1; j <= k - 1; ++j) p *= qm1(t[j] - t[j + 1] - 1);
        return p;
      });
      CHECK_MESSAGE(tab.a[n][k] == a, "a(" << n << "," << k << ")");
      CHECK_MESSAGE(tab.b[n][k] == b, "b(" << n << "," << k << ")");
    }
  }
  CHECK(tab.a[3][2] == q(1) - Polynomial(1L));
  CHECK(tab.a[2][2].is_zero());
  CHECK(tab.b[2][1] == q(-1) + q(-2));
  CHECK(min_degree(tab.b[4][2], "q") < 0);
}

TEST_CASE("tables_cba against the defining sums") {
  const int N = 7;
  auto tab = tables_cba(N);
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= N; ++k) {
      auto a = chain_sum(n, k, [n, k](const std::vector<int>& t) {
        Polynomial p(1L);
        for (int j = 1; j <= k - 1; ++j) p *= qm1(n - t[j]);
        return p;
      });
      auto b = chain_sum(n, k, [n, k](const std::vector<int>& t) {
        Polynomial p(static_cast<long>(t[k]));
        for (int j = 1; j <= k; ++j) p *= qm1(n - t[j]);
        return p;
      });
      auto c = chain_sum(n, k, [n, k](const std::vector<int>& t) {
        Polynomial p(1L);
        for (int j = 1; j <= k; ++j) p *= qm1(n - t[j]);
        return p;
      });
      CHECK_MESSAGE(tab.a[n][k] == a, "a(" << n << "," << k << ")");
      CHECK_MESSAGE(tab.b[n][k] == b, "b(" << n << "," << k << ")");
      CHECK_MESSAGE(tab.c[n][k] == c, "c(" << n << "," << k << ")");
    }
    CHECK(tab.c[n][0] == Polynomial(1L));
    CHECK(tab.b[n][0] == Polynomial(static_cast<long>(n + 1)));
  }
  CHECK(tab.b[2][1] == q(1) - Polynomial(1L));
  CHECK(tab.c[1][1].is_zero());
  CHECK(tab.a[3][2] == tab.b[2][1]);
}

TEST_CASE("dist_sn small values") {
  CHECK(dist_sn(pat("ba"), 3) == parse_text("1 + 4*q + q^2"));
  CHECK(dist_sn(pat("a-cb"), 3) == parse_text("5 + q"));
  CHECK(dist_sn(pat("b-ca"), 3) == parse_text("5 + q"));
  CHECK(dist_sn(pat("c-ba"), 3) == parse_text("5 + q"));
  CHECK(dist_sn(pat("a-ba"), 4) == Polynomial(24L));
  CHECK(dist_sn(pat("ab-b"), 4) == Polynomial(24L));
  for (const char* s : {"ba", "a-cb", "b-ca", "c-ba", "ab"}) {
    CHECK(dist_sn(pat(s), 0) == Polynomial(1L));
    CHECK(dist_sn(pat(s), 1) == Polynomial(1L));
  }
  CHECK_THROWS_AS(dist_sn(pat("abc"), 3), UnsupportedPattern);
  CHECK_THROWS_AS(dist_sn(pat("a-b-c"), 3), UnsupportedPattern);
  CHECK_THROWS_AS(dist_sn(pat("a-bb"), 3), UnsupportedPattern);
}

TEST_CASE("base pattern transport") {
  auto base = [](const char* s) { return base_pattern(Pattern::parse(s)); };
  CHECK(base("ab") == BasePattern::ba);
  for (const char* s : {"a-cb", "c-ab", "bc-a", "ba-c"}) CHECK(base(s) == BasePattern::acb);
  for (const char* s : {"b-ca", "b-ac", "ac-b", "ca-b"}) CHECK(base(s) == BasePattern::bca);
  for (const char* s : {"c-ba", "a-bc", "ab-c", "cb-a"}) CHECK(base(s) == BasePattern::cba);
  CHECK_FALSE(base("a-ba").has_value());
}

TEST_CASE("dist_sn agrees with brute force and the cluster recurrence") {
  const char* all[] = {"ba", "ab", "a-cb", "c-ab", "bc-a", "ba-c", "b-ca", "b-ac", "ac-b",
                       "ca-b", "c-ba", "a-bc", "ab-c", "cb-a", "a-ba", "b-ab", "ba-a"};
  for (int n = 0; n <= 6; ++n) {
    auto m = AlphabetVector::permutations(n);
    for (const char* s : all) {
      auto bundle = StatisticBundle::single(pat(s));
      auto f = dist_sn(pat(s), n);
      CHECK_MESSAGE(f == bf_distribution(bundle, m), s << " n=" << n);
      CHECK_MESSAGE(f == cluster_distribution(bundle, m), s << " n=" << n);
    }
  }
}

TEST_CASE("dist_sn_sequence is consistent with dist_sn") {
  auto seq = dist_sn_sequence(BasePattern::bca, 9);
  for (int n = 0; n <= 9; ++n) {
    CHECK(seq[n] == dist_sn(pat("b-ca"), n));
    CHECK(min_degree(seq[n], "q") == 0);
  }
}
