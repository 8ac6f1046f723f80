#include "qpat/closed.hpp"

#include "qpat/errors.hpp"

namespace qpat {

namespace {

using Table = std::vector<std::vector<Polynomial>>;

Table zero_table(int n_max) {
  return Table(n_max + 1, std::vector<Polynomial>(n_max + 1));
}

Polynomial q_pow(std::int64_t e) { return Polynomial::variable("q", e); }

// q^e - 1
Polynomial q_pow_minus_one(std::int64_t e) { return q_pow(e) - Polynomial(1L); }

void require_positive(int n_max) {
  if (n_max < 1) throw Error("coefficient tables need n_max >= 1");
}

}  // namespace

CoefficientTables tables_acb(int n_max) {
  require_positive(n_max);
  CoefficientTables t{zero_table(n_max), zero_table(n_max), {}};
  auto& a = t.a;
  auto& b = t.b;
  for (int n = 1; n <= n_max; ++n) {
    a[n][1] = Polynomial(static_cast<long>(n));
    b[n][1] = b[n - 1][1] + q_pow_minus_one(n - 1);
    for (int k = 2; k <= n; ++k) {
      a[n][k] = a[n - 1][k] + b[n - 1][k - 1];
      b[n][k] = b[n - 1][k] + q_pow_minus_one(n - k) * b[n - 1][k - 1];
    }
  }
  return t;
}

CoefficientTables tables_bca(int n_max) {
  require_positive(n_max);
  CoefficientTables t{zero_table(n_max), zero_table(n_max), {}};
  auto& a = t.a;
  auto& b = t.b;
  for (int n = 1; n <= n_max; ++n) {
    a[n][1] = Polynomial(static_cast<long>(n));
    b[n][1] = b[n - 1][1] + q_pow(-n);
    for (int k = 2; k <= n; ++k) {
      Polynomial top = b[n - 1][k - 1].mul_monomial(Monomial::var("q", n - 1)) - a[n - 1][k - 1];
      a[n][k] = a[n - 1][k] + top;
      b[n][k] = b[n - 1][k] + top.mul_monomial(Monomial::var("q", -n));
    }
  }
  return t;
}

CoefficientTables tables_cba(int n_max) {
  require_positive(n_max);
  CoefficientTables t{zero_table(n_max), zero_table(n_max), zero_table(n_max)};
  auto& a = t.a;
  auto& b = t.b;
  auto& c = t.c;
  b[0][0] = Polynomial(1L);
  c[0][0] = Polynomial(1L);
  for (int n = 1; n <= n_max; ++n) {
    b[n][0] = Polynomial(static_cast<long>(n + 1));
    c[n][0] = Polynomial(1L);
    Polynomial factor = q_pow_minus_one(n - 1);
    for (int k = 1; k <= n; ++k) {
      b[n][k] = b[n - 1][k] + c[n - 1][k] + factor * c[n - 1][k - 1];
      c[n][k] = c[n - 1][k] + factor * c[n - 1][k - 1];
      a[n][k] = b[n - 1][k - 1];
    }
  }
  return t;
}

std::optional<BasePattern> base_pattern(const Pattern& p) {
  if (p.has_repeated_letters()) return std::nullopt;
  const Pattern images[] = {p, p.reversed(), p.complemented(), p.reversed().complemented()};
  for (const auto& img : images) {
    std::string s = img.to_string();
    if (s == "ba") return BasePattern::ba;
    if (s == "a-cb") return BasePattern::acb;
    if (s == "b-ca") return BasePattern::bca;
    if (s == "c-ba") return BasePattern::cba;
  }
  return std::nullopt;
}

std::vector<Polynomial> dist_sn_sequence(BasePattern base, int n_max) {
  if (n_max < 0) throw Error("n must be nonnegative");
  std::vector<Polynomial> f(n_max + 1);
  f[0] = Polynomial(1L);
  if (n_max == 0) return f;

  if (base == BasePattern::ba) {
    // a(n,k) = C(n,k) (q-1)^{k-1}
    std::vector<Polynomial> q_minus_one_pow(n_max + 1);
    q_minus_one_pow[0] = Polynomial(1L);
    for (int k = 1; k <= n_max; ++k)
      q_minus_one_pow[k] = q_minus_one_pow[k - 1] * q_pow_minus_one(1);
    for (int n = 1; n <= n_max; ++n) {
      Integer binom = 1;
      for (int k = 1; k <= n; ++k) {
        binom = binom * (n - k + 1) / k;
        f[n] += q_minus_one_pow[k - 1] * f[n - k] * Polynomial(binom);
      }
    }
    return f;
  }

  CoefficientTables t = base == BasePattern::acb   ? tables_acb(n_max)
                        : base == BasePattern::bca ? tables_bca(n_max)
                                                   : tables_cba(n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (!t.a[n][k].is_zero()) f[n] += t.a[n][k] * f[n - k];
    }
  }
  return f;
}

Polynomial dist_sn(const Pattern& p, int n) {
  if (n < 0) throw Error("n must be nonnegative");
  if (p.has_repeated_letters()) {
    if (is_table_pattern(p) || is_table_pattern(p.reversed())) {
      Integer fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      return Polynomial(fact);
    }
    throw UnsupportedPattern("no permutation recurrence for (" + p.to_string() + ")");
  }
  auto base = base_pattern(p);
  if (!base) throw UnsupportedPattern("no permutation recurrence for (" + p.to_string() + ")");
  return dist_sn_sequence(*base, n)[n];
}

}  // namespace qpat
