#pragma once

/**
 * Sparse multivariate Laurent polynomials with arbitrary-precision integer
 * coefficients.
 *
 * Terms are kept in a sorted vector under the graded lexicographic order
 * (total degree ascending; within a degree, a larger exponent on the
 * alphabetically earlier variable comes first). The order is compatible with
 * multiplication by a monomial, which lets addition and most products run as
 * linear merges.
 */

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace qpat {

using Integer = mpz_class;

class Monomial {
 public:
  using Factor = std::pair<std::string, std::int64_t>;

  Monomial() = default;
  // Factors may be unsorted and contain repeats or zero exponents; they are
  // combined and canonicalized.
  explicit Monomial(std::vector<Factor> factors);

  static Monomial var(std::string name, std::int64_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::int64_t exponent(std::string_view var) const;
  std::int64_t total_degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::int64_t e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;  // sorted by variable name, no zero exponent
  std::int64_t degree_ = 0;
};

// Strict weak ordering used for canonical term order.
bool graded_lex_less(const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  using Term = std::pair<Monomial, Integer>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c);  // NOLINT(google-explicit-constructor)
  Polynomial(Monomial m, Integer c = 1);

  // Builds from arbitrary terms; like monomials are summed, zeros dropped.
  static Polynomial from_terms(std::vector<Term> terms);
  static Polynomial variable(std::string name, std::int64_t exponent = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const { return coefficient(Monomial{}); }
  std::set<std::string> variables() const;

  Polynomial& operator+=(const Polynomial& r);
  Polynomial& operator-=(const Polynomial& r);
  Polynomial& operator*=(const Polynomial& r);

  friend Polynomial operator+(Polynomial p, const Polynomial& r) { return p += r; }
  friend Polynomial operator-(Polynomial p, const Polynomial& r) { return p -= r; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& r);
  friend Polynomial operator-(Polynomial p);

  Polynomial mul_monomial(const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
};

// A variable may be bound to an integer value or to a monomial in (possibly
// other) variables. Monomial bindings implement compound statistics, e.g.
// t -> q^2 turns a (q, t) distribution into that of sigma + 2 tau.
using Substitution = std::variant<Integer, Monomial>;
using Bindings = std::map<std::string, Substitution, std::less<>>;

Polynomial specialize(const Polynomial& p, const Bindings& bindings);

// Sum of coefficients: every variable set to 1.
Integer coefficient_sum(const Polynomial& p);

std::int64_t degree(const Polynomial& p, std::string_view var);
std::int64_t min_degree(const Polynomial& p, std::string_view var);

enum class Format { text, json, csv };

std::string to_text(const Polynomial& p);
std::string to_json(const Polynomial& p);
// One row per term: exponents of `columns` in the given order, then the
// coefficient. Variables of p missing from `columns` are rejected.
std::string to_csv(const Polynomial& p, const std::vector<std::string>& columns);
std::string serialize(const Polynomial& p, Format format,
                      const std::vector<std::string>& csv_columns = {});

Polynomial parse_text(std::string_view s);
Polynomial parse_json(std::string_view s);

}  // namespace qpat
