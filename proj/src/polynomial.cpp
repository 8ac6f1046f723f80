#include "qpat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "qpat/errors.hpp"

namespace qpat {

namespace {

std::int64_t sum_exponents(const std::vector<Monomial::Factor>& fs) {
  std::int64_t d = 0;
  for (const auto& f : fs) d += f.second;
  return d;
}

bool term_less(const Polynomial::Term& a, const Polynomial::Term& b) {
  return graded_lex_less(a.first, b.first);
}

// Merges two canonical term lists; `sign` is applied to the right operand.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b,
                                          int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (graded_lex_less(ia->first, ib->first)) {
      out.push_back(*ia++);
    } else if (graded_lex_less(ib->first, ia->first)) {
      out.emplace_back(ib->first, sign > 0 ? ib->second : Integer(-ib->second));
      ++ib;
    } else {
      Integer c = sign > 0 ? Integer(ia->second + ib->second)
                           : Integer(ia->second - ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.end(); ++ia) out.push_back(*ia);
  for (; ib != b.end(); ++ib)
    out.emplace_back(ib->first, sign > 0 ? ib->second : Integer(-ib->second));
  return out;
}

}  // namespace

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& f : factors) {
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(std::move(f));
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
  degree_ = sum_exponents(factors_);
}

Monomial Monomial::var(std::string name, std::int64_t exponent) {
  return Monomial({{std::move(name), exponent}});
}

std::int64_t Monomial::exponent(std::string_view var) const {
  for (const auto& [name, e] : factors_) {
    if (name == var) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      out.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      if (auto e = a->second + b->second; e != 0) out.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, other.factors_.end());
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::pow(std::int64_t e) const {
  if (e == 0) return {};
  Monomial out = *this;
  for (auto& f : out.factors_) f.second *= e;
  out.degree_ *= e;
  return out;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin();
  auto ib = fb.begin();
  while (ia != fa.end() || ib != fb.end()) {
    std::int64_t ea = 0;
    std::int64_t eb = 0;
    if (ib == fb.end() || (ia != fa.end() && ia->first < ib->first)) {
      ea = ia->second;
      ++ia;
    } else if (ia == fa.end() || ib->first < ia->first) {
      eb = ib->second;
      ++ib;
    } else {
      ea = ia->second;
      eb = ib->second;
      ++ia;
      ++ib;
    }
    if (ea != eb) return ea > eb;
  }
  return false;
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Integer(c));
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Polynomial::Polynomial(Monomial m, Integer c) {
  if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), term_less);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::variable(std::string name, std::int64_t exponent) {
  return Polynomial(Monomial::var(std::move(name), exponent));
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) {
                               return graded_lex_less(t.first, key);
                             });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vars.insert(f.first);
  }
  return vars;
}

Polynomial& Polynomial::operator+=(const Polynomial& r) {
  if (r.is_zero()) return *this;
  terms_ = merge_terms(terms_, r.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& r) {
  if (r.is_zero()) return *this;
  terms_ = merge_terms(terms_, r.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& r) {
  *this = *this * r;
  return *this;
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) out.terms_.emplace_back(mono * m, c);
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& r) {
  const Polynomial& small = p.size() <= r.size() ? p : r;
  const Polynomial& big = p.size() <= r.size() ? r : p;
  if (small.is_zero()) return {};

  // Few terms on one side: sum of shifted copies, each already sorted.
  if (small.size() <= 8) {
    Polynomial out;
    for (const auto& [m, c] : small.terms_) {
      Polynomial shifted;
      shifted.terms_.reserve(big.size());
      for (const auto& [bm, bc] : big.terms_) shifted.terms_.emplace_back(bm * m, bc * c);
      out += shifted;
    }
    return out;
  }

  std::vector<Polynomial::Term> prods;
  prods.reserve(small.size() * big.size());
  for (const auto& [sm, sc] : small.terms_) {
    for (const auto& [bm, bc] : big.terms_) prods.emplace_back(sm * bm, sc * bc);
  }
  return Polynomial::from_terms(std::move(prods));
}

Polynomial operator-(Polynomial p) {
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1L);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial specialize(const Polynomial& p, const Bindings& bindings) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& [mono, coeff] : p.terms()) {
    Integer c = coeff;
    std::vector<Monomial::Factor> free;
    Monomial image;
    for (const auto& [var, e] : mono.factors()) {
      auto it = bindings.find(var);
      if (it == bindings.end()) {
        free.emplace_back(var, e);
        continue;
      }
      if (const auto* value = std::get_if<Integer>(&it->second)) {
        if (*value == 0) {
          if (e < 0) throw NegativeExponentAtZero(var);
          c = 0;
        } else if (e > 0) {
          Integer power;
          mpz_pow_ui(power.get_mpz_t(), value->get_mpz_t(), static_cast<unsigned long>(e));
          c *= power;
        } else if (abs(*value) == 1) {
          if ((-e) % 2 == 1) c *= *value;
        } else {
          throw NonIntegralSpecialization("substituting " + value->get_str() + " for '" +
                                          var + "' with a negative exponent");
        }
      } else {
        image = image * std::get<Monomial>(it->second).pow(e);
      }
    }
    if (c == 0) continue;
    out.emplace_back(Monomial(std::move(free)) * image, std::move(c));
  }
  return Polynomial::from_terms(std::move(out));
}

Integer coefficient_sum(const Polynomial& p) {
  Integer s = 0;
  for (const auto& t : p.terms()) s += t.second;
  return s;
}

std::int64_t degree(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::int64_t best = p.terms().front().first.exponent(var);
  for (const auto& t : p.terms()) best = std::max(best, t.first.exponent(var));
  return best;
}

std::int64_t min_degree(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::int64_t best = p.terms().front().first.exponent(var);
  for (const auto& t : p.terms()) best = std::min(best, t.first.exponent(var));
  return best;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (const auto& [var, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += var;
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += monomial_text(m);
    } else {
      out += mag.get_str() + '*' + monomial_text(m);
    }
  }
  return out;
}

std::string to_json(const Polynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (const auto& [var, e] : m.factors()) exps[var] = e;
    terms.push_back({{"exponents", exps}, {"coeff", c.get_str()}});
  }
  nlohmann::ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

std::string to_csv(const Polynomial& p, const std::vector<std::string>& columns) {
  for (const auto& v : p.variables()) {
    if (std::find(columns.begin(), columns.end(), v) == columns.end())
      throw Error("csv: variable '" + v + "' has no column");
  }
  std::ostringstream os;
  for (const auto& col : columns) os << col << ',';
  os << "coeff\n";
  for (const auto& [m, c] : p.terms()) {
    for (const auto& col : columns) os << m.exponent(col) << ',';
    os << c.get_str() << '\n';
  }
  return os.str();
}

std::string serialize(const Polynomial& p, Format format,
                      const std::vector<std::string>& csv_columns) {
  switch (format) {
    case Format::text:
      return to_text(p);
    case Format::json:
      return to_json(p);
    case Format::csv: {
      if (!csv_columns.empty()) return to_csv(p, csv_columns);
      auto vars = p.variables();
      return to_csv(p, std::vector<std::string>(vars.begin(), vars.end()));
    }
  }
  return {};
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip_space();
    if (at_end()) fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto term = parse_term();
      if (sign < 0) term.second = -term.second;
      terms.push_back(std::move(term));
      skip_space();
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Polynomial::Term parse_term() {
    Integer coeff = 1;
    std::vector<Monomial::Factor> factors;
    bool need_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(read_digits());
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        need_factor = true;
      }
    } else {
      need_factor = true;
    }
    while (need_factor) {
      if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
        fail("expected variable");
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        name += s_[pos_++];
      std::int64_t e = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        bool neg = false;
        if (!at_end() && peek() == '-') {
          neg = true;
          ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected exponent");
        e = std::stoll(read_digits());
        if (neg) e = -e;
        skip_space();
      }
      factors.emplace_back(std::move(name), e);
      need_factor = !at_end() && peek() == '*';
      if (need_factor) {
        ++pos_;
        skip_space();
      }
    }
    return {Monomial(std::move(factors)), coeff};
  }

  std::string read_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    return d;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial text: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_text(std::string_view s) { return TextParser(s).parse(); }

Polynomial parse_json(std::string_view s) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("polynomial json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    throw ParseError("polynomial json: missing \"terms\" array");
  std::vector<Polynomial::Term> terms;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("coeff"))
      throw ParseError("polynomial json: term without \"coeff\"");
    std::vector<Monomial::Factor> factors;
    if (t.contains("exponents")) {
      for (const auto& [var, e] : t["exponents"].items()) {
        if (!e.is_number_integer()) throw ParseError("polynomial json: non-integer exponent");
        factors.emplace_back(var, e.get<std::int64_t>());
      }
    }
    Integer c;
    const auto& jc = t["coeff"];
    if (jc.is_string()) {
      if (c.set_str(jc.get<std::string>(), 10) != 0)
        throw ParseError("polynomial json: bad coefficient '" + jc.get<std::string>() + "'");
    } else if (jc.is_number_integer()) {
      c = Integer(std::to_string(jc.get<std::int64_t>()));
    } else {
      throw ParseError("polynomial json: coefficient must be a decimal string");
    }
    terms.emplace_back(Monomial(std::move(factors)), std::move(c));
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace qpat
