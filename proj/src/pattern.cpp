#include "qpat/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "qpat/errors.hpp"

namespace qpat {

namespace {

int sign(long long x) { return (x > 0) - (x < 0); }

std::vector<int> parse_int_list(std::string_view s, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < s.size()) {
    while (pos < s.size() && is_sep(s[pos])) ++pos;
    if (pos >= s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && !is_sep(s[end])) ++end;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
    if (ec != std::errc{} || ptr != s.data() + end)
      throw ParseError(std::string(what) + ": bad integer '" +
                       std::string(s.substr(pos, end - pos)) + "'");
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Word

Word Word::parse(std::string_view s) {
  bool separated = std::any_of(s.begin(), s.end(), [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  });
  std::vector<Letter> letters;
  if (separated) {
    letters = parse_int_list(s, "word");
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw ParseError(std::string("word: '") + c +
                         "' is not a letter 1-9; separate larger letters with commas");
      letters.push_back(c - '0');
    }
  }
  for (Letter l : letters) {
    if (l < 1) throw ParseError("word: letters must be positive");
  }
  return Word(std::move(letters));
}

Letter Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::reversed() const { return Word({letters_.rbegin(), letters_.rend()}); }

Word Word::complemented(int alphabet_size) const {
  int n = alphabet_size > 0 ? alphabet_size : max_letter();
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(n + 1 - l);
  return Word(std::move(out));
}

std::vector<std::size_t> Word::descents() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i - 1] > letters_[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Word::rises() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i - 1] < letters_[i]) out.push_back(i);
  }
  return out;
}

std::string Word::to_string() const {
  bool digits = std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l <= 9; });
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!digits && i > 0) s += ',';
    s += std::to_string(letters_[i]);
  }
  return s;
}

// ------------------------------------------------------- AlphabetVector

AlphabetVector::AlphabetVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw Error("alphabet vector entries must be nonnegative");
  }
}

AlphabetVector AlphabetVector::parse(std::string_view s) {
  auto counts = parse_int_list(s, "alphabet vector");
  for (int c : counts) {
    if (c < 0) throw ParseError("alphabet vector entries must be nonnegative");
  }
  return AlphabetVector(std::move(counts));
}

AlphabetVector AlphabetVector::content_of(const Word& w, int alphabet_size) {
  int n = std::max(alphabet_size, w.max_letter());
  std::vector<int> counts(n, 0);
  for (Letter l : w.letters()) ++counts[l - 1];
  return AlphabetVector(std::move(counts));
}

int AlphabetVector::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

bool AlphabetVector::is_palindromic() const {
  return std::equal(counts_.begin(), counts_.end(), counts_.rbegin());
}

std::string AlphabetVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(counts_[i]);
  }
  return s + ")";
}

// -------------------------------------------------------------- Pattern

Pattern::Pattern(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw ParseError("pattern: no blocks");
  std::set<int> ranks;
  for (const auto& b : blocks_) {
    if (b.empty()) throw ParseError("pattern: empty block");
    for (int r : b) {
      if (r < 1) throw ParseError("pattern: ranks start at 1");
      ranks.insert(r);
    }
  }
  ranks_ = *ranks.rbegin();
  if (static_cast<int>(ranks.size()) != ranks_)
    throw ParseError("pattern: letters must be contiguous from 'a' (rank " +
                     std::to_string(ranks_) + " used but a lower rank is missing)");
}

Pattern Pattern::parse(std::string_view s) {
  std::string text;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      text += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  if (text.empty()) throw ParseError("pattern: empty");

  std::vector<std::vector<int>> blocks(1);
  for (char c : text) {
    if (c == '-') {
      if (blocks.back().empty()) throw ParseError("pattern '" + std::string(s) + "': empty block");
      blocks.emplace_back();
    } else if (c >= 'a' && c <= 'z') {
      blocks.back().push_back(c - 'a' + 1);
    } else {
      throw ParseError("pattern '" + std::string(s) + "': invalid character '" + c + "'");
    }
  }
  if (blocks.back().empty()) throw ParseError("pattern '" + std::string(s) + "': empty block");
  try {
    return Pattern(std::move(blocks));
  } catch (const ParseError& e) {
    throw ParseError("pattern '" + std::string(s) + "': " + e.what());
  }
}

std::vector<int> Pattern::letters() const {
  std::vector<int> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t Pattern::length() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.size();
  return n;
}

bool Pattern::has_repeated_letters() const {
  return static_cast<int>(length()) != ranks_;
}

namespace {

Orientation pair_orientation(int first, int second) {
  if (first > second) return Orientation::descent;
  if (first < second) return Orientation::rise;
  return Orientation::none;
}

}  // namespace

PatternClass Pattern::classify() const {
  PatternClass pc;
  if (blocks_.size() == 1) {
    pc.dash_type = DashType::adjacent;
    if (blocks_[0].size() == 2) {
      pc.orientation = pair_orientation(blocks_[0][0], blocks_[0][1]);
      if (pc.orientation == Orientation::descent) pc.box = Box::descent12;
      if (pc.orientation == Orientation::rise) pc.box = Box::rise12;
    }
    return pc;
  }
  if (blocks_.size() != 2) return pc;
  const auto& first = blocks_[0];
  const auto& second = blocks_[1];
  if (first.size() == 1 && second.size() == 2) {
    pc.dash_type = DashType::type12;
    pc.orientation = pair_orientation(second[0], second[1]);
    if (is_table_pattern(*this))
      pc.box = pc.orientation == Orientation::descent ? Box::descent12 : Box::rise12;
  } else if (first.size() == 2 && second.size() == 1) {
    pc.dash_type = DashType::type21;
    pc.orientation = pair_orientation(first[0], first[1]);
    Pattern r = reversed();
    if (is_table_pattern(r))
      pc.box = r.classify().orientation == Orientation::descent ? Box::descent21 : Box::rise21;
  }
  return pc;
}

std::vector<Box> Pattern::boxes() const {
  PatternClass pc = classify();
  if (pc.box == Box::none) return {};
  if (pc.dash_type == DashType::adjacent) {
    if (pc.box == Box::descent12) return {Box::descent12, Box::rise21};
    return {Box::descent21, Box::rise12};
  }
  return {pc.box};
}

Pattern Pattern::reversed() const {
  std::vector<std::vector<int>> out(blocks_.rbegin(), blocks_.rend());
  for (auto& b : out) std::reverse(b.begin(), b.end());
  return Pattern(std::move(out));
}

Pattern Pattern::complemented() const {
  auto out = blocks_;
  for (auto& b : out) {
    for (int& r : b) r = ranks_ + 1 - r;
  }
  return Pattern(std::move(out));
}

std::string Pattern::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) s += '-';
    for (int r : blocks_[i]) s += static_cast<char>('a' + r - 1);
  }
  return s;
}

// ---------------------------------------------------------- occurrences

namespace {

class OccurrenceCounter {
 public:
  OccurrenceCounter(const Pattern& p, const Word& w)
      : blocks_(p.blocks()), pattern_(p.letters()), word_(w.letters()) {
    chosen_.reserve(pattern_.size());
  }

  std::int64_t count() { return place(0, 0); }

 private:
  // Places block b starting at 0-based index >= from.
  std::int64_t place(std::size_t b, std::size_t from) {
    if (b == blocks_.size()) return 1;
    std::size_t len = blocks_[b].size();
    std::size_t rest = 0;
    for (std::size_t k = b + 1; k < blocks_.size(); ++k) rest += blocks_[k].size();
    std::int64_t total = 0;
    for (std::size_t start = from; start + len + rest <= word_.size(); ++start) {
      std::size_t base = chosen_.size();
      bool ok = true;
      for (std::size_t k = 0; k < len && ok; ++k) {
        chosen_.push_back(start + k);
        ok = consistent_last();
      }
      if (ok) total += place(b + 1, start + len);
      chosen_.resize(base);
    }
    return total;
  }

  // Checks the most recently chosen position against all earlier ones.
  bool consistent_last() const {
    std::size_t x = chosen_.size() - 1;
    for (std::size_t y = 0; y < x; ++y) {
      if (sign(pattern_[x] - pattern_[y]) != sign(word_[chosen_[x]] - word_[chosen_[y]]))
        return false;
    }
    return true;
  }

  const std::vector<std::vector<int>>& blocks_;
  std::vector<int> pattern_;
  const std::vector<Letter>& word_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::int64_t occurrences(const Pattern& p, const Word& w) {
  return OccurrenceCounter(p, w).count();
}

// ---------------------------------------------------------- weight rules

namespace {

enum class Rule {
  ba, acb, bca, cba, aba, bba,
  ab, abc, bac, cab, aab, bab,
};

struct TableEntry {
  const char* text;
  Rule rule;
};

constexpr TableEntry kTable[] = {
    {"ba", Rule::ba},     {"a-cb", Rule::acb}, {"b-ca", Rule::bca}, {"c-ba", Rule::cba},
    {"a-ba", Rule::aba},  {"b-ba", Rule::bba}, {"ab", Rule::ab},    {"a-bc", Rule::abc},
    {"b-ac", Rule::bac},  {"c-ab", Rule::cab}, {"a-ab", Rule::aab}, {"b-ab", Rule::bab},
};

std::optional<Rule> rule_of(const Pattern& p) {
  std::string s = p.to_string();
  for (const auto& e : kTable) {
    if (s == e.text) return e.rule;
  }
  return std::nullopt;
}

std::vector<Pattern> parse_all(std::initializer_list<const char*> names) {
  std::vector<Pattern> out;
  for (const char* n : names) out.push_back(Pattern::parse(n));
  return out;
}

}  // namespace

bool is_table_pattern(const Pattern& p) { return rule_of(p).has_value(); }

const std::vector<Pattern>& descent_table_patterns() {
  static const auto v = parse_all({"ba", "a-cb", "b-ca", "c-ba", "a-ba", "b-ba"});
  return v;
}

const std::vector<Pattern>& rise_table_patterns() {
  static const auto v = parse_all({"ab", "a-bc", "b-ac", "c-ab", "a-ab", "b-ab"});
  return v;
}

const std::vector<Pattern>& table_patterns() {
  static const auto v = [] {
    auto all = descent_table_patterns();
    const auto& rise = rise_table_patterns();
    all.insert(all.end(), rise.begin(), rise.end());
    return all;
  }();
  return v;
}

std::int64_t descent_weight(const Pattern& p, const Word& w, std::size_t i) {
  if (!is_table_pattern(p))
    throw NotAWeightablePattern("pattern (" + p.to_string() + ") has no descent/rise weight");
  PatternClass pc = p.classify();
  if (i < 1 || i >= w.size())
    throw PositionNotADescent("position " + std::to_string(i) + " has no successor");
  Orientation here = pair_orientation(w[i], w[i + 1]);
  if (here != pc.orientation)
    throw PositionNotADescent("position " + std::to_string(i) + " is not a " +
                              (pc.orientation == Orientation::descent ? "descent" : "rise") +
                              " of " + w.to_string());
  if (pc.dash_type == DashType::adjacent) return 1;

  const int x = p.blocks()[0][0];
  const int y = p.blocks()[1][0];
  const int z = p.blocks()[1][1];
  std::int64_t count = 0;
  for (std::size_t j = 1; j < i; ++j) {
    if (sign(x - y) == sign(w[j] - w[i]) && sign(x - z) == sign(w[j] - w[i + 1])) ++count;
  }
  return count;
}

std::int64_t weight_exponent(const Pattern& p, const AlphabetVector& m,
                             const std::vector<int>& run, int j) {
  auto rule = rule_of(p);
  if (!rule) throw PatternNotInTable("pattern (" + p.to_string() + ") has no operator rule");

  const int n = m.alphabet_size();
  const int k = static_cast<int>(run.size());
  if (k == 0) throw InvalidSubset("empty run");
  for (int idx = 0; idx < k; ++idx) {
    int t = run[idx];
    if (t < 1 || t > n) throw InvalidSubset("run letter " + std::to_string(t) + " outside [n]");
    if (m[t] < 1) throw InvalidSubset("run letter " + std::to_string(t) + " has multiplicity 0");
    if (idx > 0 && run[idx - 1] <= t) throw InvalidSubset("run must be strictly decreasing");
  }
  if (j < 1 || j > k - 1) throw InvalidSubset("factor index out of range");

  // Sum of m_lo..m_hi (1-based, empty when lo > hi).
  auto range = [&](int lo, int hi) {
    std::int64_t s = 0;
    for (int i = std::max(lo, 1); i <= std::min(hi, n); ++i) s += m[i];
    return s;
  };
  const int upper = run[j - 1];  // t_j
  const int lower = run[j];      // t_{j+1}

  switch (*rule) {
    case Rule::ba:
    case Rule::ab:
      return 1;
    case Rule::acb:
      return range(1, lower - 1) - k + j + 1;
    case Rule::abc:
      return range(1, lower - 1);
    case Rule::bca:
    case Rule::bac:
      return range(lower + 1, upper - 1);
    case Rule::cba:
      return range(upper + 1, n);
    case Rule::cab:
      return range(upper + 1, n) - j + 1;
    case Rule::aba:
    case Rule::aab:
      return m[lower] - 1;
    case Rule::bba:
    case Rule::bab:
      return m[upper] - 1;
  }
  return 0;
}

}  // namespace qpat
