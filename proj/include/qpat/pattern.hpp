#pragma once

/**
 * Generalized (dashed) patterns, words and alphabet vectors.
 *
 * A pattern is a sequence of blocks; letters inside a block must match
 * adjacent positions of a word, while consecutive blocks only need to appear
 * in order. Letters are ranks 1..r (written a, b, c, ...); equal ranks match
 * equal word letters and rank order matches value order.
 *
 * Positions in words are 1-based throughout.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpat {

using Letter = int;

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Accepts "2637541" (every letter a single digit 1..9) or integers
  // separated by commas and/or whitespace.
  static Word parse(std::string_view s);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t pos) const { return letters_[pos - 1]; }  // 1-based
  Letter max_letter() const;

  Word reversed() const;
  // n + 1 - w_i for each letter; n defaults to the largest letter.
  Word complemented(int alphabet_size) const;

  std::vector<std::size_t> descents() const;  // {i : w_i > w_{i+1}}
  std::vector<std::size_t> rises() const;     // {i : w_i < w_{i+1}}

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Multiplicities (m_1, ..., m_n) of the letters 1..n.
class AlphabetVector {
 public:
  AlphabetVector() = default;
  explicit AlphabetVector(std::vector<int> counts);

  // "1,1,1,2"
  static AlphabetVector parse(std::string_view s);
  // Content of a word over [n]; n defaults to the largest letter.
  static AlphabetVector content_of(const Word& w, int alphabet_size = 0);
  static AlphabetVector permutations(int n) { return AlphabetVector(std::vector<int>(n, 1)); }

  const std::vector<int>& counts() const { return counts_; }
  int alphabet_size() const { return static_cast<int>(counts_.size()); }
  int operator[](int letter) const { return counts_[letter - 1]; }  // 1-based letter
  int total() const;
  bool is_palindromic() const;

  std::string to_string() const;

  friend bool operator==(const AlphabetVector&, const AlphabetVector&) = default;
  friend auto operator<=>(const AlphabetVector&, const AlphabetVector&) = default;

 private:
  std::vector<int> counts_;
};

enum class Orientation { descent, rise, none };
enum class DashType { type12, type21, adjacent, other };

// The four families of mutually combinable patterns:
//   1  descent-based type-(1,2): (ba) (a-ba) (b-ba) (a-cb) (b-ca) (c-ba)
//   2  their reversals:          (ab) (ab-a) (ab-b) (bc-a) (ac-b) (ab-c)
//   3  rise-based type-(1,2):    (ab) (a-ab) (b-ab) (a-bc) (b-ac) (c-ab)
//   4  their reversals:          (ba) (ba-a) (ba-b) (cb-a) (ca-b) (ba-c)
// The two-letter patterns belong to two boxes each.
enum class Box { none = 0, descent12 = 1, descent21 = 2, rise12 = 3, rise21 = 4 };

struct PatternClass {
  // Direction of the adjacent pair as it appears in the pattern.
  Orientation orientation = Orientation::none;
  DashType dash_type = DashType::other;
  // Home box; for (ba) and (ab) the type-(1,2) box.
  Box box = Box::none;
};

class Pattern {
 public:
  // Each block holds ranks in 1..r; every rank must occur.
  explicit Pattern(std::vector<std::vector<int>> blocks);

  // Grammar: letter+ ("-" letter+)*, letters a-z, optional surrounding
  // parentheses, case-insensitive. Ranks must be contiguous from 'a'.
  static Pattern parse(std::string_view s);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::vector<int> letters() const;  // blocks concatenated
  std::size_t length() const;
  int rank_count() const { return ranks_; }
  bool has_repeated_letters() const;

  PatternClass classify() const;
  // Every box containing this pattern (two for (ab) and (ba)).
  std::vector<Box> boxes() const;

  Pattern reversed() const;
  Pattern complemented() const;

  std::string to_string() const;  // e.g. "a-cb"

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int ranks_ = 0;
};

// Number of occurrences of p in w: index tuples strictly increasing across
// blocks, contiguous within blocks, order- and equality-isomorphic to p.
std::int64_t occurrences(const Pattern& p, const Word& w);

// The twelve length-<=3 type-(1,2) patterns that admit a weight rule:
// (ba) (a-cb) (b-ca) (c-ba) (a-ba) (b-ba) and (ab) (a-bc) (b-ac) (c-ab)
// (a-ab) (b-ab).
bool is_table_pattern(const Pattern& p);
const std::vector<Pattern>& table_patterns();
const std::vector<Pattern>& descent_table_patterns();
const std::vector<Pattern>& rise_table_patterns();

// Number of occurrences of p whose adjacent pair sits at positions (i, i+1).
// p must be a table pattern; i must be a descent of w for a descent-based p
// and a rise for a rise-based p.
std::int64_t descent_weight(const Pattern& p, const Word& w, std::size_t i);

// Exponent of the j-th factor of the cluster operator for table pattern p at
// full content m, for the run T = {t_1 > t_2 > ... > t_k}. For descent-based
// patterns this is the weight of the descent (t_j, t_{j+1}) in w t_1 ... t_k;
// for rise-based ones the weight of the rise (t_{j+1}, t_j) in
// w t_k ... t_1, where w has content m - 1_T.
std::int64_t weight_exponent(const Pattern& p, const AlphabetVector& m,
                             const std::vector<int>& run, int j);

}  // namespace qpat
