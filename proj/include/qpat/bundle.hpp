#pragma once

#include <string>
#include <vector>

#include "qpat/pattern.hpp"

namespace qpat {

struct PatternBinding {
  Pattern pattern;
  std::string variable;
};

// A set of patterns, each counted by its own indeterminate.
class StatisticBundle {
 public:
  StatisticBundle() = default;
  explicit StatisticBundle(std::vector<PatternBinding> bindings);

  // Binds patterns to q, t, u, v, w, x, y, z, then s1, s2, ... in order.
  static StatisticBundle of(const std::vector<Pattern>& patterns);
  static StatisticBundle single(const Pattern& p, std::string variable = "q");

  static std::string default_variable(std::size_t index);

  const std::vector<PatternBinding>& bindings() const { return bindings_; }
  std::vector<std::string> variables() const;
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }

 private:
  std::vector<PatternBinding> bindings_;
};

}  // namespace qpat
