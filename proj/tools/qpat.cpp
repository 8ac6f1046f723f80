// qpat: count generalized pattern occurrences and compute their q-distributions.
//
// Exit codes: 0 ok, 1 other error, 2 parse/usage error, 3 incompatible bundle,
// 4 unsupported method or pattern.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpat/analysis.hpp"
#include "qpat/errors.hpp"
#include "qpat/pattern.hpp"
#include "qpat/polynomial.hpp"

namespace {

using namespace qpat;

struct TargetArgs {
  std::string m;
  int n = -1;
  std::string n_range;
  CLI::Option* opt_m = nullptr;
  CLI::Option* opt_n = nullptr;
  CLI::Option* opt_r = nullptr;

  void add_to(CLI::App* cmd, bool with_range) {
    opt_m = cmd->add_option("--m", m, "alphabet vector, e.g. 1,1,1,2");
    opt_n = cmd->add_option("--n", n, "permutations of size n");
    opt_m->excludes(opt_n);
    if (with_range) {
      opt_r = cmd->add_option("--n-range", n_range, "permutation sizes, e.g. 1..10");
      opt_r->excludes(opt_m)->excludes(opt_n);
    }
  }

  // Targets in the order they are reported.
  std::vector<Target> targets() const {
    if (opt_m->count() > 0) return {Target::multiset(AlphabetVector::parse(m))};
    if (opt_n->count() > 0) {
      if (n < 0) throw ParseError("--n must be nonnegative");
      return {Target::permutations(n)};
    }
    if (opt_r != nullptr && opt_r->count() > 0) {
      auto dots = n_range.find("..");
      if (dots == std::string::npos) throw ParseError("--n-range expects LO..HI");
      int lo = 0;
      int hi = 0;
      try {
        lo = std::stoi(n_range.substr(0, dots));
        hi = std::stoi(n_range.substr(dots + 2));
      } catch (const std::exception&) {
        throw ParseError("--n-range expects LO..HI");
      }
      if (lo < 0 || hi < lo) throw ParseError("--n-range expects 0 <= LO <= HI");
      std::vector<Target> out;
      for (int k = lo; k <= hi; ++k) out.push_back(Target::permutations(k));
      return out;
    }
    throw ParseError("a target is required (--m or --n)");
  }

  Target single() const {
    auto ts = targets();
    if (ts.size() != 1) throw ParseError("expected a single target");
    return ts.front();
  }
};

const std::map<std::string, Method> kMethods{{"auto", Method::automatic},
                                             {"bf", Method::bf},
                                             {"cluster", Method::cluster},
                                             {"closed", Method::closed}};
const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

void print(const Polynomial& p, Format format, const std::vector<std::string>& columns) {
  std::string out = serialize(p, format, columns);
  std::cout << out;
  if (out.empty() || out.back() != '\n') std::cout << '\n';
}

template <typename F>
int guarded(F&& body) {
  try {
    body();
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "qpat: " << e.what() << '\n';
    return 2;
  } catch (const IncompatibleBundle& e) {
    std::cerr << "qpat: incompatible bundle: " << e.what() << '\n';
    return 3;
  } catch (const UnsupportedPattern& e) {
    std::cerr << "qpat: unsupported: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "qpat: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-distributions of generalized permutation patterns"};
  app.require_subcommand(1);

  // count
  std::string count_pattern;
  std::string count_word;
  auto* count = app.add_subcommand("count", "occurrences of a pattern in a word");
  count->add_option("pattern", count_pattern, "pattern, e.g. a-cb")->required();
  count->add_option("word", count_word, "digits (letters <= 9) or comma-separated integers")
      ->required();

  // dist
  std::vector<std::string> dist_patterns;
  TargetArgs dist_target;
  std::string dist_method = "auto";
  std::string dist_format = "text";
  auto* dist = app.add_subcommand("dist", "distribution of one or more patterns");
  dist->add_option("patterns", dist_patterns, "patterns, bound to q, t, u, ... in order")
      ->required();
  dist_target.add_to(dist, false);
  dist->add_option("--method", dist_method)->check(CLI::IsMember({"auto", "bf", "cluster", "closed"}));
  dist->add_option("--format", dist_format)->check(CLI::IsMember({"text", "json", "csv"}));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "equidistribution, avoidance, packing, compound");
  analyze->require_subcommand(1);

  std::string eq_first;
  std::string eq_second;
  int eq_max_size = 6;
  std::vector<std::string> eq_ms;
  auto* equidist = analyze->add_subcommand("equidist", "compare two distributions over word classes");
  equidist->add_option("first", eq_first)->required();
  equidist->add_option("second", eq_second)->required();
  auto* eq_size_opt = equidist->add_option("--max-size", eq_max_size,
                                           "all alphabet vectors with total size <= N");
  equidist->add_option("--m", eq_ms, "explicit alphabet vectors")->excludes(eq_size_opt);

  std::string avoid_pattern;
  TargetArgs avoid_target;
  auto* avoid = analyze->add_subcommand("avoid", "number of words avoiding a pattern");
  avoid->add_option("pattern", avoid_pattern)->required();
  avoid_target.add_to(avoid, true);

  std::string pack_pattern;
  TargetArgs pack_target;
  auto* pack = analyze->add_subcommand("pack", "largest number of occurrences of a pattern");
  pack->add_option("pattern", pack_pattern)->required();
  pack_target.add_to(pack, true);

  std::string compound_spec;
  TargetArgs compound_target;
  bool compound_euler_mahonian = false;
  std::string compound_format = "text";
  auto* compound = analyze->add_subcommand("compound", "distribution of a weighted pattern sum");
  compound->add_option("terms", compound_spec, "\"maj\" or e.g. \"ba:1,a-cb:2\"")->required();
  compound_target.add_to(compound, false);
  compound->add_flag("--euler-mahonian", compound_euler_mahonian,
                     "with maj: sum of t^maj q^des");
  compound->add_option("--format", compound_format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (count->parsed()) {
    return guarded([&] {
      std::cout << occurrences(Pattern::parse(count_pattern), Word::parse(count_word)) << '\n';
    });
  }

  if (dist->parsed()) {
    return guarded([&] {
      std::vector<Pattern> patterns;
      for (const auto& s : dist_patterns) patterns.push_back(Pattern::parse(s));
      auto bundle = StatisticBundle::of(patterns);
      auto p = distribution(bundle, dist_target.single(), kMethods.at(dist_method));
      print(p, kFormats.at(dist_format), bundle.variables());
    });
  }

  if (equidist->parsed()) {
    return guarded([&] {
      Pattern first = Pattern::parse(eq_first);
      Pattern second = Pattern::parse(eq_second);
      std::vector<AlphabetVector> ms;
      if (!eq_ms.empty()) {
        for (const auto& s : eq_ms) ms.push_back(AlphabetVector::parse(s));
      } else {
        if (eq_max_size < 0) throw ParseError("--max-size must be nonnegative");
        ms = compositions_up_to(eq_max_size);
      }
      auto report = equidistributed(first, second, ms);
      for (const auto& m : report.tested) {
        bool differs = report.mismatch && report.mismatch->m == m;
        std::cout << m.to_string() << ' ' << (differs ? "differ" : "equal") << '\n';
      }
      if (report.equal()) {
        std::cout << "all equal (" << report.tested.size() << " alphabet vectors)\n";
      } else {
        std::cout << "(" << first.to_string() << "): " << to_text(report.mismatch->first) << '\n'
                  << "(" << second.to_string() << "): " << to_text(report.mismatch->second)
                  << '\n';
      }
    });
  }

  if (avoid->parsed() || pack->parsed()) {
    bool is_avoid = avoid->parsed();
    return guarded([&] {
      Pattern p = Pattern::parse(is_avoid ? avoid_pattern : pack_pattern);
      const TargetArgs& args = is_avoid ? avoid_target : pack_target;
      std::string sep;
      for (const auto& t : args.targets()) {
        std::cout << sep;
        if (is_avoid) {
          std::cout << avoidance_count(p, t).get_str();
        } else {
          std::cout << packing_degree(p, t);
        }
        sep = ",";
      }
      std::cout << '\n';
    });
  }

  if (compound->parsed()) {
    return guarded([&] {
      auto target = compound_target.single();
      Format format = kFormats.at(compound_format);
      if (compound_euler_mahonian) {
        if (compound_spec != "maj") throw ParseError("--euler-mahonian requires the terms \"maj\"");
        print(euler_mahonian(target), format, {"q", "t"});
      } else {
        print(compound_distribution(parse_compound(compound_spec), target), format, {"q"});
      }
    });
  }

  return 0;
}
