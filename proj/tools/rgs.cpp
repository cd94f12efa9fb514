// Command line front end: generate the lists, verify them against the
// brute-force oracle, reproduce the distance tables, check the descent
// conjecture, and export recursion trees as DOT.
//
// Exit codes: 0 ok, 1 verification/conjecture failure, 2 usage error,
// 3 resource guard.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "rgs/rgs.hpp"

namespace {

enum class Format { Lines, Compact, Csv, Dot };

const std::map<std::string, rgs::ClassId> kClassNames = {
    {"se", rgs::ClassId::Subexcedant}, {"asc", rgs::ClassId::Ascent},
    {"rgf", rgs::ClassId::Rgf},        {"stair", rgs::ClassId::Staircase},
    {"desc", rgs::ClassId::Descent}};

const std::map<std::string, rgs::OrderId> kOrderNames = {
    {"rgc", rgs::OrderId::Rgc}, {"corgc", rgs::OrderId::CoRgc}};

const std::map<std::string, Format> kFormatNames = {{"lines", Format::Lines},
                                                    {"compact", Format::Compact},
                                                    {"csv", Format::Csv},
                                                    {"dot", Format::Dot}};

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::string format_sequence(Format f, rgs::SeqView s) {
  switch (f) {
    case Format::Compact: return rgs::compact_string(s);
    case Format::Csv: return rgs::csv_string(s);
    default: return rgs::spaced_string(s);
  }
}

int run_gen(rgs::ClassId cls, rgs::OrderId order, int n, Format format,
            long long limit, bool force) {
  if (format == Format::Dot) {
    std::cerr << "gen: format dot is only valid for the tree command\n";
    return kExitUsage;
  }
  if (format == Format::Compact && n > 10) {
    std::cerr << "gen: compact format needs single-digit values (n <= 10)\n";
    return kExitUsage;
  }
  if (limit == 0) return 0;
  std::string line;
  long long emitted = 0;
  auto emit = [&](rgs::SeqView s) -> bool {
    line = format_sequence(format, s);
    line += '\n';
    std::fwrite(line.data(), 1, line.size(), stdout);
    ++emitted;
    return limit < 0 || emitted < limit;
  };
  if (cls == rgs::ClassId::Descent) {
    // no generator for descent sequences; positive-direction list via oracle
    if (order != rgs::OrderId::CoRgc) {
      std::cerr << "gen: class desc is only available with --order corgc\n";
      return kExitUsage;
    }
    for (const rgs::Sequence& s : rgs::oracle_list(cls, n, order, force))
      if (!emit(s)) break;
    return 0;
  }
  if (order == rgs::OrderId::Rgc)
    rgs::gen_rgc(cls, n, emit);
  else
    rgs::gen_corgc(cls, n, emit);
  return 0;
}

int run_verify(rgs::ClassId cls, rgs::OrderId order, int n, bool force) {
  if (cls == rgs::ClassId::Descent) {
    std::cerr << "verify: class desc has no generator to verify\n";
    return kExitUsage;
  }
  const auto expected = rgs::oracle_list(cls, n, order, force);
  std::size_t index = 0;
  bool diverged = false;
  rgs::TransitionAccumulator acc;
  auto vis = [&](rgs::SeqView s) -> bool {
    acc.feed(s);
    if (index >= expected.size() ||
        !std::equal(s.begin(), s.end(), expected[index].begin(), expected[index].end())) {
      std::cout << "DIVERGENCE at index " << index << ": generator "
                << rgs::spaced_string(s) << ", oracle "
                << (index < expected.size() ? rgs::spaced_string(expected[index])
                                            : std::string("<exhausted>"))
                << "\n";
      diverged = true;
      return false;
    }
    ++index;
    return true;
  };
  if (order == rgs::OrderId::Rgc)
    rgs::gen_rgc(cls, n, vis);
  else
    rgs::gen_corgc(cls, n, vis);
  if (diverged) return kExitFail;
  if (index != expected.size()) {
    std::cout << "DIVERGENCE: generator emitted " << index << " of "
              << expected.size() << " sequences\n";
    return kExitFail;
  }

  const int ci = cls == rgs::ClassId::Subexcedant ? 0
                 : cls == rgs::ClassId::Ascent    ? 1
                 : cls == rgs::ClassId::Rgf       ? 2
                                                  : 3;
  const int bound = rgs::kWorstBound[order == rgs::OrderId::Rgc ? 0 : 1][ci];
  const auto stats = acc.finish();
  // circular bound applies everywhere except subexcedant under Co-RGC
  const bool circ = order == rgs::OrderId::Rgc || cls != rgs::ClassId::Subexcedant;
  if (stats.max_window > bound || (circ && stats.circular_window > bound)) {
    std::cout << "BOUND EXCEEDED: window " << stats.max_window << " (circular "
              << stats.circular_window << ") > " << bound << "\n";
    return kExitFail;
  }
  std::cout << "verify " << rgs::name(cls) << " " << rgs::name(order) << " n=" << n
            << ": " << expected.size() << " sequences, worst distance " << stats.worst
            << " (bound " << bound << ") -- OK\n";
  return 0;
}

int run_stats(int n_min, int n_max, Format format) {
  const auto t2 = rgs::table2_report(n_min, n_max);
  if (format == Format::Csv) {
    std::cout << "n,SE_rgc,A_rgc,R_rgc,S_rgc,SE_corgc,A_corgc,R_corgc,S_corgc\n";
    for (int i = 0; i < static_cast<int>(t2.rows.size()); ++i) {
      std::cout << t2.n_min + i;
      for (const std::string& cell : t2.rows[i]) std::cout << ',' << cell;
      std::cout << '\n';
    }
    return 0;
  }

  std::cout << "Average distance between successive sequences\n";
  std::printf("%3s  %8s %8s %8s %8s  %8s %8s %8s %8s\n", "n", "SE_rgc", "A_rgc",
              "R_rgc", "S_rgc", "SE_corgc", "A_corgc", "R_corgc", "S_corgc");
  for (int i = 0; i < static_cast<int>(t2.rows.size()); ++i) {
    std::printf("%3d ", t2.n_min + i);
    for (int j = 0; j < 8; ++j)
      std::printf(" %8s%s", t2.rows[i][j].c_str(), j == 3 ? " " : "");
    std::printf("\n");
  }

  const auto t1 = rgs::table1_report(std::min(n_max, 10));
  std::cout << "\nWorst-case distance, n = " << t1.n_min << ".." << t1.n_max
            << " (observed / bound)\n";
  static const char* kClassCol[] = {"SE", "A", "R", "S"};
  std::printf("%8s %12s %12s\n", "class", "rgc", "corgc");
  bool exceeded = false;
  for (int c = 0; c < 4; ++c) {
    std::printf("%8s", kClassCol[c]);
    for (int o = 0; o < 2; ++o) {
      const auto& cell = t1.cells[o][c];
      std::printf("      %d / %d ", cell.observed, cell.bound);
      exceeded = exceeded || cell.observed > cell.bound;
    }
    std::printf("\n");
  }
  if (exceeded) {
    std::cout << "\nWORST-CASE BOUND EXCEEDED\n";
    return kExitFail;
  }
  return 0;
}

int run_conjecture(int n_max, bool force) {
  for (int n = 2; n <= n_max; ++n) {
    const auto list =
        rgs::oracle_list(rgs::ClassId::Descent, n, rgs::OrderId::CoRgc, force);
    const auto violation = rgs::first_window_violation(list, 4, false);
    if (violation) {
      const std::size_t i = *violation;
      const auto pd = rgs::detail::pair_delta(list[i], list[i + 1]);
      std::cout << "CONJECTURE FAILS at n=" << n << ", pair " << i << ":\n  "
                << rgs::spaced_string(list[i]) << "\n  "
                << rgs::spaced_string(list[i + 1]) << "\n"
                << "These successors differ in " << pd.distance
                << " positions spanning a window of " << pd.window
                << "; 4-adjacency requires the window to be at most 4.\n"
                << "This is a counterexample to the conjectured 4-adjacency; "
                   "the plain 4-Gray property (Hamming distance <= 4) may still hold.\n";
      return kExitFail;
    }
    std::cout << "n=" << n << ": " << list.size()
              << " descent sequences, 4-adjacent -- OK\n";
  }
  return 0;
}

int run_tree(rgs::ClassId cls, rgs::OrderId order, int n) {
  if (cls == rgs::ClassId::Descent) {
    std::cerr << "tree: class desc has no generator\n";
    return kExitUsage;
  }
  if (n > 8) {
    std::cerr << "tree: n > 8 refused (tree size)\n";
    return kExitGuard;
  }
  const auto tree = rgs::build_recursion_tree(cls, order, n);
  std::string graph = std::string("gen_") + rgs::name(order) + "_" +
                      rgs::name(cls) + "_" + std::to_string(n);
  rgs::write_dot(std::cout, tree, graph);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gray code lists of restricted growth sequences"};
  app.require_subcommand(1);

  rgs::ClassId cls = rgs::ClassId::Ascent;
  rgs::OrderId order = rgs::OrderId::Rgc;
  int n = 5;
  long long limit = -1;
  bool force = false;
  Format format = Format::Lines;
  int n_min = 4, n_max = 10;

  auto add_class = [&](CLI::App* cmd) {
    cmd->add_option("--class", cls, "sequence family")
        ->required()
        ->transform(CLI::CheckedTransformer(kClassNames, CLI::ignore_case));
  };
  auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", order, "list order")
        ->required()
        ->transform(CLI::CheckedTransformer(kOrderNames, CLI::ignore_case));
  };
  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "sequence length")->required()->check(CLI::PositiveNumber);
  };

  CLI::App* gen = app.add_subcommand("gen", "stream a list in order");
  add_class(gen);
  add_order(gen);
  add_n(gen);
  gen->add_option("--format", format, "lines | compact | csv")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
  gen->add_option("--limit", limit, "stop after this many sequences");
  gen->add_flag("--force", force, "override the oracle size guard");

  CLI::App* verify = app.add_subcommand("verify", "generator vs oracle, plus distance bound");
  add_class(verify);
  add_order(verify);
  add_n(verify);
  verify->add_flag("--force", force, "override the oracle size guard");

  CLI::App* stats = app.add_subcommand("stats", "worst and average distance tables");
  stats->add_option("--n-min", n_min, "first length")->check(CLI::PositiveNumber);
  stats->add_option("--n-max", n_max, "last length")->check(CLI::PositiveNumber);
  stats->add_option("--format", format, "text | csv")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

  CLI::App* conjecture =
      app.add_subcommand("conjecture", "4-adjacency of descent sequences in corgc order");
  conjecture->add_option("--n-max", n_max, "check n = 2..n_max")->required();
  conjecture->add_flag("--force", force, "override the oracle size guard");

  CLI::App* tree = app.add_subcommand("tree", "recursion tree as Graphviz DOT");
  add_class(tree);
  add_order(tree);
  add_n(tree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message/help
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(cls, order, n, format, limit, force);
    if (verify->parsed()) return run_verify(cls, order, n, force);
    if (stats->parsed())
      return run_stats(n_min, n_max, format == Format::Csv ? Format::Csv : Format::Lines);
    if (conjecture->parsed()) return run_conjecture(n_max, force);
    if (tree->parsed()) return run_tree(cls, order, n);
  } catch (const rgs::resource_guard_error& e) {
    std::cerr << e.what() << " (use --force to override)\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
