// mcycle: construct, verify, search and draw universal cycles for
// t-multisets and t-subsets of [n].
//
// Exit codes: 0 success, 1 verification failed, 2 construction impossible,
// 3 input or format error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mcycle/mcycle.hpp"

namespace {

enum Exit : int { ok = 0, invalid = 1, impossible = 2, bad_input = 3 };

int exit_code(mcycle::errc code) {
  switch (code) {
    case mcycle::errc::bad_pattern:
    case mcycle::errc::not_eulerian:
    case mcycle::errc::not_coprime_shift:
    case mcycle::errc::budget_exceeded:
      return impossible;
    case mcycle::errc::verification_failed:
      return invalid;
    case mcycle::errc::input:
    case mcycle::errc::not_a_ucycle:
      return bad_input;
  }
  return bad_input;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mcycle::error(mcycle::errc::input, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mcycle::error(mcycle::errc::input, "cannot write " + path);
  out << text;
}

struct ConstructArgs {
  std::string method = "transition";
  int n = 0;
  int t = 0;
  std::string kind = "m";
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  using namespace mcycle;
  const Kind kind = kind_from_code(a.kind);
  std::optional<CyclicSequence> result;
  if (a.method == "transition") {
    if (a.t == 1 || a.t == 2) {
      result = construct_direct(a.n, a.t, kind);
    } else {
      auto r = construct_cycle(a.n, a.t, kind, a.seed);
      if (!r.default_policy)
        std::cerr << "note: default representatives failed; used assignment #" << r.assignments_tried << "\n";
      result = std::move(r.cycle);
    }
  } else if (a.method == "induct") {
    if (a.t != 3 || kind != Kind::multiset) throw error(errc::input, "induct builds 3-Mcycles only (--t 3 --kind m)");
    result = induct3::construct3(a.n);
  } else if (a.method == "convert") {
    if (a.in.empty()) throw error(errc::input, "convert needs --in with a Ucycle file");
    const auto source = parse_sequence_file(read_file(a.in));
    if ((a.n && a.n != source.n()) || (a.t && a.t != source.t()))
      throw error(errc::input, "--n/--t disagree with the input file header");
    if (source.t() == 3) result = convert::convert3(source);
    else if (source.t() == 2) result = convert::convert2(source);
    else throw error(errc::input, "convert handles 2- and 3-Ucycles");
  } else {
    throw error(errc::input, "unknown method " + a.method);
  }
  const auto report = verify_cycle(*result);
  if (!report.ok) {
    std::cerr << render_report(report);
    return invalid;
  }
  write_output(a.out, write_sequence_file(*result));
  std::cerr << report_key_values(report) << "\n";
  return ok;
}

int run_verify(const std::string& path) {
  const auto seq = mcycle::parse_sequence_file(read_file(path));
  const auto report = mcycle::verify_cycle(seq);
  std::cout << mcycle::render_report(report);
  return report.ok ? ok : invalid;
}

struct SearchArgs {
  int n = 0;
  int t = 0;
  bool first = false;
  bool count = false;
  bool all = false;
  std::string equiv = "relabel";
  std::string prefix;
  std::uint64_t budget = 10'000;
  std::uint64_t seed = 0;
  std::uint64_t limit = 0;
};

int run_search(const SearchArgs& a) {
  using namespace mcycle::search;
  SearchConfig cfg;
  cfg.n = a.n;
  cfg.t = a.t;
  cfg.budget = a.budget;
  cfg.seed = a.seed;
  cfg.limit = a.limit;
  if (a.equiv == "raw") cfg.equivalence = Equivalence::raw;
  else if (a.equiv == "relabel") cfg.equivalence = Equivalence::relabel;
  else if (a.equiv == "relabel-rotation") cfg.equivalence = Equivalence::relabel_rotation;
  else throw mcycle::error(mcycle::errc::input, "unknown equivalence " + a.equiv);
  std::istringstream ps(a.prefix);
  for (int s; ps >> s;) cfg.prefix.push_back(s);

  if (a.count) {
    std::uint64_t count = 0;
    cfg.mode = Mode::count;
    if (cfg.prefix.empty() && cfg.limit == 0) {
      count = count_distinct(a.n, a.t, cfg.equivalence, a.budget);
    } else {
      count = backtrack(cfg, [](const mcycle::CyclicSequence&) { return true; });
    }
    std::cout << "count=" << count << "\n";
    return ok;
  }
  if (a.all) {
    cfg.mode = Mode::all;
    backtrack(cfg, [](const mcycle::CyclicSequence& s) {
      std::cout << mcycle::to_string(s.symbols()) << "\n";
      return true;
    });
    return ok;
  }
  auto found = find_first(cfg);
  if (!found) {
    std::cerr << "no " << a.t << "-Mcycle on [" << a.n << "] in this branch\n";
    return impossible;
  }
  std::cout << mcycle::write_sequence_file(*found);
  return ok;
}

int run_graph(int n, int t, const std::string& kind, const std::string& dot) {
  const auto g = mcycle::build_graph(n, t, mcycle::kind_from_code(kind));
  write_output(dot, mcycle::render_dot(g));
  std::cerr << "vertices=" << g.vertices.size() << " edges=" << g.edges.size()
            << " eulerian=" << (mcycle::is_eulerian(g) ? "true" : "false") << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal cycles for t-multisets and t-subsets of [n]"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a universal cycle and write it as a sequence file");
  construct->add_option("--method", ca.method, "transition | induct | convert")
      ->check(CLI::IsMember({"transition", "induct", "convert"}));
  construct->add_option("--n", ca.n, "Ground set size");
  construct->add_option("--t", ca.t, "Window size");
  construct->add_option("--kind", ca.kind, "m (multisets) or u (subsets)")->check(CLI::IsMember({"m", "u"}));
  construct->add_option("--seed", ca.seed, "Tie-break seed for the eulerian circuit");
  construct->add_option("--in", ca.in, "Ucycle file (convert)");
  construct->add_option("--out", ca.out, "Output file (default stdout)");

  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "Check a sequence file");
  verify->add_option("--in", verify_in, "Sequence file")->required();

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive search for Mcycles");
  search->add_option("--n", sa.n, "Ground set size")->required();
  search->add_option("--t", sa.t, "Window size")->required();
  auto* first = search->add_flag("--first", sa.first, "Print the first Mcycle found");
  auto* count = search->add_flag("--count", sa.count, "Count equivalence classes");
  auto* all = search->add_flag("--all", sa.all, "Print every Mcycle");
  first->excludes(count)->excludes(all);
  count->excludes(all);
  search->add_option("--equiv", sa.equiv, "raw | relabel | relabel-rotation");
  search->add_option("--prefix", sa.prefix, "Branch prefix, space separated symbols");
  search->add_option("--budget", sa.budget, "Maximum cycle length");
  search->add_option("--seed", sa.seed, "Symbol order seed");
  search->add_option("--limit", sa.limit, "Stop after this many results");

  int gn = 0, gt = 0;
  std::string gkind = "m", gdot;
  auto* graph = app.add_subcommand("graph", "Export a transition graph as DOT");
  graph->add_option("--n", gn, "Ground set size")->required();
  graph->add_option("--t", gt, "Window size")->required();
  graph->add_option("--kind", gkind, "m or u")->check(CLI::IsMember({"m", "u"}));
  graph->add_option("--dot", gdot, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bad_input;
  }

  try {
    if (*construct) {
      if (ca.method != "convert" && (ca.n < 1 || ca.t < 1))
        throw mcycle::error(mcycle::errc::input, "--n and --t are required");
      return run_construct(ca);
    }
    if (*verify) return run_verify(verify_in);
    if (*search) {
      if (!sa.first && !sa.count && !sa.all) sa.first = true;
      return run_search(sa);
    }
    if (*graph) return run_graph(gn, gt, gkind, gdot);
  } catch (const mcycle::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  }
  return bad_input;
}
