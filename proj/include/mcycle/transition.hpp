#pragma once

// Transition digraphs over form representations. Each class of differences
// gets a distinguished coordinate; the remaining t-1 coordinates of each of
// its forms label one edge from the prefix (f_1..f_{t-2}) to the suffix
// (f_2..f_{t-1}). An eulerian circuit lists every form once, and repeating
// the resulting difference string n times yields the universal cycle.

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mcycle/combinatorics.hpp"
#include "mcycle/sequence.hpp"
#include "mcycle/verify.hpp"

namespace mcycle {

/// A form written as (f_1,...,f_{t-1}; f_t) with f_t distinguished.
struct FormRep {
  std::vector<int> head;
  int distinguished = 0;

  std::vector<int> prefix() const { return {head.begin(), head.end() - 1}; }
  std::vector<int> suffix() const { return {head.begin() + 1, head.end()}; }

  std::string str() const { return "(" + detail::join(head) + ";" + std::to_string(distinguished) + ")"; }

  friend auto operator<=>(const FormRep&, const FormRep&) = default;
};

using Vertex = std::vector<int>;

struct TransitionGraph {
  struct Edge {
    FormRep rep;
    std::size_t source;  // index into vertices
    std::size_t target;
  };

  int n = 0;
  int t = 0;
  Kind kind = Kind::multiset;
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted by (source, head, distinguished)

  std::size_t vertex_index(const Vertex& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw error(errc::input, "unknown vertex (" + detail::join(v) + ")");
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

/// Default policy: distinguish the largest part of multiplicity one.
inline DifferenceClass choose_representative(DifferenceClass c) {
  const auto unique = c.unique_values();
  if (unique.empty()) {
    std::ostringstream os;
    os << "class " << c.str() << " has pattern " << pattern_of(c) << " with no part of multiplicity 1";
    throw error(errc::bad_pattern, os.str());
  }
  c.set_distinguished(unique.front());
  return c;
}

/// One representation per form of the class: every distinct ordering of the
/// non-distinguished parts, followed by the distinguished one.
inline std::vector<FormRep> forms_of_class(const DifferenceClass& c) {
  if (!c.distinguished()) throw error(errc::input, "class " + c.str() + " has no distinguished value");
  std::vector<int> rest(c.parts().begin(), c.parts().end());
  rest.erase(std::find(rest.begin(), rest.end(), *c.distinguished()));
  std::sort(rest.begin(), rest.end());
  std::vector<FormRep> out;
  do {
    out.push_back({rest, *c.distinguished()});
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

/// Graph from classes whose distinguished values are already chosen.
inline TransitionGraph build_graph(const std::vector<DifferenceClass>& classes, int n, int t, Kind kind) {
  if (t < 3) throw error(errc::input, "transition graphs need t >= 3");
  std::vector<FormRep> reps;
  for (const auto& c : classes) {
    auto fs = forms_of_class(c);
    reps.insert(reps.end(), fs.begin(), fs.end());
  }
  TransitionGraph g;
  g.n = n;
  g.t = t;
  g.kind = kind;
  for (const auto& r : reps) {
    g.vertices.push_back(r.prefix());
    g.vertices.push_back(r.suffix());
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  std::sort(reps.begin(), reps.end(), [](const FormRep& a, const FormRep& b) {
    return std::tie(a.head, a.distinguished) < std::tie(b.head, b.distinguished);
  });
  // head order starts with the prefix, so this is also source order
  for (auto& r : reps) {
    const auto s = g.vertex_index(r.prefix());
    const auto d = g.vertex_index(r.suffix());
    g.edges.push_back({std::move(r), s, d});
  }
  return g;
}

/// Graph under the default representative policy.
inline TransitionGraph build_graph(int n, int t, Kind kind) {
  if (t < 3) throw error(errc::input, "transition graphs need t >= 3");
  auto classes = enumerate_classes(n, t, kind);
  for (auto& c : classes) c = choose_representative(std::move(c));
  return build_graph(classes, n, t, kind);
}

/// Balanced degrees and one weakly connected component over the vertices
/// that carry edges.
inline bool is_eulerian(const TransitionGraph& g) {
  const std::size_t nv = g.vertices.size();
  std::vector<long> balance(nv, 0);
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> used(nv, false);
  for (const auto& e : g.edges) {
    ++balance[e.source];
    --balance[e.target];
    used[e.source] = used[e.target] = true;
    parent[find(e.source)] = find(e.target);
  }
  std::size_t root = nv;
  for (std::size_t v = 0; v < nv; ++v) {
    if (balance[v] != 0) return false;
    if (!used[v]) continue;
    if (root == nv) root = find(v);
    else if (find(v) != root) return false;
  }
  return true;
}

/// Hierholzer's algorithm. Returns edge indices of a closed walk using every
/// edge once, starting at the source of edge 0. Seed 0 follows the stored
/// edge order; other seeds shuffle each vertex's outgoing edges.
inline std::vector<std::size_t> eulerian_circuit(const TransitionGraph& g, std::uint64_t seed = 0) {
  if (!is_eulerian(g)) throw error(errc::not_eulerian, "transition graph is not eulerian");
  if (g.edges.empty()) return {};
  std::vector<std::vector<std::size_t>> out(g.vertices.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) out[g.edges[i].source].push_back(i);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (auto& adj : out) std::shuffle(adj.begin(), adj.end(), rng);
  }
  std::vector<std::size_t> next(g.vertices.size(), 0);
  std::vector<std::size_t> circuit;
  circuit.reserve(g.edges.size());
  // stack of edges on the current trail; the start vertex sits below them
  std::vector<std::size_t> stack;
  const std::size_t start = g.edges.front().source;
  auto at = [&]() { return stack.empty() ? start : g.edges[stack.back()].target; };
  for (;;) {
    const std::size_t v = at();
    if (next[v] < out[v].size()) {
      stack.push_back(out[v][next[v]++]);
    } else {
      if (stack.empty()) break;
      circuit.push_back(stack.back());
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

/// Per-edge block differences: the first head coordinate of each circuit
/// edge, so that the i-th (t-1)-window of the cyclic string is edge i's head.
inline std::vector<int> block_differences(const TransitionGraph& g, const std::vector<std::size_t>& circuit) {
  std::vector<int> d;
  d.reserve(circuit.size());
  for (auto e : circuit) d.push_back(g.edges[e].rep.head.front());
  return d;
}

/// Expands a block difference string into the full cycle: cumulative sums
/// mod n from symbol 1, over diffs repeated n times.
inline CyclicSequence emit_cycle(const std::vector<int>& diffs, int n, int t, Kind kind) {
  if (diffs.empty()) throw error(errc::input, "empty difference string");
  long sum = 0;
  for (int d : diffs) sum += d;
  const long shift = ((sum % n) + n) % n;
  if (std::gcd(shift, static_cast<long>(n)) != 1)
    throw error(errc::not_coprime_shift, "block shift " + std::to_string(shift) + " is not coprime to n=" +
                                             std::to_string(n));
  std::vector<int> out;
  out.reserve(diffs.size() * n);
  int cur = 0;  // zero-based symbol
  for (int block = 0; block < n; ++block) {
    for (int d : diffs) {
      out.push_back(cur + 1);
      cur = static_cast<int>(((cur + d) % n + n) % n);
    }
  }
  return CyclicSequence(std::move(out), n, t, kind);
}

struct TransitionResult {
  CyclicSequence cycle;
  std::vector<int> diffs;            // one block of differences
  std::vector<DifferenceClass> classes;  // with the distinguished values used
  std::size_t assignments_tried = 1;
  bool default_policy = true;        // false when the retry search was needed
};

namespace detail {

inline long block_shift(const std::vector<DifferenceClass>& classes, int n) {
  long sum = 0;
  for (const auto& c : classes)
    for (const auto& f : forms_of_class(c)) sum += f.head.front();
  return sum % n;
}

// Edges of every (class, distinguished value) option over integer vertex ids,
// for fast connectivity checks while representatives change.
struct OptionTable {
  struct Option {
    int value;
    long shift;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
  };
  std::vector<std::vector<Option>> options;  // options[class][choice]
  std::size_t vertex_count = 0;

  OptionTable(const std::vector<DifferenceClass>& classes, int n) {
    std::unordered_map<std::uint64_t, std::size_t> ids;
    auto id = [&](const std::vector<int>& v) {
      std::uint64_t key = 0;
      for (int x : v) key = key * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(x);
      return ids.try_emplace(key, ids.size()).first->second;
    };
    for (const auto& c : classes) {
      auto& opts = options.emplace_back();
      for (int v : c.unique_values()) {
        DifferenceClass d = c;
        d.set_distinguished(v);
        Option o{v, 0, {}};
        for (const auto& f : forms_of_class(d)) {
          o.shift += f.head.front();
          o.edges.emplace_back(id(f.prefix()), id(f.suffix()));
        }
        opts.push_back(std::move(o));
      }
    }
    vertex_count = ids.size();
  }

  // (components among vertices carrying edges, 1 if the shift is not coprime)
  std::pair<std::size_t, int> score(const std::vector<std::size_t>& choice, int n) const {
    std::vector<std::size_t> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<bool> used(vertex_count, false);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    long shift = 0;
    std::size_t components = 0;
    for (std::size_t i = 0; i < options.size(); ++i) {
      const auto& o = options[i][choice[i]];
      shift += o.shift;
      for (auto [a, b] : o.edges) {
        for (auto v : {a, b})
          if (!used[v]) {
            used[v] = true;
            ++components;
          }
        const auto ra = find(a), rb = find(b);
        if (ra != rb) {
          parent[ra] = rb;
          --components;
        }
      }
    }
    return {components, std::gcd(shift % n, static_cast<long>(n)) == 1 ? 0 : 1};
  }
};

}  // namespace detail

/// Full pipeline: classes -> representatives -> graph -> circuit -> cycle.
/// When the default representatives leave the graph disconnected or give a
/// block shift sharing a factor with n, classes with several multiplicity-1
/// values are switched one at a time, in class order, keeping any switch
/// that lowers (component count, shift defect); passes repeat until the
/// graph is eulerian with coprime shift or nothing improves. Then every
/// assignment of the switchable classes is scored in odometer order (last
/// class fastest). At most max_assignments assignments are scored overall.
inline TransitionResult construct_cycle(int n, int t, Kind kind, std::uint64_t seed = 0,
                                        std::size_t max_assignments = 1 << 16) {
  if (t < 3) throw error(errc::input, "transition construction needs t >= 3");
  auto classes = enumerate_classes(n, t, kind);
  for (const auto& c : classes) {
    if (c.unique_values().empty()) {
      std::ostringstream os;
      os << "class " << c.str() << " has bad pattern " << pattern_of(c) << " for (n,t)=(" << n << "," << t << ")";
      throw error(errc::bad_pattern, os.str());
    }
  }
  const detail::OptionTable table(classes, n);
  std::vector<std::size_t> choice(classes.size(), 0);  // unique_values() is largest first
  auto best = table.score(choice, n);
  std::size_t tried = 1;
  const bool default_ok = best == std::pair<std::size_t, int>{1, 0};
  for (bool improved = !default_ok; improved && best != std::pair<std::size_t, int>{1, 0};) {
    improved = false;
    for (std::size_t i = 0; i < classes.size() && tried < max_assignments; ++i) {
      const std::size_t keep = choice[i];
      for (std::size_t j = 0; j < table.options[i].size() && tried < max_assignments; ++j) {
        if (j == keep) continue;
        choice[i] = j;
        ++tried;
        const auto s = table.score(choice, n);
        if (s < best) {
          best = s;
          improved = true;
          break;
        }
        choice[i] = keep;
      }
      if (best == std::pair<std::size_t, int>{1, 0}) break;
    }
  }
  constexpr std::pair<std::size_t, int> target{1, 0};
  bool saw_connected = best.first == 1;
  if (best != target) {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (table.options[i].size() > 1) free.push_back(i);
    std::vector<std::size_t> odo(classes.size(), 0);
    auto advance = [&] {
      for (std::size_t k = free.size(); k-- > 0;) {
        if (++odo[free[k]] < table.options[free[k]].size()) return true;
        odo[free[k]] = 0;
      }
      return false;
    };
    do {
      if (tried >= max_assignments) break;
      ++tried;
      const auto s = table.score(odo, n);
      saw_connected = saw_connected || s.first == 1;
      if (s == target) {
        choice = odo;
        best = s;
        break;
      }
    } while (advance());
  }
  if (best != target && saw_connected) best = {1, 1};
  if (best.first > 1)
    throw error(errc::not_eulerian, "transition graph stays disconnected (" + std::to_string(best.first) +
                                        " components) after " + std::to_string(tried) + " representative assignments");
  if (best.second)
    throw error(errc::not_coprime_shift, "no representative assignment found with block shift coprime to n=" +
                                             std::to_string(n) + " after " + std::to_string(tried) + " assignments");
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i].set_distinguished(table.options[i][choice[i]].value);
  auto g = build_graph(classes, n, t, kind);
  const auto circuit = eulerian_circuit(g, seed);
  auto diffs = block_differences(g, circuit);
  auto cycle = emit_cycle(diffs, n, t, kind);
  require_valid(cycle, "transition construction");
  return {std::move(cycle), std::move(diffs), std::move(classes), tried, default_ok};
}

/// DOT text: one node per vertex, one labelled edge per form representation.
inline std::string render_dot(const TransitionGraph& g) {
  std::ostringstream os;
  os << "digraph " << (g.kind == Kind::multiset ? "T" : "G") << "_" << g.n << "_" << g.t << " {\n";
  for (const auto& v : g.vertices) os << "  \"" << detail::join(v) << "\";\n";
  for (const auto& e : g.edges)
    os << "  \"" << detail::join(g.vertices[e.source]) << "\" -> \"" << detail::join(g.vertices[e.target])
       << "\" [label=\"" << e.rep.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace mcycle
