#pragma once

// Universal cycles for t = 1 and t = 2, where transition graphs degenerate.
// t = 1: any permutation of [n]. t = 2: an eulerian circuit of the complete
// graph on [n], with a loop at every vertex for multisets; exists iff n odd.

#include <vector>

#include "mcycle/sequence.hpp"
#include "mcycle/verify.hpp"

namespace mcycle {

inline CyclicSequence construct_direct(int n, int t, Kind kind) {
  if (n < 1) throw error(errc::input, "n must be positive");
  if (t == 1) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i + 1;
    return CyclicSequence(std::move(s), n, 1, kind);
  }
  if (t != 2) throw error(errc::input, "direct construction covers t = 1 and t = 2 only");
  if (n % 2 == 0)
    throw error(errc::not_eulerian, "complete graph on an even number of vertices has odd degrees");
  if (kind == Kind::subset && n < 3) throw error(errc::input, "2-Ucycles need n >= 3");

  std::vector<std::vector<bool>> left(n, std::vector<bool>(n, true));
  if (kind == Kind::subset)
    for (int v = 0; v < n; ++v) left[v][v] = false;
  std::vector<std::size_t> cursor(n, 0);
  std::vector<int> stack{0};
  std::vector<int> walk;
  while (!stack.empty()) {
    const int u = stack.back();
    auto& c = cursor[u];
    while (c < static_cast<std::size_t>(n) && !left[u][c]) ++c;
    if (c < static_cast<std::size_t>(n)) {
      const int v = static_cast<int>(c);
      left[u][v] = left[v][u] = false;
      stack.push_back(v);
    } else {
      walk.push_back(u + 1);
      stack.pop_back();
    }
  }
  walk.pop_back();  // closing vertex repeats the start
  CyclicSequence seq(std::move(walk), n, 2, kind);
  require_valid(seq, "direct t=2 construction");
  return seq;
}

}  // namespace mcycle
