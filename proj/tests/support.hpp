#pragma once

// Shared fixtures and independent oracles for the test binaries. Nothing here
// calls into the library's verifier or binomial code.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcycle/mcycle.hpp"

namespace testing_support {

inline std::string golden_path(const std::string& name) { return std::string(MCYCLE_GOLDEN_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline mcycle::CyclicSequence golden(const std::string& name) {
  return mcycle::parse_sequence_file(read_text(golden_path(name)));
}

/// Printed digit strings; '0' stands for 10, spaces are layout only.
inline std::vector<int> printed(std::string_view s) {
  std::vector<int> out;
  for (char c : s)
    if (c != ' ') out.push_back(c == '0' ? 10 : c - '0');
  return out;
}

namespace text {
inline constexpr std::string_view cycle_5_3 = "1112335 2223441 3334552 4445113 5551224";
inline constexpr std::string_view ucycle_8_3 = "1235783 6782458 3457125 8124672 5671347 2346814 7813561 4568236";
inline constexpr std::string_view x_prime =
    "12123235757878383 63676782424545858 3434571712525 81812464672 56567131347 2723468681414 7813561 4568236";
inline constexpr std::string_view x_double_prime =
    "12123235757878383 63676782424545858 3434571712525 81812464672 56567131347 2723468681414 7813561 4568236 "
    "111555333777444888222666";
inline constexpr std::string_view base10_S = "11144 42223 33121 24343";
inline constexpr std::string_view base10_T =
    "11522 63374 45166 27732 57366 77135 34641 71555 36127 42556 66477 75526 4576";
inline constexpr std::string_view base10_T_prime =
    "11822 93304 48199 20032 80399 00138 34941 01888 39120 42889 99400 08829 4809";
inline constexpr std::string_view base10_U = "55007 59966 89797 68877 06585 8060";
inline constexpr std::string_view base10_V = "69450 36925 01695 84793 58279 15870 46837 02681 709";
inline constexpr std::string_view base11_S = "11122 23114 22513 32444 33352 54541 43555";
inline constexpr std::string_view mcycle_5_2 = "112233445513524";
inline constexpr std::string_view ucycle_5_2 = "1234513524";
}  // namespace text

/// C(n,k) from Pascal's triangle in 128-bit arithmetic.
inline unsigned __int128 pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<unsigned __int128> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j > 0; --j) row[j] += row[j - 1];
  return row[k];
}

/// Every sorted t-tuple over [n], with or without repeats, by recursion.
inline std::vector<std::vector<int>> all_tuples(int n, int t, bool repeats) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (static_cast<int>(cur.size()) == t) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      self(self, repeats ? v : v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Brute-force universal cycle check: count each sorted cyclic window in a
/// map and compare against the full list of t-multisets or t-subsets.
inline bool brute_force_universal(const std::vector<int>& seq, int n, int t, bool multiset) {
  if (seq.size() < static_cast<std::size_t>(t)) return false;
  std::map<std::vector<int>, int> seen;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::vector<int> w;
    for (int k = 0; k < t; ++k) w.push_back(seq[(i + k) % seq.size()]);
    std::sort(w.begin(), w.end());
    if (++seen[w] > 1) return false;
  }
  const auto expected = all_tuples(n, t, multiset);
  if (seen.size() != expected.size()) return false;
  for (const auto& e : expected)
    if (!seen.count(e)) return false;
  return true;
}

inline bool brute_force_universal(const mcycle::CyclicSequence& s) {
  return brute_force_universal(s.vec(), s.n(), s.t(), s.kind() == mcycle::Kind::multiset);
}

}  // namespace testing_support
