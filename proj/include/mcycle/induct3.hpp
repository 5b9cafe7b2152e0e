#pragma once

// Inductive construction of 3-Mcycles on [n] for every n >= 4 with 3 !| n.
//
// A 3-Mcycle on [n-3] written as S.T (S an Mcycle on [n-6] starting 1,1,1;
// T starting 1,1 and ending n-3,n-4) extends to [n] as S' = S.T followed by
// T' = relabel(T).U.V, where relabel moves n-5,n-4,n-3 to n-2,n-1,n, U is a
// fixed 29/38-symbol gadget and V sweeps the remaining cross multisets.

#include <string>
#include <string_view>
#include <vector>

#include "mcycle/combinatorics.hpp"
#include "mcycle/sequence.hpp"
#include "mcycle/verify.hpp"

namespace mcycle::induct3 {

/// Which block of the 3-multisets of [n] a multiset belongs to, with
/// low = [n-6], mid = {n-5,n-4,n-3}, high = {n-2,n-1,n}:
///   A  all elements in [n-3]
///   B  some high element, no mid element
///   C  one or two mid and one or two high elements, nothing low
///   D  one element each from low, mid and high
enum class Region { A, B, C, D };

constexpr char region_name(Region r) noexcept { return "ABCD"[static_cast<int>(r)]; }

inline Region classify_multiset(const Multiset& m, int n) {
  if (n < 10) throw error(errc::input, "classification needs n >= 10");
  if (m.t() != 3) throw error(errc::input, "classification expects a 3-multiset");
  if (m.elements().back() > n) throw error(errc::input, "multiset element outside [1," + std::to_string(n) + "]");
  int low = 0, mid = 0, high = 0;
  for (int x : m.elements()) {
    if (x <= n - 6) ++low;
    else if (x <= n - 3) ++mid;
    else ++high;
  }
  if (high == 0) return Region::A;
  if (mid == 0) return Region::B;
  return low == 1 ? Region::D : Region::C;
}

/// Letter assignments a..f := n-5..n.
struct RelabelMap {
  explicit RelabelMap(int n) : n(n) {
    if (n < 10) throw error(errc::input, "gadget letters need n >= 10");
  }

  int operator()(char letter) const {
    if (letter < 'a' || letter > 'f') throw error(errc::input, std::string("unknown gadget letter ") + letter);
    return n - 5 + (letter - 'a');
  }

  int n;
};

/// Digit string to symbols, with '0' read as 10 (the printed convention).
inline std::vector<int> digits(std::string_view s) {
  std::vector<int> out;
  for (char ch : s) {
    if (ch == ' ') continue;
    if (ch < '0' || ch > '9') throw error(errc::input, std::string("not a digit: ") + ch);
    out.push_back(ch == '0' ? 10 : ch - '0');
  }
  return out;
}

/// Cycle built so far: S.T is a 3-Mcycle on [n].
struct InductionState {
  int n = 0;
  std::vector<int> S;
  std::vector<int> T;

  std::vector<int> cycle() const {
    std::vector<int> out(S);
    out.insert(out.end(), T.begin(), T.end());
    return out;
  }
};

/// Substitutes n-5 -> n-2, n-4 -> n-1, n-3 -> n in a string over [n-3].
inline std::vector<int> relabel_T(const std::vector<int>& T, int n) {
  std::vector<int> out(T);
  for (int& x : out) {
    if (x < 1 || x > n - 3) throw error(errc::input, "relabel_T expects a string over [n-3]");
    if (x >= n - 5) x += 3;
  }
  return out;
}

namespace detail {

// Computer-found gadgets; letters resolve through RelabelMap, '1' is literal.
inline constexpr std::string_view gadget_even = "aaffcaeebbdececbddccfbadadfbf";
inline constexpr std::string_view gadget_odd = "beb1fabd1cffaaecbfbfdada1eccfaeecdcdbd";

inline void check_size(int n) {
  if (n < 10 || n % 3 == 0) throw error(errc::input, "gadgets need n >= 10 with 3 !| n, got " + std::to_string(n));
}

}  // namespace detail

inline std::vector<int> build_U(int n) {
  detail::check_size(n);
  const RelabelMap letter(n);
  const auto gadget = n % 2 == 0 ? detail::gadget_even : detail::gadget_odd;
  std::vector<int> out;
  out.reserve(gadget.size());
  for (char ch : gadget) out.push_back(ch == '1' ? 1 : letter(ch));
  return out;
}

/// Three sweeps pairing letters against the counters n-6, n-7, ... down to
/// 1 (even n) or 2 (odd n): be/af closed by "be", ad/ce closed by "ad",
/// cf/bd closed by "cfe".
inline std::vector<int> build_V(int n) {
  detail::check_size(n);
  const RelabelMap letter(n);
  const int stop = n % 2 == 0 ? 1 : 2;
  std::vector<int> out;
  auto sweep = [&](std::string_view even, std::string_view odd, std::string_view close) {
    for (int k = n - 6; k >= stop; --k) {
      const auto pair = (n - 6 - k) % 2 == 0 ? even : odd;
      out.push_back(letter(pair[0]));
      out.push_back(letter(pair[1]));
      out.push_back(k);
    }
    for (char ch : close) out.push_back(letter(ch));
  };
  sweep("be", "af", "be");
  sweep("ad", "ce", "ad");
  sweep("cf", "bd", "cfe");
  return out;
}

/// Starting points: S.T is a 3-Mcycle on [7] (for the n = 10 chain) or on
/// [8] (for the n = 11 chain).
inline InductionState base_case(int n) {
  if (n == 10)
    // symbols 46-47 of T read "4 2" in the published listing, which repeats
    // {2,4,7} and {2,5,5}; "2 4" covers {2,2,7} and {4,5,5} instead
    return {7, digits("11144 42223 33121 24343"),
            digits("11522 63374 45166 27732 57366 77135 34641 71555 36127 24556"
                   "66477 75526 4576")};
  if (n == 11)
    return {8, digits("11122 23114 22513 32444 33352 54541 43555"),
            digits("11657 43822 74468 54661 72736 18157 31888 77556 6688 57262"
                   "58536 21848 47776 41773 38826 67836 36428 7")};
  throw error(errc::input, "base cases exist for n = 10 and n = 11 only");
}

/// One induction step from [n-3] to [n]. Verifies its output.
inline InductionState extend_step(const InductionState& prev) {
  const int n = prev.n + 3;
  detail::check_size(n);
  InductionState next;
  next.n = n;
  next.S = prev.cycle();
  next.T = relabel_T(prev.T, n);
  const auto u = build_U(n);
  const auto v = build_V(n);
  next.T.insert(next.T.end(), u.begin(), u.end());
  next.T.insert(next.T.end(), v.begin(), v.end());
  require_valid(CyclicSequence(next.cycle(), n, 3, Kind::multiset), "induction step to n=" + std::to_string(n));
  if (next.T.size() < 2 || next.T[0] != 1 || next.T[1] != 1 || next.T[next.T.size() - 2] != n ||
      next.T.back() != n - 1)
    throw error(errc::verification_failed, "induction step broke the head/tail shape of T");
  return next;
}

/// State whose S.T is the 3-Mcycle on [n], for n >= 7 with 3 !| n.
inline InductionState induction_state(int n) {
  if (n < 7 || n % 3 == 0) throw error(errc::input, "induction states exist for n >= 7 with 3 !| n");
  auto state = base_case(n % 3 == 1 ? 10 : 11);
  while (state.n < n) state = extend_step(state);
  return state;
}

/// 3-Mcycle on [n] for n >= 4, 3 !| n.
inline CyclicSequence construct3(int n) {
  if (n < 4 || n % 3 == 0)
    throw error(errc::input, "inductive 3-Mcycles need n >= 4 with 3 !| n, got " + std::to_string(n));
  std::vector<int> symbols;
  if (n == 4) symbols = base_case(10).S;
  else if (n == 5) symbols = base_case(11).S;
  else symbols = induction_state(n).cycle();
  CyclicSequence seq(std::move(symbols), n, 3, Kind::multiset);
  require_valid(seq, "inductive construction for n=" + std::to_string(n));
  return seq;
}

}  // namespace mcycle::induct3
