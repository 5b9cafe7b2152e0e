#pragma once

// Exhaustive depth-first search for t-Mcycles on [n] at small scale.
//
// A partial sequence is viable while no completed window repeats and no
// letter exceeds its quota L/n (each letter occurs exactly L/n times in an
// Mcycle of length L). Up to relabeling, every Mcycle can be written to
// start with t ones and to introduce new letters in increasing order, which
// is how the relabel equivalences cut the search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcycle/combinatorics.hpp"
#include "mcycle/sequence.hpp"
#include "mcycle/verify.hpp"

namespace mcycle::search {

enum class Mode { first, all, count };

/// raw: every linear string is its own class.
/// relabel: Mcycles written from a constant window, up to permuting [n].
/// relabel_rotation: cyclic sequences up to permuting [n] and rotating.
enum class Equivalence { raw, relabel, relabel_rotation };

struct SearchConfig {
  int n = 0;
  int t = 0;
  Mode mode = Mode::first;
  Equivalence equivalence = Equivalence::relabel;
  std::vector<int> prefix;        // the search covers sequences starting with it
  std::uint64_t limit = 0;        // stop after this many results; 0 = no limit
  std::uint64_t budget = 10'000;  // maximum cycle length searched
  std::uint64_t seed = 0;         // permutes the order symbols are tried in
};

/// Lexicographically least image of seq under the equivalence.
inline std::vector<int> canonicalize(std::span<const int> seq, Equivalence eq) {
  auto relabel = [](std::span<const int> s, std::size_t start) {
    std::vector<int> map(*std::max_element(s.begin(), s.end()) + 1, 0);
    std::vector<int> out(s.size());
    int next = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      int& m = map[s[(start + i) % s.size()]];
      if (m == 0) m = next++;
      out[i] = m;
    }
    return out;
  };
  if (seq.empty() || eq == Equivalence::raw) return {seq.begin(), seq.end()};
  if (eq == Equivalence::relabel) return relabel(seq, 0);
  std::vector<int> best = relabel(seq, 0);
  for (std::size_t r = 1; r < seq.size(); ++r) {
    auto cand = relabel(seq, r);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

inline CyclicSequence canonicalize(const CyclicSequence& seq, Equivalence eq) {
  return CyclicSequence(canonicalize(seq.symbols(), eq), seq.n(), seq.t(), seq.kind());
}

namespace detail {

class Searcher {
 public:
  using Visitor = std::function<bool(std::span<const int>)>;

  explicit Searcher(const SearchConfig& cfg)
      : cfg_(cfg), index_(cfg.n, cfg.t, Kind::multiset), length_(index_.size()) {
    if (length_ > cfg.budget)
      throw error(errc::budget_exceeded, "cycle length " + std::to_string(length_) + " exceeds budget " +
                                             std::to_string(cfg.budget));
    feasible_ = necessary_condition(cfg.n, cfg.t, Kind::multiset);
    quota_ = feasible_ ? length_ / cfg.n : 0;
    seq_.assign(length_, 0);
    rank_at_.assign(length_, npos);
    max_at_.assign(length_ + 1, 0);
    seen_.assign(length_, 0);
    occ_.assign(cfg.n + 1, 0);
    window_.resize(cfg.t);
    order_.resize(length_);
    std::vector<int> base(cfg.n);
    std::iota(base.begin(), base.end(), 1);
    std::mt19937_64 rng(cfg.seed);
    for (auto& o : order_) {
      o = base;
      if (cfg.seed != 0) std::shuffle(o.begin(), o.end(), rng);
    }
  }

  std::uint64_t length() const noexcept { return length_; }

  /// Fixed initial segment: t ones for the relabel equivalences, then the
  /// configured prefix. False if that segment is already not viable.
  bool seed_prefix() {
    std::vector<int> start;
    if (cfg_.equivalence != Equivalence::raw) start.assign(cfg_.t, 1);
    for (std::size_t i = 0; i < cfg_.prefix.size(); ++i) {
      if (i < start.size()) {
        if (cfg_.prefix[i] != start[i]) return false;
      } else {
        start.push_back(cfg_.prefix[i]);
      }
    }
    for (int s : start)
      if (s < 1 || s > cfg_.n || pos_ == length_ || !push(s)) return false;
    return true;
  }

  /// Visits complete Mcycles extending the current prefix; visitor returns
  /// false to stop.
  void run(const Visitor& visit) {
    if (!feasible_) return;
    stop_ = false;
    visit_ = &visit;
    dfs();
  }

  /// Viable extensions of the current prefix by exactly depth symbols.
  std::vector<std::vector<int>> extensions(std::size_t depth) {
    std::vector<std::vector<int>> out;
    if (!feasible_) return out;
    const std::size_t base = pos_;
    auto rec = [&](auto&& self) -> void {
      if (pos_ == base + depth || pos_ == length_) {
        out.emplace_back(seq_.begin() + base, seq_.begin() + pos_);
        return;
      }
      for (int s : candidates()) {
        if (!push(s)) continue;
        self(self);
        pop();
      }
    };
    rec(rec);
    return out;
  }

 private:
  static constexpr std::uint64_t npos = ~std::uint64_t{0};

  std::vector<int> candidates() const {
    const int cap = cfg_.equivalence == Equivalence::raw ? cfg_.n : std::min(cfg_.n, max_at_[pos_] + 1);
    std::vector<int> out;
    for (int s : order_[pos_])
      if (s <= cap) out.push_back(s);
    return out;
  }

  std::uint64_t rank_ending_at(std::size_t last) {
    for (int j = 0; j < cfg_.t; ++j) window_[j] = seq_[last + 1 - cfg_.t + j];
    std::sort(window_.begin(), window_.end());
    return index_.rank(window_);
  }

  bool push(int s) {
    if (occ_[s] == quota_) return false;
    seq_[pos_] = s;
    std::uint64_t r = npos;
    if (pos_ + 1 >= static_cast<std::size_t>(cfg_.t)) {
      r = rank_ending_at(pos_);
      if (seen_[r]) return false;
      seen_[r] = 1;
    }
    rank_at_[pos_] = r;
    ++occ_[s];
    max_at_[pos_ + 1] = std::max(max_at_[pos_], s);
    ++pos_;
    return true;
  }

  void pop() {
    --pos_;
    if (rank_at_[pos_] != npos) seen_[rank_at_[pos_]] = 0;
    --occ_[seq_[pos_]];
  }

  // The t-1 windows that wrap from the tail to the head.
  bool closes() {
    std::vector<std::uint64_t> marked;
    bool ok = true;
    for (int j = 1; j < cfg_.t && ok; ++j) {
      for (int k = 0; k < cfg_.t; ++k) window_[k] = seq_[(length_ - cfg_.t + j + k) % length_];
      std::sort(window_.begin(), window_.end());
      const auto r = index_.rank(window_);
      if (seen_[r]) ok = false;
      else {
        seen_[r] = 1;
        marked.push_back(r);
      }
    }
    for (auto r : marked) seen_[r] = 0;
    return ok;
  }

  void dfs() {
    if (stop_) return;
    if (pos_ == length_) {
      if (closes() && !(*visit_)(seq_)) stop_ = true;
      return;
    }
    for (int s : candidates()) {
      if (!push(s)) continue;
      dfs();
      pop();
      if (stop_) return;
    }
  }

  SearchConfig cfg_;
  WindowIndex index_;
  std::uint64_t length_;
  bool feasible_ = false;
  std::uint64_t quota_ = 0;
  std::vector<int> seq_;
  std::vector<std::uint64_t> rank_at_;
  std::vector<int> max_at_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint64_t> occ_;
  std::vector<int> window_;
  std::vector<std::vector<int>> order_;
  std::size_t pos_ = 0;
  bool stop_ = false;
  const Visitor* visit_ = nullptr;
};

}  // namespace detail

/// Streams Mcycles to visit (return false to stop). Honors mode (first stops
/// after one) and limit. For relabel_rotation each orbit is reported once, in
/// canonical form. Returns the number of sequences visited.
inline std::uint64_t backtrack(const SearchConfig& cfg, const std::function<bool(const CyclicSequence&)>& visit) {
  if (cfg.n < 1 || cfg.t < 1) throw error(errc::input, "search needs n >= 1 and t >= 1");
  detail::Searcher s(cfg);
  if (!s.seed_prefix()) return 0;
  std::uint64_t emitted = 0;
  std::set<std::vector<int>> orbits;
  s.run([&](std::span<const int> found) {
    std::vector<int> out(found.begin(), found.end());
    if (cfg.equivalence == Equivalence::relabel_rotation) {
      out = canonicalize(out, Equivalence::relabel_rotation);
      if (!orbits.insert(out).second) return true;
    }
    ++emitted;
    bool more = visit(CyclicSequence(std::move(out), cfg.n, cfg.t, Kind::multiset));
    if (cfg.mode == Mode::first) more = false;
    if (cfg.limit && emitted >= cfg.limit) more = false;
    return more;
  });
  return emitted;
}

inline std::optional<CyclicSequence> find_first(SearchConfig cfg) {
  cfg.mode = Mode::first;
  std::optional<CyclicSequence> out;
  backtrack(cfg, [&](const CyclicSequence& s) {
    out = s;
    return false;
  });
  return out;
}

/// Canonical forms of every Mcycle under the configured equivalence.
inline std::set<std::vector<int>> find_all(SearchConfig cfg) {
  cfg.mode = Mode::all;
  std::set<std::vector<int>> out;
  backtrack(cfg, [&](const CyclicSequence& s) {
    out.insert(canonicalize(s.symbols(), cfg.equivalence));
    return true;
  });
  return out;
}

/// Viable branch prefixes at the given depth below the fixed initial
/// segment. Searching each one and taking the union is equivalent to the
/// unpartitioned search.
inline std::vector<std::vector<int>> branch_prefixes(const SearchConfig& cfg, std::size_t depth) {
  detail::Searcher s(cfg);
  if (!s.seed_prefix()) return {};
  auto tails = s.extensions(depth);
  std::vector<int> head;
  if (cfg.equivalence != Equivalence::raw) head.assign(cfg.t, 1);
  for (std::size_t i = head.size(); i < cfg.prefix.size(); ++i) head.push_back(cfg.prefix[i]);
  for (auto& tail : tails) tail.insert(tail.begin(), head.begin(), head.end());
  return tails;
}

/// find_all over a set of disjoint branch prefixes, searched concurrently
/// on up to `threads` workers and merged by set union.
inline std::set<std::vector<int>> find_all_partitioned(const SearchConfig& cfg,
                                                       const std::vector<std::vector<int>>& prefixes,
                                                       unsigned threads = 1) {
  threads = std::max(1u, threads);
  std::vector<std::future<std::set<std::vector<int>>>> jobs;
  for (unsigned w = 0; w < threads; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      std::set<std::vector<int>> local;
      for (std::size_t i = w; i < prefixes.size(); i += threads) {
        SearchConfig part = cfg;
        part.prefix = prefixes[i];
        auto found = find_all(part);
        local.insert(found.begin(), found.end());
      }
      return local;
    }));
  }
  std::set<std::vector<int>> out;
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(part.begin(), part.end());
  }
  return out;
}

/// Whether seq's canonical form is in the exhaustive result set, decided by
/// searching only the branch that starts with its first depth symbols.
inline bool branch_contains(SearchConfig cfg, const CyclicSequence& seq, std::size_t depth) {
  if (seq.n() != cfg.n || seq.t() != cfg.t || seq.kind() != Kind::multiset) return false;
  const auto canon = canonicalize(seq.symbols(), cfg.equivalence);
  cfg.prefix.assign(canon.begin(), canon.begin() + static_cast<std::ptrdiff_t>(std::min(depth, canon.size())));
  cfg.limit = 0;
  return find_all(cfg).count(canon) != 0;
}

/// Number of equivalence classes of t-Mcycles on [n].
inline std::uint64_t count_distinct(int n, int t, Equivalence eq, std::uint64_t budget = 10'000) {
  SearchConfig cfg{n, t, Mode::count, eq, {}, 0, budget, 0};
  if (eq == Equivalence::relabel_rotation) return find_all(cfg).size();
  detail::Searcher s(cfg);
  std::uint64_t count = 0;
  if (!s.seed_prefix()) return 0;
  s.run([&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace mcycle::search
