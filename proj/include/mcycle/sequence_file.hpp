#pragma once

// Plain-text sequence files and report rendering.
//
//   N T KIND          KIND is m (multisets) or u (subsets)
//   s1 s2 s3 ...      decimal symbols in 1..N, whitespace separated
//
// The writer wraps body lines at 70 columns.

#include <sstream>
#include <string>
#include <string_view>

#include "mcycle/sequence.hpp"
#include "mcycle/verify.hpp"

namespace mcycle {

inline constexpr std::size_t sequence_line_width = 70;

inline CyclicSequence parse_sequence_file(std::string_view text) {
  const auto eol = text.find('\n');
  std::istringstream header(std::string(text.substr(0, eol)));
  long n = 0, t = 0;
  std::string kind_code, extra;
  if (!(header >> n >> t >> kind_code) || (header >> extra))
    throw error(errc::input, "malformed header (expected \"N T KIND\")");
  if (n < 1 || t < 1 || n > 1'000'000 || t > 1'000) throw error(errc::input, "header values out of range");
  const Kind kind = kind_from_code(kind_code);

  std::vector<int> symbols;
  if (eol != std::string_view::npos) {
    std::istringstream body(std::string(text.substr(eol + 1)));
    std::string tok;
    while (body >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw error(errc::input, "not an integer: '" + tok + "'");
      if (v < 1 || v > n) throw error(errc::input, "symbol " + tok + " outside [1," + std::to_string(n) + "]");
      symbols.push_back(static_cast<int>(v));
    }
  }
  std::uint64_t expected = 0;
  try {
    expected = cycle_length(static_cast<int>(n), static_cast<int>(t), kind);
  } catch (const std::overflow_error& e) {
    throw error(errc::input, e.what());
  }
  if (symbols.size() != expected)
    throw error(errc::input, "header promises " + std::to_string(expected) + " symbols, body has " +
                                 std::to_string(symbols.size()));
  return CyclicSequence(std::move(symbols), static_cast<int>(n), static_cast<int>(t), kind);
}

inline std::string write_sequence_file(const CyclicSequence& seq) {
  std::string out = std::to_string(seq.n()) + " " + std::to_string(seq.t()) + " " + kind_code(seq.kind()) + "\n";
  std::size_t col = 0;
  for (int s : seq.symbols()) {
    const auto tok = std::to_string(s);
    if (col != 0 && col + 1 + tok.size() > sequence_line_width) {
      out += '\n';
      col = 0;
    }
    if (col != 0) {
      out += ' ';
      ++col;
    }
    out += tok;
    col += tok.size();
  }
  out += '\n';
  return out;
}

/// Single machine-readable line: ok=true window_count=35 ...
inline std::string report_key_values(const VerificationReport& r) {
  std::ostringstream os;
  os << "ok=" << (r.ok ? "true" : "false") << " window_count=" << r.window_count
     << " length_expected=" << r.length_expected << " duplicates=" << r.duplicate_count
     << " missing=" << r.missing_count << " invalid=" << r.invalid_count;
  return os.str();
}

inline std::string render_report(const VerificationReport& r) {
  auto tuple = [](const std::vector<int>& m) { return "{" + detail::join(m) + "}"; };
  std::ostringstream os;
  os << (r.ok ? "VALID" : "INVALID") << ": " << r.window_count << " windows, " << r.length_expected
     << " expected\n";
  for (const auto& d : r.diagnostics) os << "  note: " << d << "\n";
  for (const auto& d : r.duplicates) {
    os << "  duplicate " << tuple(d.multiset) << " at";
    for (auto p : d.positions) os << ' ' << p;
    os << "\n";
  }
  if (r.duplicate_count > r.duplicates.size())
    os << "  ... " << (r.duplicate_count - r.duplicates.size()) << " more duplicated windows\n";
  for (const auto& m : r.missing) os << "  missing " << tuple(m) << "\n";
  if (r.missing_count > r.missing.size()) os << "  ... " << (r.missing_count - r.missing.size()) << " more missing\n";
  for (auto p : r.invalid_positions) os << "  repeated symbol in window at " << p << "\n";
  os << report_key_values(r) << "\n";
  return os.str();
}

}  // namespace mcycle
