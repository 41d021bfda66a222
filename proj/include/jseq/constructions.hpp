#pragma once

// Digit streams with prescribed Jacobi sequences, the sign-change rule for
// consecutive odd denominators, and the forbidden-pattern scanner.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jseq/cf.hpp"
#include "jseq/jacobi.hpp"
#include "jseq/sequence.hpp"

namespace jseq {

/// Indices k_1 < k_2 < ..., all even, k_1 >= 6, consecutive gaps >= 6.
///
/// Either an explicit list of gaps g_j = k_j - k_{j-1} (k_0 = 0) whose last
/// entry repeats forever, or the arithmetic rule g_j = start + delta*(j-1).
class GapSequence {
 public:
  static GapSequence explicit_gaps(std::vector<std::uint64_t> gaps);
  static GapSequence arithmetic(std::uint64_t start, std::uint64_t delta);
  static GapSequence constant(std::uint64_t gap) { return explicit_gaps({gap}); }
  /// "6,6,6" or "start=6,delta=2".
  static GapSequence parse(std::string_view text);

  /// k_j for j >= 1.
  std::uint64_t k(std::uint64_t j) const;
  /// Whether k equals some k_j.
  bool contains(std::uint64_t k) const;

  /// For an explicit list: (k_m, g) such that all k_j >= k_m are k_m + i*g.
  struct Tail {
    std::uint64_t anchor;
    std::uint64_t gap;
  };
  std::optional<Tail> constant_tail() const;

  std::string to_string() const;

 private:
  GapSequence() = default;

  std::vector<std::uint64_t> gaps_;
  std::vector<std::uint64_t> ks_;
  std::uint64_t start_ = 0;
  std::uint64_t delta_ = 0;
  bool arithmetic_ = false;
};

/// a_k = 1 for k < 2; 2 at k_j - 1 and k_j + 1; 4 otherwise.
/// Jacobi sequence is constantly +1.
DigitStream theorem3_stream(const GapSequence& gaps);

/// a_k = 1 for k < 2; 2 at k_j and k_j + 2; 4 otherwise.
/// Jacobi symbol is -1 exactly at the k_j.
DigitStream theorem7_stream(const GapSequence& gaps);

/// Eventually periodic stream with Jacobi period "+" * (L-1) + "-" after a
/// pre-period "+", for even L >= 2. Odd L is rejected.
DigitStream theorem7_period_stream(std::size_t L);

/// Purely periodic stream with Jacobi period "+" * (L-1) + "*", L >= 2.
DigitStream theorem8_stream(std::size_t L);

/// Whether J(s_k/t_k) and J(s_{k+1}/t_{k+1}) differ, given t_k, t_{k+1}
/// mod 4 (both odd) and the parity of k.
bool lemma1_predict(unsigned t_k_mod4, unsigned t_next_mod4, unsigned k_parity);

enum class PatternVariant { kTheorem3, kTheorem7 };

/// t_k = 3 mod 4 exactly at k_j - 1 (all-plus variant) or k_j (minus-at-gaps
/// variant), and t_k = 1 mod 4 at every other k < n.
bool residue_pattern_check(const DigitStream& stream, const GapSequence& gaps,
                           PatternVariant variant, std::size_t n);

struct ForbiddenHit {
  std::size_t position = 0;
  /// 1 for (-,+,+,-), 2 for (+,-,-,+).
  int pattern = 0;

  friend bool operator==(const ForbiddenHit&, const ForbiddenHit&) = default;
};

/// Contiguous occurrences of (-,+,+,-) and (+,-,-,+). * breaks a match.
std::vector<ForbiddenHit> scan_forbidden(const SymbolWord& symbols);

/// Occurrences after deleting every *; reported for exploration only.
std::vector<ForbiddenHit> scan_forbidden_ignoring_star(const SymbolWord& symbols);

struct ScanReport {
  std::size_t max_len = 0;
  std::uint64_t words_checked = 0;
  std::uint64_t hits = 0;
  /// Matches that only appear once * symbols are deleted.
  std::uint64_t near_misses = 0;
  /// First few digit words whose sequence contains a forbidden pattern.
  std::vector<DigitList> hit_words;
};

/// Scans the Jacobi sequences of every digit word over {1,2,3,4} of length
/// 1..max_len through the transducer.
ScanReport scan_all_words(std::size_t max_len, const TransducerTable& table);

}  // namespace jseq
