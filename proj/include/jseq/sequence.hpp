#pragma once

// Jacobi sequences of digit streams: a big-integer oracle and a finite-state
// transducer over digit classes mod 4.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jseq/cf.hpp"
#include "jseq/jacobi.hpp"

namespace jseq {

/// Mod-4 fingerprint of the convergent pair at index k.
///
/// The previous residues (s_{k-1}, t_{k-1}) mod 4 are part of the state:
/// without them s_{k+1} = a s_k + s_{k-1} is not determined mod 4.
struct ResidueState {
  std::uint8_t s_mod4 = 0;
  std::uint8_t t_mod4 = 0;
  std::uint8_t s_prev_mod4 = 0;
  std::uint8_t t_prev_mod4 = 0;
  std::uint8_t k_parity = 0;
  JacobiValue j_st = JacobiValue::kPlus;
  JacobiValue j_ts = JacobiValue::kPlus;

  /// Dense key in [0, kKeySpace).
  std::uint32_t key() const;
  static constexpr std::uint32_t kKeySpace = 4 * 4 * 4 * 4 * 2 * 3 * 3;

  friend bool operator==(const ResidueState&, const ResidueState&) = default;
};

/// State of the pair (prev, cur) with cur at index k >= 0.
ResidueState residue_state(const Convergent& prev, const Convergent& cur);

using StateId = std::uint16_t;

/// Transition table synthesized from big-integer witnesses. Immutable once
/// built; safe to share between threads.
class TransducerTable {
 public:
  static constexpr StateId kNone = 0xffff;

  std::size_t size() const { return states_.size(); }
  const ResidueState& state(StateId id) const { return states_.at(id); }
  StateId initial(unsigned digit_class) const;
  StateId next(StateId id, unsigned digit_class) const;
  std::optional<StateId> find(const ResidueState& s) const;

  /// Shortlex-smallest digit word (classes 1..4) reaching each state.
  const DigitList& witness(StateId id) const { return witnesses_.at(id); }

  /// Number of transitions re-derived from independent witnesses during
  /// the consistency pass.
  std::uint64_t consistency_checks() const { return consistency_checks_; }

 private:
  friend TransducerTable build_transducer(std::size_t probe_depth);

  std::vector<ResidueState> states_;
  std::vector<std::array<StateId, 4>> next_;
  std::array<StateId, 4> initial_{kNone, kNone, kNone, kNone};
  std::vector<DigitList> witnesses_;
  std::vector<StateId> index_;
  std::uint64_t consistency_checks_ = 0;
};

/// Breadth-first synthesis to closure, then every transition is re-derived
/// along all digit words of length <= probe_depth, and once more from a
/// lifted witness whose digits differ from the representatives by multiples
/// of 4. Throws kTheoremFalsified on any disagreement.
TransducerTable build_transducer(std::size_t probe_depth = 12);

/// The table built with the default probe depth, constructed once.
const TransducerTable& default_transducer();

/// J(s_k/t_k) for k < n, each symbol computed from scratch.
SymbolWord jacobi_sequence_oracle(const DigitStream& stream, std::size_t n);

/// Same output through table lookups, one per digit.
SymbolWord jacobi_sequence_fast(const DigitStream& stream, std::size_t n,
                                const TransducerTable& table);

/// Runs the transducer over digit classes.
SymbolWord jacobi_sequence_of_classes(const std::vector<unsigned>& classes,
                                      const TransducerTable& table);

DigitList four_representative(const DigitStream& stream, std::size_t n);

bool congruent_mod4(const DigitStream& x, const DigitStream& y, std::size_t n);

}  // namespace jseq
