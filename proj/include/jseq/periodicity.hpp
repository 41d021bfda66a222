#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "jseq/cf.hpp"
#include "jseq/jacobi.hpp"
#include "jseq/sequence.hpp"

namespace jseq {

struct PeriodDescriptor {
  SymbolWord pre_period;
  SymbolWord period;
  bool minimal = false;
  bool pure = false;
  /// Length in k of the cycle found in (state, digit phase) space.
  std::size_t cycle_length = 0;
  /// Digit-class period of the stream.
  std::size_t digit_period = 0;
  /// For purely periodic digit classes: whether the cycle length is d * l
  /// with d dividing 8 or 12.
  std::optional<bool> within_divisor_bound;

  /// Symbol k of the described sequence.
  JacobiValue at(std::size_t k) const;
  SymbolWord expand(std::size_t n) const;
};

/// Least p such that the cyclic word is invariant under rotation by p.
std::size_t minimal_period(const SymbolWord& word);

/// Whether rotating the cyclic word by p leaves it unchanged.
bool is_cyclic_period(const SymbolWord& word, std::size_t p);

/// Minimizes an eventually periodic word given by (pre, cycle): shrinks the
/// cycle to its least rotation period, then absorbs pre-period symbols that
/// agree with the backward extension of the cycle.
PeriodDescriptor normalize_period(SymbolWord pre, SymbolWord cycle);

/// Period of the Jacobi sequence of a stream with eventually periodic digit
/// classes. Throws kUnsupportedStream otherwise.
PeriodDescriptor detect_period(const DigitStream& stream,
                               const TransducerTable& table);

struct Certificate {
  std::size_t L = 0;
  /// [[s_{L-1}, s_{L-2}], [t_{L-1}, t_{L-2}]]
  std::array<std::array<BigInt, 2>, 2> matrix;
  std::array<std::array<unsigned, 2>, 2> matrix_mod4{};
  JacobiValue jacobi_ts = JacobiValue::kStar;
  bool identity_mod4 = false;
  bool ok = false;
};

/// Checks the sufficient condition for J(s_k/t_k) = J(s_{k+L}/t_{k+L}) on
/// the purely periodic stream with the given period: the convergent matrix
/// at L-1 is the identity mod 4 and J(t_{L-1}/s_{L-1}) = +1.
/// L must be an even multiple of the period length.
Certificate verify_certificate(const DigitList& period_digits, std::size_t L);

/// Least certifying L among even multiples of |period_digits| up to
/// max_multiple * |period_digits|.
std::optional<Certificate> find_certificate(const DigitList& period_digits,
                                            std::size_t max_multiple = 24);

/// Second half equals the first with +1 and -1 interchanged.
bool is_skew_symmetric(const SymbolWord& period);

}  // namespace jseq
