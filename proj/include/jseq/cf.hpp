#pragma once

// Partial-quotient streams and the convergent recurrence.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jseq/bigint.hpp"

namespace jseq {

using Digit = std::uint64_t;
using DigitList = std::vector<Digit>;

/// Representative of a digit in {1, 2, 3, 4} modulo 4.
constexpr unsigned digit_class(Digit a) {
  return static_cast<unsigned>((a - 1) % 4) + 1;
}

/// Digit classes of a stream whose classes are eventually periodic:
/// class(a_k) = pre[k] for k < |pre|, period[(k - |pre|) mod |period|] after.
struct ClassStructure {
  std::vector<unsigned> pre;
  std::vector<unsigned> period;
};

/// Shape of an eventually periodic class pattern declared by a rule stream.
struct ClassShape {
  std::size_t pre_length = 0;
  std::size_t period_length = 1;
};

/// An indexed source of partial quotients a_k >= 1.
///
/// Streams are immutable values. Rule streams compute a_k directly from k so
/// access is random and concurrent reads are safe.
class DigitStream {
 public:
  enum class Kind { kFinite, kEventuallyPeriodic, kRule };
  using Rule = std::function<Digit(std::uint64_t)>;

  static DigitStream finite(DigitList digits);
  static DigitStream eventually_periodic(DigitList pre, DigitList period);
  static DigitStream purely_periodic(DigitList period) {
    return eventually_periodic({}, std::move(period));
  }
  static DigitStream rule(std::string name, std::optional<std::int64_t> param,
                          Rule rule,
                          std::optional<ClassShape> class_shape = std::nullopt);

  /// Copy carrying a different display name.
  DigitStream renamed(std::string name) const;

  Digit at(std::uint64_t k) const;
  DigitList prefix(std::size_t n) const;

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::optional<std::int64_t> param() const { return param_; }
  /// Number of available digits; only finite streams are bounded.
  std::optional<std::size_t> size() const;

  /// Pre-period and period digits; eventually periodic streams only.
  const DigitList& pre_period() const;
  const DigitList& period() const;

  /// Eventually periodic digit-class pattern, when one is known.
  std::optional<ClassStructure> class_structure() const;

 private:
  DigitStream() = default;

  Kind kind_ = Kind::kFinite;
  std::string name_;
  std::optional<std::int64_t> param_;
  DigitList pre_;
  DigitList period_;
  Rule rule_;
  std::optional<ClassShape> class_shape_;
};

struct Convergent {
  std::int64_t k = -1;
  BigInt s{1};
  BigInt t{0};

  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Convergent at index k+1 from those at k-1 and k.
Convergent next_convergent(const Convergent& prev2, const Convergent& prev1,
                           Digit a);

/// Incremental convergent generator starting from the seeds at k = -2, -1.
class ConvergentWalker {
 public:
  ConvergentWalker();

  void push(Digit a);
  const Convergent& current() const { return cur_; }
  const Convergent& previous() const { return prev_; }

 private:
  Convergent prev_;
  Convergent cur_;
};

std::vector<Convergent> convergents(const DigitStream& stream, std::size_t n);

/// Streams for e, e^(1/n), e^2 and the coth family [n, 3n, 5n, ...].
/// Accepted names: "e", "e_inv_n", "e_squared" (alias "e2"),
/// "coth_family" (alias "coth").
DigitStream named_stream(std::string_view name,
                         std::optional<std::int64_t> param = std::nullopt);

/// Comma-separated decimal digits, e.g. "2,1,2".
std::string format_digits(const DigitList& digits);
DigitList parse_digits(std::string_view text);

}  // namespace jseq
