#pragma once

#include <string>

#include "jseq/bigint.hpp"
#include "jseq/cf.hpp"

namespace jseq {

/// The real number (P + sqrt(D)) / Q.
///
/// Canonical form: D > 0 is not a perfect square, Q divides D - P^2 and
/// gcd(P, Q, (D - P^2)/Q) = 1. D keeps its square factors. Q is positive
/// whenever the value is the larger root of its minimal polynomial; the
/// smaller root is represented with Q < 0, keeping the +sqrt(D) convention.
class QuadraticSurd {
 public:
  /// Normalizes (P + sqrt(D))/Q into canonical form.
  static QuadraticSurd make(BigInt p, BigInt d, BigInt q);
  /// (a + b*sqrt(r))/q with b > 0.
  static QuadraticSurd from_closed_form(const BigInt& a, const BigInt& b,
                                        const BigInt& r, const BigInt& q);

  const BigInt& p() const { return p_; }
  const BigInt& d() const { return d_; }
  const BigInt& q() const { return q_; }

  /// floor of the value, by integer square root only.
  BigInt floor() const;
  /// a + 1/x.
  QuadraticSurd add_reciprocal(Digit a) const;
  /// The complete quotient 1/(x - floor(x)).
  QuadraticSurd next_complete_quotient() const;

  /// "(P+sqrt(D))/Q"
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  QuadraticSurd(BigInt p, BigInt d, BigInt q)
      : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {}

  BigInt p_;
  BigInt d_;
  BigInt q_;
};

/// Exact value of [pre, {period}].
QuadraticSurd eval_eventually_periodic(const DigitList& pre,
                                       const DigitList& period);

/// First n partial quotients of a surd.
DigitList expand(const QuadraticSurd& x, std::size_t n);

}  // namespace jseq
