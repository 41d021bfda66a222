#include "jseq/surd.hpp"

#include "jseq/error.hpp"

namespace jseq {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

}  // namespace

QuadraticSurd QuadraticSurd::make(BigInt p, BigInt d, BigInt q) {
  if (q == 0) throw Error(ErrorKind::kDomain, "zero denominator");
  if (d <= 0 || mpz_perfect_square_p(d.get_mpz_t())) {
    throw Error(ErrorKind::kNotIrrational, "discriminant " + decimal(d) + " is a square");
  }
  BigInt rest = d - p * p;
  if (!mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
    // Scale by |q|: (p|q| + sqrt(d q^2)) / (q|q|).
    BigInt aq = abs(q);
    p *= aq;
    d *= aq * aq;
    q *= aq;
    rest = d - p * p;
  }
  BigInt c = rest / q;
  BigInt g = gcd3(p, q, c);
  if (g > 1) {
    p /= g;
    q /= g;
    d /= g * g;
  }
  return QuadraticSurd(std::move(p), std::move(d), std::move(q));
}

QuadraticSurd QuadraticSurd::from_closed_form(const BigInt& a, const BigInt& b,
                                              const BigInt& r, const BigInt& q) {
  if (b <= 0) throw Error(ErrorKind::kDomain, "sqrt coefficient must be positive");
  return make(a, b * b * r, q);
}

BigInt QuadraticSurd::floor() const {
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
  BigInt out;
  if (q_ > 0) {
    // sqrt(d) is irrational, so floor((p + sqrt d)/q) = floor((p + isqrt d)/q).
    BigInt num = p_ + root;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q_.get_mpz_t());
  } else {
    // (p + sqrt d)/q = (-p - sqrt d)/|q| and -sqrt d lies in (-isqrt d - 1, -isqrt d).
    BigInt num = -p_ - root - 1;
    BigInt den = -q_;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return out;
}

QuadraticSurd QuadraticSurd::add_reciprocal(Digit a) const {
  // 1/x = (-p + sqrt d)/c with c = (d - p^2)/q.
  BigInt c = (d_ - p_ * p_) / q_;
  BigInt np = big(a) * c - p_;
  return make(std::move(np), d_, std::move(c));
}

QuadraticSurd QuadraticSurd::next_complete_quotient() const {
  BigInt a = floor();
  BigInt np = a * q_ - p_;
  BigInt nq = (d_ - np * np) / q_;
  return make(std::move(np), d_, std::move(nq));
}

std::string QuadraticSurd::to_string() const {
  return "(" + decimal(p_) + "+sqrt(" + decimal(d_) + "))/" + decimal(q_);
}

QuadraticSurd eval_eventually_periodic(const DigitList& pre, const DigitList& period) {
  if (period.empty()) throw Error(ErrorKind::kPrecondition, "empty period");
  ConvergentWalker w;
  for (Digit a : period) w.push(a);
  // z = (p z + p')/(q z + q')  =>  q z^2 + (q' - p) z - p' = 0.
  const BigInt& p = w.current().s;
  const BigInt& q = w.current().t;
  const BigInt& pp = w.previous().s;
  const BigInt& qp = w.previous().t;
  BigInt b = p - qp;
  QuadraticSurd x = QuadraticSurd::make(b, b * b + 4 * q * pp, 2 * q);
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    if (*it < 1) throw Error(ErrorKind::kInvalidDigit, "partial quotient 0");
    x = x.add_reciprocal(*it);
  }
  return x;
}

DigitList expand(const QuadraticSurd& x, std::size_t n) {
  DigitList out;
  out.reserve(n);
  QuadraticSurd cur = x;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt a = cur.floor();
    if (a < 1 || !a.fits_ulong_p()) {
      throw Error(ErrorKind::kOutOfRange, "partial quotient " + decimal(a) + " outside [1, 2^64)");
    }
    out.push_back(a.get_ui());
    cur = cur.next_complete_quotient();
  }
  return out;
}

}  // namespace jseq
