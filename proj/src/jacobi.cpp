#include "jseq/jacobi.hpp"

#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "jseq/error.hpp"

namespace jseq {

char to_char(JacobiValue v) {
  switch (v) {
    case JacobiValue::kPlus: return '+';
    case JacobiValue::kMinus: return '-';
    case JacobiValue::kStar: return '*';
  }
  return '?';
}

JacobiValue jacobi_from_char(char c) {
  switch (c) {
    case '+': return JacobiValue::kPlus;
    case '-': return JacobiValue::kMinus;
    case '*': return JacobiValue::kStar;
    default:
      throw Error(ErrorKind::kDomain, std::string("not a symbol: '") + c + "'");
  }
}

std::string to_string(const SymbolWord& word) {
  std::string out;
  out.reserve(word.size());
  for (JacobiValue v : word) out.push_back(to_char(v));
  return out;
}

SymbolWord parse_symbols(std::string_view text) {
  SymbolWord out;
  out.reserve(text.size());
  for (char c : text) out.push_back(jacobi_from_char(c));
  return out;
}

JacobiValue operator*(JacobiValue a, JacobiValue b) {
  if (a == JacobiValue::kStar || b == JacobiValue::kStar) {
    throw Error(ErrorKind::kDomain, "* does not multiply");
  }
  return a == b ? JacobiValue::kPlus : JacobiValue::kMinus;
}

JacobiValue flip(JacobiValue v) {
  switch (v) {
    case JacobiValue::kPlus: return JacobiValue::kMinus;
    case JacobiValue::kMinus: return JacobiValue::kPlus;
    case JacobiValue::kStar: return JacobiValue::kStar;
  }
  return v;
}

JacobiValue jacobi_from_sign(int sign) {
  if (sign == 1) return JacobiValue::kPlus;
  if (sign == -1) return JacobiValue::kMinus;
  throw Error(ErrorKind::kDomain, "sign must be +1 or -1");
}

int jacobi_binary_u64(std::uint64_t a, std::uint64_t n) {
  a %= n;
  int r = 1;
  while (a != 0) {
    int tz = std::countr_zero(a);
    a >>= tz;
    // (2/n) = -1 iff n = 3, 5 mod 8
    if ((tz & 1) && ((n & 7) == 3 || (n & 7) == 5)) r = -r;
    if (a < n) {
      std::swap(a, n);
      if ((a & 3) == 3 && (n & 3) == 3) r = -r;
    }
    a -= n;
  }
  return n == 1 ? r : 0;
}

int jacobi_binary(const BigInt& m, const BigInt& modulus) {
  BigInt n = modulus;
  BigInt a = abs(m);
  int r = 1;
  // (-1/n) = (-1)^((n-1)/2)
  if (m < 0 && mod4(n) == 3) r = -r;
  while (a != 0) {
    mp_bitcnt_t tz = mpz_scan1(a.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), tz);
    unsigned n8 = static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), 8));
    if ((tz & 1) && (n8 == 3 || n8 == 5)) r = -r;
    if (a < n) {
      mpz_swap(a.get_mpz_t(), n.get_mpz_t());
      if (mod4(a) == 3 && mod4(n) == 3) r = -r;
    }
    a -= n;
  }
  return n == 1 ? r : 0;
}

JacobiValue jacobi_symbol(const BigInt& m, const BigInt& n) {
  if (n <= 0) {
    throw Error(ErrorKind::kDomain, "lower argument " + decimal(n) + " is not positive");
  }
  const bool small = n.fits_ulong_p() && m.fits_slong_p();
  int r;
  if (small) {
    const std::uint64_t nn = n.get_ui();
    const long mm = m.get_si();
    const std::uint64_t am = mm < 0 ? 0 - static_cast<std::uint64_t>(mm)
                                    : static_cast<std::uint64_t>(mm);
    if ((nn & 1) == 0) {
      if (std::gcd(am, nn) != 1) {
        throw Error(ErrorKind::kNotCoprime, "gcd(" + decimal(m) + ", " + decimal(n) + ") != 1");
      }
      return JacobiValue::kStar;
    }
    r = jacobi_binary_u64(am, nn);
    if (mm < 0 && (nn & 3) == 3) r = -r;
  } else if (!is_odd(n)) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    if (g != 1) {
      throw Error(ErrorKind::kNotCoprime, "gcd(" + decimal(m) + ", " + decimal(n) + ") != 1");
    }
    return JacobiValue::kStar;
  } else {
    r = mpz_jacobi(m.get_mpz_t(), n.get_mpz_t());
  }
  if (r == 0) {
    throw Error(ErrorKind::kNotCoprime, "gcd(" + decimal(m) + ", " + decimal(n) + ") != 1");
  }
  return r == 1 ? JacobiValue::kPlus : JacobiValue::kMinus;
}

JacobiValue jacobi_symbol(std::int64_t m, std::int64_t n) {
  if (n <= 0) {
    throw Error(ErrorKind::kDomain, "lower argument " + std::to_string(n) + " is not positive");
  }
  return jacobi_symbol(BigInt(static_cast<long>(m)), BigInt(static_cast<long>(n)));
}

namespace {

void require_odd_positive(std::int64_t v) {
  if (v <= 0 || v % 2 == 0) {
    throw Error(ErrorKind::kDomain, "epsilon needs odd positive arguments, got " + std::to_string(v));
  }
}

}  // namespace

int epsilon2(std::int64_t m, std::int64_t n) {
  require_odd_positive(m);
  require_odd_positive(n);
  return (m % 4 == 1 || n % 4 == 1) ? 1 : -1;
}

int epsilon3(std::int64_t t, std::int64_t q, std::int64_t n) {
  require_odd_positive(t);
  require_odd_positive(q);
  require_odd_positive(n);
  int ones = (t % 4 == 1) + (q % 4 == 1) + (n % 4 == 1);
  return ones >= 2 ? 1 : -1;
}

}  // namespace jseq
