#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jseq {

using BigInt = mpz_class;

inline BigInt big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

// Least non-negative residue mod 4.
inline unsigned mod4(const BigInt& v) {
  unsigned r = static_cast<unsigned>(mpz_fdiv_ui(v.get_mpz_t(), 4));
  return r;
}

inline bool is_odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

inline std::string decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace jseq
