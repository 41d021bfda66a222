#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jseq/bigint.hpp"

namespace jseq {

/// Jacobi symbol value extended by * for even lower arguments.
enum class JacobiValue : std::int8_t { kMinus = -1, kPlus = 1, kStar = 2 };

using SymbolWord = std::vector<JacobiValue>;

char to_char(JacobiValue v);
JacobiValue jacobi_from_char(char c);
std::string to_string(const SymbolWord& word);
SymbolWord parse_symbols(std::string_view text);

/// Product of two +-1 values. * is rejected.
JacobiValue operator*(JacobiValue a, JacobiValue b);
/// Interchanges +1 and -1, fixes *.
JacobiValue flip(JacobiValue v);

JacobiValue jacobi_from_sign(int sign);

/// (m/n) for n > 0 and gcd(m, n) = 1; * when n is even.
///
/// Word-sized operands go through the binary algorithm below; multi-limb
/// operands use GMP's subquadratic mpz_jacobi.
JacobiValue jacobi_symbol(const BigInt& m, const BigInt& n);
JacobiValue jacobi_symbol(std::int64_t m, std::int64_t n);

/// Binary Jacobi algorithm for odd n on raw words; returns 0 when
/// gcd(a, n) != 1.
int jacobi_binary_u64(std::uint64_t a, std::uint64_t n);

/// The same binary algorithm on multi-precision operands, n odd and
/// positive, a arbitrary. Quadratic in the operand size.
int jacobi_binary(const BigInt& a, const BigInt& n);

/// +1 if m or n is 1 mod 4, else -1.
int epsilon2(std::int64_t m, std::int64_t n);
/// +1 if at least two of t, q, n are 1 mod 4, else -1.
int epsilon3(std::int64_t t, std::int64_t q, std::int64_t n);

}  // namespace jseq
