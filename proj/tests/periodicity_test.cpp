#include <gtest/gtest.h>

#include <random>

#include "jseq/error.hpp"
#include "jseq/periodicity.hpp"

namespace jseq {
namespace {

const TransducerTable& table() { return default_transducer(); }

// Least divisor p of |w| under which the cyclic word is invariant.
std::size_t brute_minimal_period(const SymbolWord& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = w[i] == w[(i + p) % w.size()];
    if (ok) return p;
  }
  return w.size();
}

TEST(MinimalPeriod, Examples) {
  EXPECT_EQ(minimal_period(parse_symbols("++++")), 1u);
  EXPECT_EQ(minimal_period(parse_symbols("+-+-")), 2u);
  EXPECT_EQ(minimal_period(parse_symbols("+-+")), 3u);
  EXPECT_EQ(minimal_period(parse_symbols("*")), 1u);
  EXPECT_THROW(minimal_period({}), Error);
}

TEST(MinimalPeriod, AgreesWithDivisorSearch) {
  std::mt19937_64 rng(1);
  const char alphabet[] = "+-*";
  for (int rep = 0; rep < 3000; ++rep) {
    std::size_t block = 1 + rng() % 6;
    std::size_t reps = 1 + rng() % 5;
    std::string b;
    for (std::size_t i = 0; i < block; ++i) b += alphabet[rng() % (rep % 2 ? 2 : 3)];
    std::string w;
    for (std::size_t i = 0; i < reps; ++i) w += b;
    SymbolWord sw = parse_symbols(w);
    ASSERT_EQ(minimal_period(sw), brute_minimal_period(sw)) << w;
  }
}

TEST(DetectPeriod, E) {
  PeriodDescriptor d = detect_period(named_stream("e"), table());
  EXPECT_TRUE(d.pure);
  EXPECT_TRUE(d.minimal);
  EXPECT_EQ(d.period.size(), 24u);
  EXPECT_EQ(minimal_period(d.period), 24u);
  EXPECT_TRUE(is_skew_symmetric(d.period));
  EXPECT_FALSE(is_cyclic_period(d.period, 12));
  EXPECT_FALSE(is_cyclic_period(d.period, 8));
}

TEST(DetectPeriod, ESquared) {
  PeriodDescriptor d = detect_period(named_stream("e2"), table());
  EXPECT_TRUE(d.pure);
  EXPECT_EQ(d.period.size(), 40u);
  EXPECT_EQ(to_string(d.period).substr(0, 5), "+*+-*");
  EXPECT_FALSE(is_cyclic_period(d.period, 20));
  EXPECT_FALSE(is_cyclic_period(d.period, 8));
}

TEST(DetectPeriod, ShortTable) {
  struct Row {
    DigitList pre, period;
    std::size_t length;
  };
  std::vector<Row> rows = {{{}, {1}, 12},       {{}, {3}, 12},       {{}, {2}, 8},
                           {{}, {4}, 2},        {{1, 1}, {4}, 1},    {{}, {1, 2, 3}, 6},
                           {{}, {1, 2, 2}, 36}, {{}, {1, 2, 2, 2}, 8}, {{}, {1, 3, 3}, 3}};
  for (const Row& r : rows) {
    PeriodDescriptor d = detect_period(DigitStream::eventually_periodic(r.pre, r.period), table());
    EXPECT_EQ(d.period.size(), r.length) << format_digits(r.period);
  }
}

TEST(DetectPeriod, ReproducesOracle) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Digit> digit(1, 8);
  for (int rep = 0; rep < 80; ++rep) {
    DigitList pre(rng() % 4), period(1 + rng() % 5);
    for (auto& a : pre) a = digit(rng);
    for (auto& a : period) a = digit(rng);
    DigitStream s = DigitStream::eventually_periodic(pre, period);
    PeriodDescriptor d = detect_period(s, table());
    std::size_t n = 5 * (pre.size() + d.pre_period.size() + d.period.size());
    ASSERT_EQ(d.expand(n), jacobi_sequence_oracle(s, n)) << rep;
    ASSERT_EQ(minimal_period(d.period), d.period.size());
    // The pre-period cannot shrink further.
    if (!d.pre_period.empty()) EXPECT_NE(d.pre_period.back(), d.period.back());
  }
}

TEST(DetectPeriod, DivisorBoundExhaustive) {
  for (std::size_t l = 1; l <= 4; ++l) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < l; ++i) count *= 4;
    for (std::size_t code = 0; code < count; ++code) {
      DigitList p(l);
      std::size_t c = code;
      for (auto& a : p) {
        a = 1 + c % 4;
        c /= 4;
      }
      PeriodDescriptor d = detect_period(DigitStream::purely_periodic(p), table());
      ASSERT_TRUE(d.within_divisor_bound.has_value());
      EXPECT_TRUE(*d.within_divisor_bound) << format_digits(p);
      EXPECT_EQ(d.cycle_length % l, 0u);
      EXPECT_EQ(d.cycle_length % d.period.size(), 0u);
    }
  }
}

TEST(DetectPeriod, RejectsNonPeriodicStreams) {
  try {
    detect_period(DigitStream::finite({1, 2, 3}), table());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedStream);
  }
}

TEST(NormalizePeriod, AbsorbsPrePeriod) {
  PeriodDescriptor d = normalize_period(parse_symbols("-+"), parse_symbols("-+-+"));
  EXPECT_TRUE(d.pure);
  EXPECT_EQ(to_string(d.period), "-+");
  d = normalize_period(parse_symbols("++-"), parse_symbols("+-"));
  EXPECT_FALSE(d.pure);
  EXPECT_EQ(to_string(d.pre_period), "+");
  EXPECT_EQ(to_string(d.period), "+-");
  d = normalize_period(parse_symbols("++"), parse_symbols("+-"));
  EXPECT_EQ(to_string(d.pre_period), "++");
  EXPECT_EQ(to_string(d.period), "+-");
}

TEST(Certificate, PeriodicPartOfEPrime) {
  Certificate c = verify_certificate({1, 2, 1, 1, 4, 1}, 24);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.matrix[0][0], 9286113);
  EXPECT_EQ(c.matrix[0][1], 7622528);
  EXPECT_EQ(c.matrix[1][0], 6669712);
  EXPECT_EQ(c.matrix[1][1], 5474849);
  EXPECT_EQ(c.jacobi_ts, JacobiValue::kPlus);
}

TEST(Certificate, PeriodicPartOfEDoublePrime) {
  DigitList period = {2, 1, 1, 3, 2, 1, 1, 1, 2, 2, 4, 1, 1, 1, 2, 3, 1, 1, 4, 2};
  Certificate c = verify_certificate(period, 40);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.matrix[0][0], BigInt("11702972599281"));
  EXPECT_EQ(c.matrix[0][1], BigInt("5273785915232"));
  EXPECT_EQ(c.matrix[1][0], BigInt("4563573565840"));
  EXPECT_EQ(c.matrix[1][1], BigInt("2056512547601"));
}

TEST(Certificate, FailsAtOnePeriod) {
  // [1,2,1,1,4,1]: s = 1,3,4,7,32,39 and t = 1,2,3,5,23,28, so the matrix
  // is 3*I mod 4.
  Certificate c = verify_certificate({1, 2, 1, 1, 4, 1}, 6);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.matrix[0][0], 39);
  EXPECT_EQ(c.matrix[0][1], 32);
  EXPECT_EQ(c.matrix[1][0], 28);
  EXPECT_EQ(c.matrix[1][1], 23);
  EXPECT_FALSE(c.identity_mod4);
}

TEST(Certificate, PreconditionOnL) {
  EXPECT_THROW(verify_certificate({1, 2, 3}, 3), Error);
  EXPECT_THROW(verify_certificate({1, 2, 3}, 8), Error);
  EXPECT_THROW(verify_certificate({1}, 0), Error);
  EXPECT_NO_THROW(verify_certificate({1, 2, 3}, 6));
}

TEST(Certificate, ImpliesDetectedPeriodDivides) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<Digit> digit(1, 4);
  int certified = 0;
  for (int rep = 0; rep < 200; ++rep) {
    DigitList p(1 + rng() % 5);
    for (auto& a : p) a = digit(rng);
    PeriodDescriptor d = detect_period(DigitStream::purely_periodic(p), table());
    for (std::size_t mult = 1; mult <= 24; ++mult) {
      std::size_t L = mult * p.size();
      if (L % 2) continue;
      if (verify_certificate(p, L).ok) {
        ++certified;
        EXPECT_EQ(L % d.period.size(), 0u) << format_digits(p) << " L=" << L;
        EXPECT_TRUE(d.pure);
      }
    }
  }
  EXPECT_GT(certified, 100);
}

TEST(Purity, EPrePeriodComparison) {
  // J(p_0/q_0) for e' against J(s'_23/t'_23) of the periodic tail taken
  // after the pre-period digit.
  DigitStream e_prime = DigitStream::eventually_periodic({2}, {1, 2, 1, 1, 4, 1});
  auto cs = convergents(e_prime, 25);
  EXPECT_EQ(jacobi_symbol(cs[0].s, cs[0].t), JacobiValue::kPlus);
  EXPECT_EQ(jacobi_symbol(cs[24].s, cs[24].t), JacobiValue::kPlus);
  EXPECT_TRUE(detect_period(e_prime, table()).pure);
}

TEST(SkewSymmetry, Examples) {
  EXPECT_TRUE(is_skew_symmetric(parse_symbols("+-")));
  EXPECT_FALSE(is_skew_symmetric(parse_symbols("++")));
  EXPECT_TRUE(is_skew_symmetric(parse_symbols("+*-*")));
  EXPECT_THROW(is_skew_symmetric(parse_symbols("+-+")), Error);
}

}  // namespace
}  // namespace jseq
