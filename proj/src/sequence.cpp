#include "jseq/sequence.hpp"

#include <string>

#include "jseq/error.hpp"

namespace jseq {

namespace {

unsigned symbol_index(JacobiValue v) {
  switch (v) {
    case JacobiValue::kPlus: return 0;
    case JacobiValue::kMinus: return 1;
    case JacobiValue::kStar: return 2;
  }
  return 0;
}

std::string describe(const ResidueState& s) {
  return "(s=" + std::to_string(s.s_mod4) + ", t=" + std::to_string(s.t_mod4) +
         ", s'=" + std::to_string(s.s_prev_mod4) + ", t'=" + std::to_string(s.t_prev_mod4) +
         ", k%2=" + std::to_string(s.k_parity) + ", J(s/t)=" + to_char(s.j_st) +
         ", J(t/s)=" + to_char(s.j_ts) + ")";
}

}  // namespace

std::uint32_t ResidueState::key() const {
  std::uint32_t k = s_mod4;
  k = k * 4 + t_mod4;
  k = k * 4 + s_prev_mod4;
  k = k * 4 + t_prev_mod4;
  k = k * 2 + k_parity;
  k = k * 3 + symbol_index(j_st);
  k = k * 3 + symbol_index(j_ts);
  return k;
}

ResidueState residue_state(const Convergent& prev, const Convergent& cur) {
  if (cur.k < 0) throw Error(ErrorKind::kPrecondition, "state needs k >= 0");
  ResidueState st;
  st.s_mod4 = static_cast<std::uint8_t>(mod4(cur.s));
  st.t_mod4 = static_cast<std::uint8_t>(mod4(cur.t));
  st.s_prev_mod4 = static_cast<std::uint8_t>(mod4(prev.s));
  st.t_prev_mod4 = static_cast<std::uint8_t>(mod4(prev.t));
  st.k_parity = static_cast<std::uint8_t>(cur.k & 1);
  st.j_st = jacobi_symbol(cur.s, cur.t);
  st.j_ts = jacobi_symbol(cur.t, cur.s);
  return st;
}

StateId TransducerTable::initial(unsigned digit_class) const {
  if (digit_class < 1 || digit_class > 4) {
    throw Error(ErrorKind::kDomain, "digit class must be in 1..4");
  }
  StateId id = initial_[digit_class - 1];
  if (id == kNone) throw Error(ErrorKind::kIncompleteTable, "no initial state");
  return id;
}

StateId TransducerTable::next(StateId id, unsigned digit_class) const {
  if (digit_class < 1 || digit_class > 4) {
    throw Error(ErrorKind::kDomain, "digit class must be in 1..4");
  }
  if (id >= next_.size()) {
    throw Error(ErrorKind::kIncompleteTable, "state " + std::to_string(id) + " not in table");
  }
  StateId out = next_[id][digit_class - 1];
  if (out == kNone) {
    throw Error(ErrorKind::kIncompleteTable,
                "no transition from state " + std::to_string(id));
  }
  return out;
}

std::optional<StateId> TransducerTable::find(const ResidueState& s) const {
  StateId id = index_.empty() ? kNone : index_[s.key()];
  if (id == kNone) return std::nullopt;
  return id;
}

namespace {

struct Pair {
  Convergent prev;
  Convergent cur;
};

void expect_state(const TransducerTable& table, StateId expected,
                  const ResidueState& observed, const DigitList& word) {
  if (!(table.state(expected) == observed)) {
    throw Error(ErrorKind::kTheoremFalsified,
                "digit word " + format_digits(word) + " reaches " + describe(observed) +
                    " but the table predicts " + describe(table.state(expected)));
  }
}

}  // namespace

TransducerTable build_transducer(std::size_t probe_depth) {
  if (probe_depth < 1) throw Error(ErrorKind::kPrecondition, "probe depth must be >= 1");

  TransducerTable table;
  table.index_.assign(ResidueState::kKeySpace, TransducerTable::kNone);
  std::vector<Pair> pairs;

  auto intern = [&](const ResidueState& s, DigitList word, Pair pair) -> StateId {
    StateId& slot = table.index_[s.key()];
    if (slot != TransducerTable::kNone) return slot;
    slot = static_cast<StateId>(table.states_.size());
    table.states_.push_back(s);
    table.next_.push_back({TransducerTable::kNone, TransducerTable::kNone,
                           TransducerTable::kNone, TransducerTable::kNone});
    table.witnesses_.push_back(std::move(word));
    pairs.push_back(std::move(pair));
    return slot;
  };

  for (unsigned c = 1; c <= 4; ++c) {
    ConvergentWalker w;
    w.push(c);
    table.initial_[c - 1] =
        intern(residue_state(w.previous(), w.current()), {c}, {w.previous(), w.current()});
  }

  // Breadth-first in state order with digits 1..4, so each witness is the
  // shortlex-smallest word reaching its state.
  for (std::size_t i = 0; i < table.states_.size(); ++i) {
    for (unsigned d = 1; d <= 4; ++d) {
      Pair from = pairs[i];
      Convergent nxt = next_convergent(from.prev, from.cur, d);
      ResidueState s = residue_state(from.cur, nxt);
      DigitList word = table.witnesses_[i];
      word.push_back(d);
      StateId id = intern(s, std::move(word), {from.cur, nxt});
      table.next_[i][d - 1] = id;
    }
  }

  // Exhaustive re-derivation along every word of length <= probe_depth.
  std::vector<Convergent> stack(probe_depth + 2);
  std::vector<StateId> ids(probe_depth + 1);
  std::vector<unsigned> digits(probe_depth + 1, 0);
  stack[0] = Convergent{-2, BigInt(0), BigInt(1)};
  stack[1] = Convergent{-1, BigInt(1), BigInt(0)};
  std::size_t depth = 0;
  digits[0] = 0;
  while (true) {
    if (digits[depth] == 4) {
      if (depth == 0) break;
      --depth;
      continue;
    }
    unsigned d = ++digits[depth];
    Convergent& c = stack[depth + 2];
    const Convergent& p1 = stack[depth + 1];
    const Convergent& p2 = stack[depth];
    c.k = p1.k + 1;
    mpz_mul_ui(c.s.get_mpz_t(), p1.s.get_mpz_t(), d);
    c.s += p2.s;
    mpz_mul_ui(c.t.get_mpz_t(), p1.t.get_mpz_t(), d);
    c.t += p2.t;
    StateId predicted = depth == 0 ? table.initial(d) : table.next(ids[depth - 1], d);
    ResidueState observed = residue_state(p1, c);
    if (!(table.state(predicted) == observed)) {
      DigitList word(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
      expect_state(table, predicted, observed, word);
    }
    ++table.consistency_checks_;
    ids[depth] = predicted;
    if (depth + 1 < probe_depth) {
      ++depth;
      digits[depth] = 0;
    }
  }

  // Lifted witnesses: digits shifted by multiples of 4 must land on the
  // same states and transitions.
  for (std::size_t i = 0; i < table.states_.size(); ++i) {
    const DigitList& word = table.witnesses_[i];
    DigitList lifted;
    ConvergentWalker w;
    for (std::size_t j = 0; j < word.size(); ++j) {
      Digit a = word[j] + 4 * (1 + j % 3);
      lifted.push_back(a);
      w.push(a);
    }
    expect_state(table, static_cast<StateId>(i), residue_state(w.previous(), w.current()), lifted);
    for (unsigned d = 1; d <= 4; ++d) {
      Digit a = d + 8;
      Convergent nxt = next_convergent(w.previous(), w.current(), a);
      DigitList ext = lifted;
      ext.push_back(a);
      expect_state(table, table.next_[i][d - 1], residue_state(w.current(), nxt), ext);
      ++table.consistency_checks_;
    }
  }
  return table;
}

const TransducerTable& default_transducer() {
  static const TransducerTable table = build_transducer(8);
  return table;
}

SymbolWord jacobi_sequence_oracle(const DigitStream& stream, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "need n >= 1");
  SymbolWord out;
  out.reserve(n);
  ConvergentWalker w;
  for (std::size_t k = 0; k < n; ++k) {
    w.push(stream.at(k));
    out.push_back(jacobi_symbol(w.current().s, w.current().t));
  }
  return out;
}

SymbolWord jacobi_sequence_fast(const DigitStream& stream, std::size_t n,
                                const TransducerTable& table) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "need n >= 1");
  SymbolWord out;
  out.reserve(n);
  StateId id = table.initial(digit_class(stream.at(0)));
  out.push_back(table.state(id).j_st);
  for (std::size_t k = 1; k < n; ++k) {
    id = table.next(id, digit_class(stream.at(k)));
    out.push_back(table.state(id).j_st);
  }
  return out;
}

SymbolWord jacobi_sequence_of_classes(const std::vector<unsigned>& classes,
                                      const TransducerTable& table) {
  SymbolWord out;
  out.reserve(classes.size());
  StateId id = TransducerTable::kNone;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    id = k == 0 ? table.initial(classes[0]) : table.next(id, classes[k]);
    out.push_back(table.state(id).j_st);
  }
  return out;
}

DigitList four_representative(const DigitStream& stream, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "need n >= 1");
  DigitList out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(digit_class(stream.at(k)));
  return out;
}

bool congruent_mod4(const DigitStream& x, const DigitStream& y, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "need n >= 1");
  for (std::size_t k = 0; k < n; ++k) {
    if (digit_class(x.at(k)) != digit_class(y.at(k))) return false;
  }
  return true;
}

}  // namespace jseq
