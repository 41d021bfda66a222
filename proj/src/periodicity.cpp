#include "jseq/periodicity.hpp"

#include <string>
#include <unordered_map>

#include "jseq/error.hpp"

namespace jseq {

JacobiValue PeriodDescriptor::at(std::size_t k) const {
  if (k < pre_period.size()) return pre_period[k];
  return period[(k - pre_period.size()) % period.size()];
}

SymbolWord PeriodDescriptor::expand(std::size_t n) const {
  SymbolWord out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(at(k));
  return out;
}

std::size_t minimal_period(const SymbolWord& word) {
  const std::size_t n = word.size();
  if (n == 0) throw Error(ErrorKind::kPrecondition, "empty word");
  // Failure function; the word is a power of a block of length n - border
  // exactly when that length divides n.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = fail[i - 1];
    while (j > 0 && word[i] != word[j]) j = fail[j - 1];
    if (word[i] == word[j]) ++j;
    fail[i] = j;
  }
  std::size_t p = n - fail[n - 1];
  return n % p == 0 ? p : n;
}

bool is_cyclic_period(const SymbolWord& word, std::size_t p) {
  const std::size_t n = word.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (word[i] != word[(i + p) % n]) return false;
  }
  return true;
}

PeriodDescriptor normalize_period(SymbolWord pre, SymbolWord cycle) {
  if (cycle.empty()) throw Error(ErrorKind::kPrecondition, "empty cycle");
  const std::size_t p = minimal_period(cycle);
  cycle.resize(p);
  while (!pre.empty() && pre.back() == cycle.back()) {
    // Shift the start of the periodic part one step back.
    cycle.insert(cycle.begin(), pre.back());
    cycle.pop_back();
    pre.pop_back();
  }
  PeriodDescriptor d;
  d.pure = pre.empty();
  d.pre_period = std::move(pre);
  d.period = std::move(cycle);
  d.minimal = true;
  return d;
}

PeriodDescriptor detect_period(const DigitStream& stream, const TransducerTable& table) {
  std::optional<ClassStructure> cs = stream.class_structure();
  if (!cs) {
    throw Error(ErrorKind::kUnsupportedStream,
                stream.name() + " has no eventually periodic digit structure");
  }
  const std::size_t m = cs->pre.size();
  const std::size_t l = cs->period.size();
  auto class_at = [&](std::size_t k) {
    return k < m ? cs->pre[k] : cs->period[(k - m) % l];
  };

  SymbolWord symbols;
  std::unordered_map<std::size_t, std::size_t> seen;
  StateId id = table.initial(class_at(0));
  std::size_t start = 0;
  std::size_t end = 0;
  for (std::size_t k = 0;; ++k) {
    if (k > 0) id = table.next(id, class_at(k));
    if (k >= m) {
      std::size_t key = static_cast<std::size_t>(id) * l + (k - m) % l;
      auto [it, inserted] = seen.emplace(key, k);
      if (!inserted) {
        start = it->second;
        end = k;
        break;
      }
    }
    symbols.push_back(table.state(id).j_st);
  }

  SymbolWord pre(symbols.begin(), symbols.begin() + static_cast<std::ptrdiff_t>(start));
  SymbolWord cycle(symbols.begin() + static_cast<std::ptrdiff_t>(start), symbols.end());
  PeriodDescriptor d = normalize_period(std::move(pre), std::move(cycle));
  d.cycle_length = end - start;
  d.digit_period = l;
  if (m == 0) {
    const std::size_t L = d.period.size();
    d.within_divisor_bound = (8 * l) % L == 0 || (12 * l) % L == 0;
  }
  return d;
}

Certificate verify_certificate(const DigitList& period_digits, std::size_t L) {
  if (period_digits.empty()) throw Error(ErrorKind::kPrecondition, "empty period");
  const std::size_t l = period_digits.size();
  if (L == 0 || L % 2 != 0 || L % l != 0) {
    throw Error(ErrorKind::kPrecondition, "L = " + std::to_string(L) +
                                              " is not an even multiple of the period length " +
                                              std::to_string(l));
  }
  ConvergentWalker w;
  for (std::size_t k = 0; k < L; ++k) w.push(period_digits[k % l]);
  Certificate c;
  c.L = L;
  c.matrix = {{{w.current().s, w.previous().s}, {w.current().t, w.previous().t}}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c.matrix_mod4[i][j] = mod4(c.matrix[i][j]);
  }
  c.identity_mod4 = c.matrix_mod4[0][0] == 1 && c.matrix_mod4[0][1] == 0 &&
                    c.matrix_mod4[1][0] == 0 && c.matrix_mod4[1][1] == 1;
  c.jacobi_ts = jacobi_symbol(w.current().t, w.current().s);
  c.ok = c.identity_mod4 && c.jacobi_ts == JacobiValue::kPlus;
  return c;
}

std::optional<Certificate> find_certificate(const DigitList& period_digits,
                                            std::size_t max_multiple) {
  const std::size_t l = period_digits.size();
  for (std::size_t mult = 1; mult <= max_multiple; ++mult) {
    const std::size_t L = mult * l;
    if (L % 2 != 0) continue;
    Certificate c = verify_certificate(period_digits, L);
    if (c.ok) return c;
  }
  return std::nullopt;
}

bool is_skew_symmetric(const SymbolWord& period) {
  if (period.size() % 2 != 0) {
    throw Error(ErrorKind::kPrecondition, "skew symmetry needs an even length");
  }
  const std::size_t h = period.size() / 2;
  for (std::size_t i = 0; i < h; ++i) {
    if (period[i + h] != flip(period[i])) return false;
  }
  return true;
}

}  // namespace jseq
