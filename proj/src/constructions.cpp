#include "jseq/constructions.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "jseq/error.hpp"

namespace jseq {

namespace {

void require_valid_gap(std::uint64_t g, bool first) {
  if (g % 2 != 0 || g < 6) {
    throw Error(ErrorKind::kInvalidGaps,
                std::string(first ? "k_1" : "gap") + " = " + std::to_string(g) +
                    " must be even and >= 6");
  }
}

std::uint64_t parse_u64(std::string_view item) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
  if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
    throw Error(ErrorKind::kInvalidGaps, "cannot parse '" + std::string(item) + "'");
  }
  return v;
}

}  // namespace

GapSequence GapSequence::explicit_gaps(std::vector<std::uint64_t> gaps) {
  if (gaps.empty()) throw Error(ErrorKind::kInvalidGaps, "no gaps given");
  GapSequence g;
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    require_valid_gap(gaps[i], i == 0);
    k += gaps[i];
    g.ks_.push_back(k);
  }
  g.gaps_ = std::move(gaps);
  return g;
}

GapSequence GapSequence::arithmetic(std::uint64_t start, std::uint64_t delta) {
  require_valid_gap(start, true);
  if (delta % 2 != 0) {
    throw Error(ErrorKind::kInvalidGaps, "delta = " + std::to_string(delta) + " must be even");
  }
  GapSequence g;
  g.arithmetic_ = true;
  g.start_ = start;
  g.delta_ = delta;
  return g;
}

GapSequence GapSequence::parse(std::string_view text) {
  if (text.find('=') != std::string_view::npos) {
    std::optional<std::uint64_t> start, delta;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = std::min(text.find(',', pos), text.size());
      std::string_view item = text.substr(pos, end - pos);
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorKind::kInvalidGaps, "expected key=value, got '" + std::string(item) + "'");
      }
      std::string_view key = item.substr(0, eq);
      std::uint64_t value = parse_u64(item.substr(eq + 1));
      if (key == "start") {
        start = value;
      } else if (key == "delta") {
        delta = value;
      } else {
        throw Error(ErrorKind::kInvalidGaps, "unknown key '" + std::string(key) + "'");
      }
      pos = end + 1;
    }
    if (!start) throw Error(ErrorKind::kInvalidGaps, "missing start=");
    return arithmetic(*start, delta.value_or(0));
  }
  std::vector<std::uint64_t> gaps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = std::min(text.find(',', pos), text.size());
    gaps.push_back(parse_u64(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return explicit_gaps(std::move(gaps));
}

std::uint64_t GapSequence::k(std::uint64_t j) const {
  if (j < 1) throw Error(ErrorKind::kDomain, "gap index starts at 1");
  if (arithmetic_) return j * start_ + delta_ * (j * (j - 1) / 2);
  if (j <= ks_.size()) return ks_[j - 1];
  return ks_.back() + (j - ks_.size()) * gaps_.back();
}

bool GapSequence::contains(std::uint64_t k) const {
  if (k == 0) return false;
  if (arithmetic_) {
    if (delta_ == 0) return k % start_ == 0;
    // delta j^2 + (2 start - delta) j - 2k = 0
    const long double b = static_cast<long double>(2 * start_ - delta_);
    const long double disc = b * b + 8.0L * static_cast<long double>(delta_) * static_cast<long double>(k);
    const auto approx = static_cast<std::uint64_t>((std::sqrt(disc) - b) / (2.0L * delta_));
    for (std::uint64_t j = approx > 1 ? approx - 1 : 1; j <= approx + 1; ++j) {
      if (this->k(j) == k) return true;
    }
    return false;
  }
  if (k <= ks_.back()) return std::binary_search(ks_.begin(), ks_.end(), k);
  return (k - ks_.back()) % gaps_.back() == 0;
}

std::optional<GapSequence::Tail> GapSequence::constant_tail() const {
  if (arithmetic_) {
    if (delta_ == 0) return Tail{0, start_};
    return std::nullopt;
  }
  std::size_t m = gaps_.size() - 1;
  while (m > 0 && gaps_[m - 1] == gaps_.back()) --m;
  return Tail{m == 0 ? 0 : ks_[m - 1], gaps_.back()};
}

std::string GapSequence::to_string() const {
  if (arithmetic_) {
    return "start=" + std::to_string(start_) + ",delta=" + std::to_string(delta_);
  }
  return format_digits(gaps_);
}

namespace {

DigitStream periodic_from_rule(const std::string& name, const DigitStream::Rule& rule,
                               std::size_t pre_length, std::size_t period_length) {
  DigitList pre, period;
  for (std::size_t k = 0; k < pre_length; ++k) pre.push_back(rule(k));
  for (std::size_t i = 0; i < period_length; ++i) period.push_back(rule(pre_length + i));
  return DigitStream::eventually_periodic(std::move(pre), std::move(period)).renamed(name);
}

}  // namespace

DigitStream theorem3_stream(const GapSequence& gaps) {
  DigitStream::Rule rule = [gaps](std::uint64_t k) -> Digit {
    if (k < 2) return 1;
    if (gaps.contains(k + 1) || gaps.contains(k - 1)) return 2;
    return 4;
  };
  if (auto tail = gaps.constant_tail()) {
    // From k_m + 2 on, the 2s sit at k = k_m +- 1 mod g.
    return periodic_from_rule("theorem3", rule, tail->anchor + 2, tail->gap);
  }
  return DigitStream::rule("theorem3", std::nullopt, std::move(rule));
}

DigitStream theorem7_stream(const GapSequence& gaps) {
  DigitStream::Rule rule = [gaps](std::uint64_t k) -> Digit {
    if (k < 2) return 1;
    if (gaps.contains(k) || gaps.contains(k - 2)) return 2;
    return 4;
  };
  if (auto tail = gaps.constant_tail()) {
    return periodic_from_rule("theorem7", rule, tail->anchor + 3, tail->gap);
  }
  return DigitStream::rule("theorem7", std::nullopt, std::move(rule));
}

DigitStream theorem7_period_stream(std::size_t L) {
  if (L < 2 || L % 2 != 0) {
    throw Error(ErrorKind::kDomain,
                "the construction covers even L >= 2 only; odd periods are not constructed");
  }
  if (L == 2) return DigitStream::eventually_periodic({1, 1, 2}, {4}).renamed("theorem7");
  if (L == 4) return DigitStream::eventually_periodic({1, 1, 4}, {4, 2}).renamed("theorem7");
  return theorem7_stream(GapSequence::constant(L));
}

DigitStream theorem8_stream(std::size_t L) {
  if (L < 2) throw Error(ErrorKind::kDomain, "L must be >= 2");
  if (L == 2) return DigitStream::purely_periodic({4}).renamed("theorem8");
  DigitList period(L, 4);
  period[0] = 1;
  period[1] = 1;
  period[L - 1] = 3;
  return DigitStream::purely_periodic(std::move(period)).renamed("theorem8");
}

bool lemma1_predict(unsigned t_k_mod4, unsigned t_next_mod4, unsigned k_parity) {
  auto odd_residue = [](unsigned r) { return r == 1 || r == 3; };
  if (!odd_residue(t_k_mod4) || !odd_residue(t_next_mod4)) {
    throw Error(ErrorKind::kDomain, "both denominators must be odd");
  }
  if (k_parity > 1) throw Error(ErrorKind::kDomain, "parity must be 0 or 1");
  return (t_k_mod4 == 1 && t_next_mod4 == 3 && k_parity == 1) ||
         (t_k_mod4 == 3 && t_next_mod4 == 1 && k_parity == 0);
}

bool residue_pattern_check(const DigitStream& stream, const GapSequence& gaps,
                           PatternVariant variant, std::size_t n) {
  const std::string& name = stream.name();
  if ((variant == PatternVariant::kTheorem3 && name == "theorem7") ||
      (variant == PatternVariant::kTheorem7 && name == "theorem3")) {
    throw Error(ErrorKind::kPrecondition, "variant does not match the " + name + " stream");
  }
  unsigned t_prev = 0;  // t_{-1}
  unsigned t_prev2 = 1;  // t_{-2}
  for (std::size_t k = 0; k < n; ++k) {
    unsigned t = static_cast<unsigned>((digit_class(stream.at(k)) * t_prev + t_prev2) % 4);
    t_prev2 = t_prev;
    t_prev = t;
    const bool three = variant == PatternVariant::kTheorem3 ? gaps.contains(k + 1) : gaps.contains(k);
    if (t != (three ? 3u : 1u)) return false;
  }
  return true;
}

namespace {

int match_pattern(JacobiValue a, JacobiValue b, JacobiValue c, JacobiValue d) {
  using enum JacobiValue;
  if (a == kMinus && b == kPlus && c == kPlus && d == kMinus) return 1;
  if (a == kPlus && b == kMinus && c == kMinus && d == kPlus) return 2;
  return 0;
}

}  // namespace

std::vector<ForbiddenHit> scan_forbidden(const SymbolWord& symbols) {
  std::vector<ForbiddenHit> hits;
  for (std::size_t i = 0; i + 3 < symbols.size(); ++i) {
    if (int p = match_pattern(symbols[i], symbols[i + 1], symbols[i + 2], symbols[i + 3])) {
      hits.push_back({i, p});
    }
  }
  return hits;
}

std::vector<ForbiddenHit> scan_forbidden_ignoring_star(const SymbolWord& symbols) {
  SymbolWord kept;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] != JacobiValue::kStar) {
      kept.push_back(symbols[i]);
      where.push_back(i);
    }
  }
  std::vector<ForbiddenHit> hits = scan_forbidden(kept);
  for (ForbiddenHit& h : hits) h.position = where[h.position];
  return hits;
}

ScanReport scan_all_words(std::size_t max_len, const TransducerTable& table) {
  ScanReport report;
  report.max_len = max_len;
  if (max_len == 0) return report;

  struct Frame {
    StateId id = TransducerTable::kNone;
    unsigned digit = 0;
    // Last up to four non-* symbols, most recent last.
    std::array<JacobiValue, 4> kept{};
    unsigned kept_count = 0;
  };
  std::vector<Frame> frames(max_len);
  std::vector<JacobiValue> raw(max_len);
  std::size_t depth = 0;
  while (true) {
    Frame& f = frames[depth];
    if (f.digit == 4) {
      if (depth == 0) break;
      --depth;
      continue;
    }
    const unsigned d = ++f.digit;
    f.id = depth == 0 ? table.initial(d) : table.next(frames[depth - 1].id, d);
    const JacobiValue sym = table.state(f.id).j_st;
    raw[depth] = sym;
    ++report.words_checked;

    bool hit = depth >= 3 && match_pattern(raw[depth - 3], raw[depth - 2], raw[depth - 1], sym) != 0;
    if (depth == 0) {
      f.kept_count = 0;
    } else {
      f.kept = frames[depth - 1].kept;
      f.kept_count = frames[depth - 1].kept_count;
    }
    if (sym != JacobiValue::kStar) {
      if (f.kept_count == 4) {
        std::rotate(f.kept.begin(), f.kept.begin() + 1, f.kept.end());
        f.kept[3] = sym;
      } else {
        f.kept[f.kept_count++] = sym;
      }
      if (!hit && f.kept_count == 4 &&
          match_pattern(f.kept[0], f.kept[1], f.kept[2], f.kept[3]) != 0) {
        ++report.near_misses;
      }
    }
    if (hit) {
      ++report.hits;
      if (report.hit_words.size() < 10) {
        DigitList word;
        for (std::size_t i = 0; i <= depth; ++i) word.push_back(frames[i].digit);
        report.hit_words.push_back(std::move(word));
      }
    }
    if (depth + 1 < max_len) {
      ++depth;
      frames[depth].digit = 0;
    }
  }
  return report;
}

}  // namespace jseq
