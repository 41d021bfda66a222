#include "jseq/cf.hpp"

#include <charconv>
#include <string>

#include "jseq/error.hpp"

namespace jseq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDigit: return "invalid digit";
    case ErrorKind::kOutOfRange: return "out of range";
    case ErrorKind::kNotIrrational: return "not irrational";
    case ErrorKind::kNotCoprime: return "not coprime";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kPrecondition: return "precondition violated";
    case ErrorKind::kUnknownName: return "unknown name";
    case ErrorKind::kInvalidGaps: return "invalid gap sequence";
    case ErrorKind::kUnsupportedStream: return "unsupported stream";
    case ErrorKind::kIncompleteTable: return "incomplete table";
    case ErrorKind::kTheoremFalsified: return "theorem falsified";
    case ErrorKind::kEngineMismatch: return "engine mismatch";
  }
  return "error";
}

namespace {

void check_digits(const DigitList& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 1) {
      throw Error(ErrorKind::kInvalidDigit,
                  "digit " + std::to_string(i) + " is " +
                      std::to_string(digits[i]));
    }
  }
}

}  // namespace

DigitStream DigitStream::finite(DigitList digits) {
  check_digits(digits);
  DigitStream s;
  s.kind_ = Kind::kFinite;
  s.name_ = "digits";
  s.pre_ = std::move(digits);
  return s;
}

DigitStream DigitStream::eventually_periodic(DigitList pre, DigitList period) {
  if (period.empty()) {
    throw Error(ErrorKind::kPrecondition, "empty period");
  }
  check_digits(pre);
  check_digits(period);
  DigitStream s;
  s.kind_ = Kind::kEventuallyPeriodic;
  s.name_ = "periodic";
  s.pre_ = std::move(pre);
  s.period_ = std::move(period);
  return s;
}

DigitStream DigitStream::rule(std::string name, std::optional<std::int64_t> param,
                              Rule rule, std::optional<ClassShape> class_shape) {
  if (class_shape && class_shape->period_length == 0) {
    throw Error(ErrorKind::kPrecondition, "empty class period");
  }
  DigitStream s;
  s.kind_ = Kind::kRule;
  s.name_ = std::move(name);
  s.param_ = param;
  s.rule_ = std::move(rule);
  s.class_shape_ = class_shape;
  return s;
}

DigitStream DigitStream::renamed(std::string name) const {
  DigitStream s = *this;
  s.name_ = std::move(name);
  return s;
}

Digit DigitStream::at(std::uint64_t k) const {
  switch (kind_) {
    case Kind::kFinite:
      if (k >= pre_.size()) {
        throw Error(ErrorKind::kOutOfRange,
                    "index " + std::to_string(k) + " past the " +
                        std::to_string(pre_.size()) + " given digits");
      }
      return pre_[k];
    case Kind::kEventuallyPeriodic:
      if (k < pre_.size()) return pre_[k];
      return period_[(k - pre_.size()) % period_.size()];
    case Kind::kRule: {
      Digit a = rule_(k);
      if (a < 1) {
        throw Error(ErrorKind::kInvalidDigit,
                    name_ + " emitted " + std::to_string(a) + " at index " +
                        std::to_string(k));
      }
      return a;
    }
  }
  return 0;
}

DigitList DigitStream::prefix(std::size_t n) const {
  DigitList out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(at(k));
  return out;
}

std::optional<std::size_t> DigitStream::size() const {
  if (kind_ == Kind::kFinite) return pre_.size();
  return std::nullopt;
}

const DigitList& DigitStream::pre_period() const {
  if (kind_ != Kind::kEventuallyPeriodic) {
    throw Error(ErrorKind::kUnsupportedStream, name_ + " is not eventually periodic");
  }
  return pre_;
}

const DigitList& DigitStream::period() const {
  if (kind_ != Kind::kEventuallyPeriodic) {
    throw Error(ErrorKind::kUnsupportedStream, name_ + " is not eventually periodic");
  }
  return period_;
}

std::optional<ClassStructure> DigitStream::class_structure() const {
  ClassStructure cs;
  switch (kind_) {
    case Kind::kFinite:
      return std::nullopt;
    case Kind::kEventuallyPeriodic:
      for (Digit a : pre_) cs.pre.push_back(digit_class(a));
      for (Digit a : period_) cs.period.push_back(digit_class(a));
      return cs;
    case Kind::kRule:
      if (!class_shape_) return std::nullopt;
      for (std::size_t k = 0; k < class_shape_->pre_length; ++k) {
        cs.pre.push_back(digit_class(at(k)));
      }
      for (std::size_t i = 0; i < class_shape_->period_length; ++i) {
        cs.period.push_back(digit_class(at(class_shape_->pre_length + i)));
      }
      return cs;
  }
  return std::nullopt;
}

Convergent next_convergent(const Convergent& prev2, const Convergent& prev1,
                           Digit a) {
  if (a < 1) throw Error(ErrorKind::kInvalidDigit, "partial quotient 0");
  if (prev2.k + 1 != prev1.k) {
    throw Error(ErrorKind::kPrecondition, "convergents are not consecutive");
  }
  Convergent out;
  out.k = prev1.k + 1;
  BigInt ba = big(a);
  out.s = ba * prev1.s + prev2.s;
  out.t = ba * prev1.t + prev2.t;
  return out;
}

ConvergentWalker::ConvergentWalker() {
  prev_ = Convergent{-2, BigInt(0), BigInt(1)};
  cur_ = Convergent{-1, BigInt(1), BigInt(0)};
}

void ConvergentWalker::push(Digit a) {
  if (a < 1) throw Error(ErrorKind::kInvalidDigit, "partial quotient 0");
  // prev <- prev + a*cur, then swap, without temporaries.
  if (a <= 0xffffffffUL) {
    mpz_addmul_ui(prev_.s.get_mpz_t(), cur_.s.get_mpz_t(), static_cast<unsigned long>(a));
    mpz_addmul_ui(prev_.t.get_mpz_t(), cur_.t.get_mpz_t(), static_cast<unsigned long>(a));
  } else {
    BigInt ba = big(a);
    prev_.s += ba * cur_.s;
    prev_.t += ba * cur_.t;
  }
  prev_.k = cur_.k + 1;
  std::swap(prev_, cur_);
}

std::vector<Convergent> convergents(const DigitStream& stream, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "need at least one convergent");
  std::vector<Convergent> out;
  out.reserve(n);
  ConvergentWalker w;
  for (std::size_t k = 0; k < n; ++k) {
    w.push(stream.at(k));
    out.push_back(w.current());
  }
  return out;
}

namespace {

std::int64_t require_param(std::string_view name, std::optional<std::int64_t> param,
                           std::int64_t min) {
  if (!param) {
    throw Error(ErrorKind::kDomain, std::string(name) + " needs a parameter n");
  }
  if (*param < min) {
    throw Error(ErrorKind::kDomain, std::string(name) + " needs n >= " +
                                        std::to_string(min) + ", got " +
                                        std::to_string(*param));
  }
  return *param;
}

}  // namespace

DigitStream named_stream(std::string_view name, std::optional<std::int64_t> param) {
  if (name == "e") {
    // [2, {1, 2j, 1}]; classes periodic with period 6 from k = 1.
    return DigitStream::rule(
        "e", std::nullopt,
        [](std::uint64_t k) -> Digit {
          if (k == 0) return 2;
          std::uint64_t j = (k - 1) / 3 + 1;
          return (k - 1) % 3 == 1 ? 2 * j : 1;
        },
        ClassShape{1, 6});
  }
  if (name == "e_inv_n") {
    // e^(1/n) = [{1, n(2j-1)-1, 1}]
    const auto n = static_cast<std::uint64_t>(require_param(name, param, 2));
    return DigitStream::rule(
        "e_inv_n", param,
        [n](std::uint64_t k) -> Digit {
          std::uint64_t j = k / 3 + 1;
          return k % 3 == 1 ? n * (2 * j - 1) - 1 : 1;
        },
        ClassShape{0, 6});
  }
  if (name == "e_squared" || name == "e2") {
    // [7, {2+3(j-1), 1, 1, 3+3(j-1), 18+12(j-1)}]
    return DigitStream::rule(
        "e_squared", std::nullopt,
        [](std::uint64_t k) -> Digit {
          if (k == 0) return 7;
          std::uint64_t i = (k - 1) / 5;
          switch ((k - 1) % 5) {
            case 0: return 2 + 3 * i;
            case 3: return 3 + 3 * i;
            case 4: return 18 + 12 * i;
            default: return 1;
          }
        },
        ClassShape{1, 20});
  }
  if (name == "coth_family" || name == "coth") {
    // (e^(2/n)+1)/(e^(2/n)-1) = [n, 3n, 5n, ...]
    const auto n = static_cast<std::uint64_t>(require_param(name, param, 1));
    return DigitStream::rule(
        "coth_family", param,
        [n](std::uint64_t k) -> Digit { return (2 * k + 1) * n; },
        ClassShape{0, 2});
  }
  throw Error(ErrorKind::kUnknownName, "no stream named '" + std::string(name) + "'");
}

std::string format_digits(const DigitList& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

DigitList parse_digits(std::string_view text) {
  DigitList out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    Digit v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::kInvalidDigit, "cannot parse digit '" + std::string(item) + "'");
    }
    if (v < 1) throw Error(ErrorKind::kInvalidDigit, "digits must be >= 1");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace jseq
