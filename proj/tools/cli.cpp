#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "jseq/constructions.hpp"
#include "jseq/error.hpp"
#include "jseq/periodicity.hpp"
#include "jseq/serialize.hpp"
#include "jseq/sequence.hpp"
#include "jseq/surd.hpp"

namespace jseq::cli {

namespace {

using nlohmann::json;

struct NumberSpec {
  std::string number;
  std::optional<std::int64_t> param;
  std::string digits;
  std::string digits_periodic;
  std::string pre;
  std::string period;

  void attach(CLI::App* cmd, bool with_pre_period = true) {
    cmd->add_option("--number", number, "named constant: e, e_inv_n, e2, coth");
    cmd->add_option("--param", param, "parameter n for e_inv_n and coth");
    cmd->add_option("--digits", digits, "explicit finite digits, e.g. 1,1,1");
    cmd->add_option("--digits-periodic", digits_periodic, "purely periodic digits");
    if (with_pre_period) {
      cmd->add_option("--pre", pre, "pre-period digits (with --period)");
      cmd->add_option("--period", period, "period digits");
    }
  }

  DigitStream resolve() const {
    int given = !number.empty() + !digits.empty() + !digits_periodic.empty() +
                (!pre.empty() || !period.empty());
    if (given != 1) {
      throw Error(ErrorKind::kPrecondition,
                  "give exactly one of --number, --digits, --digits-periodic, --pre/--period");
    }
    if (!number.empty()) return named_stream(number, param);
    if (!digits.empty()) return DigitStream::finite(parse_digits(digits));
    if (!digits_periodic.empty()) return DigitStream::purely_periodic(parse_digits(digits_periodic));
    if (period.empty()) throw Error(ErrorKind::kPrecondition, "--pre needs --period");
    return DigitStream::eventually_periodic(pre.empty() ? DigitList{} : parse_digits(pre),
                                            parse_digits(period));
  }
};

std::size_t default_terms(const DigitStream& s, std::optional<std::size_t> terms,
                          std::size_t fallback) {
  if (terms) return *terms;
  if (auto n = s.size()) return *n;
  return fallback;
}

SymbolWord run_engine(const DigitStream& s, std::size_t n, const std::string& engine) {
  if (engine == "oracle") return jacobi_sequence_oracle(s, n);
  if (engine == "fast") return jacobi_sequence_fast(s, n, default_transducer());
  if (engine == "both") {
    SymbolWord a = jacobi_sequence_oracle(s, n);
    SymbolWord b = jacobi_sequence_fast(s, n, default_transducer());
    if (a != b) {
      throw Error(ErrorKind::kEngineMismatch, "oracle " + to_string(a) + " vs fast " + to_string(b));
    }
    return a;
  }
  throw Error(ErrorKind::kPrecondition, "unknown engine '" + engine + "'");
}

json descriptor_json(const DigitStream& s) {
  PeriodDescriptor d = detect_period(s, default_transducer());
  std::optional<ClassStructure> cs = s.class_structure();
  DigitList digits(cs->period.begin(), cs->period.end());
  return to_json(d, find_certificate(digits));
}

json digits_json(const DigitStream& s, std::size_t terms) {
  if (s.kind() == DigitStream::Kind::kEventuallyPeriodic) {
    return format_periodic_digits(s.pre_period(), s.period());
  }
  return format_digits(s.prefix(terms));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobi sequences of continued fraction convergents", "jseq"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  NumberSpec expand_spec;
  std::optional<std::size_t> expand_terms;
  bool expand_json = false;
  auto* expand = app.add_subcommand("expand", "print partial quotients and their 4-representative");
  expand_spec.attach(expand);
  expand->add_option("--terms", expand_terms, "number of digits");
  expand->add_flag("--json", expand_json);

  NumberSpec jacobi_spec;
  std::optional<std::size_t> jacobi_terms;
  std::string engine = "fast";
  bool jacobi_json = false;
  auto* jacobi = app.add_subcommand("jacobi", "print the Jacobi sequence");
  jacobi_spec.attach(jacobi);
  jacobi->add_option("--terms", jacobi_terms, "number of symbols");
  jacobi->add_option("--engine", engine, "oracle, fast or both")
      ->check(CLI::IsMember({"oracle", "fast", "both"}));
  jacobi->add_flag("--json", jacobi_json);

  NumberSpec period_spec;
  auto* period = app.add_subcommand("period", "detect the minimal Jacobi period");
  period_spec.attach(period);

  int theorem = 0;
  std::string gaps_text;
  std::optional<std::size_t> construct_L;
  std::size_t construct_terms = 48;
  auto* construct = app.add_subcommand("construct", "build streams with prescribed Jacobi sequences");
  construct->add_option("--theorem", theorem, "3 (all +1), 7 (-1 at the gaps) or 8 (period +...+*)")->required()->check(CLI::IsMember({3, 7, 8}));
  construct->add_option("--gaps", gaps_text, "\"6,6,6\" or \"start=6,delta=2\"");
  construct->add_option("--L", construct_L, "period length");
  construct->add_option("--terms", construct_terms, "length of the sequence preview");

  std::size_t max_len = 12;
  std::string scan_symbols;
  auto* scan = app.add_subcommand("scan", "search for the patterns -++- and +--+");
  scan->add_option("--max-len", max_len, "scan every digit word up to this length");
  scan->add_option("--symbols", scan_symbols, "scan a literal symbol word instead");

  std::string verify_period;
  std::size_t verify_L = 0;
  auto* verify = app.add_subcommand("verify", "check the periodicity certificate for L");
  verify->add_option("--period", verify_period, "period digits")->required();
  verify->add_option("--L", verify_L, "even multiple of the period length")->required();

  std::size_t probe_depth = 8;
  auto* transducer = app.add_subcommand("transducer", "export the transition table as JSON");
  transducer->add_option("--probe-depth", probe_depth, "exhaustive verification depth");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "jseq: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buf;
  try {
    if (*expand) {
      DigitStream s = expand_spec.resolve();
      std::size_t n = default_terms(s, expand_terms, 10);
      DigitList digits = s.prefix(n);
      DigitList rep = four_representative(s, n);
      if (expand_json) {
        buf << json{{"digits", format_digits(digits)}, {"four_representative", format_digits(rep)}}.dump()
            << "\n";
      } else {
        buf << format_digits(digits) << "\n" << format_digits(rep) << "\n";
      }
    } else if (*jacobi) {
      DigitStream s = jacobi_spec.resolve();
      std::size_t n = default_terms(s, jacobi_terms, 24);
      SymbolWord w = run_engine(s, n, engine);
      if (jacobi_json) {
        buf << json{{"sequence", to_string(w)}, {"engine", engine}, {"terms", n}}.dump() << "\n";
      } else {
        buf << to_string(w) << "\n";
      }
    } else if (*period) {
      DigitStream s = period_spec.resolve();
      buf << descriptor_json(s).dump() << "\n";
    } else if (*construct) {
      std::optional<DigitStream> s;
      if (theorem == 8) {
        if (!construct_L) throw Error(ErrorKind::kPrecondition, "theorem 8 needs --L");
        s = theorem8_stream(*construct_L);
      } else if (!gaps_text.empty()) {
        GapSequence gaps = GapSequence::parse(gaps_text);
        s = theorem == 3 ? theorem3_stream(gaps) : theorem7_stream(gaps);
      } else if (theorem == 7 && construct_L) {
        if (*construct_L % 2 != 0) {
          throw Error(ErrorKind::kDomain,
                      "theorem 7 constructs even L only; odd periods need a different "
                      "construction that is not provided (use --theorem 8 for +...+*)");
        }
        s = theorem7_period_stream(*construct_L);
      } else {
        throw Error(ErrorKind::kPrecondition, "give --gaps (or --L with --theorem 7)");
      }
      json j{{"theorem", theorem},
             {"digits", digits_json(*s, construct_terms)},
             {"sequence", to_string(jacobi_sequence_fast(*s, construct_terms, default_transducer()))}};
      if (s->class_structure()) {
        json d = descriptor_json(*s);
        j["pre_period"] = d["pre_period"];
        j["period"] = d["period"];
        j["length"] = d["length"];
      }
      buf << j.dump() << "\n";
    } else if (*scan) {
      if (!scan_symbols.empty()) {
        buf << to_json(scan_forbidden(parse_symbols(scan_symbols))).dump() << "\n";
      } else {
        buf << to_json(scan_all_words(max_len, default_transducer())).dump() << "\n";
      }
    } else if (*verify) {
      Certificate c = verify_certificate(parse_digits(verify_period), verify_L);
      buf << to_json(c).dump() << "\n";
    } else if (*transducer) {
      buf << to_json(build_transducer(probe_depth)).dump() << "\n";
    }
  } catch (const Error& e) {
    err << "jseq: " << e.what() << "\n";
    return is_internal(e.kind()) ? 3 : 2;
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "jseq: cannot open " << out_path << "\n";
      return 2;
    }
    f << buf.str();
  } else {
    out << buf.str();
  }
  return 0;
}

}  // namespace jseq::cli
