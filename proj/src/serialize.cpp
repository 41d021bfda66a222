#include "jseq/serialize.hpp"

namespace jseq {

using nlohmann::json;

json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(decimal(v));
}

json to_json(const QuadraticSurd& x) {
  return json{{"P", to_json(x.p())}, {"D", to_json(x.d())}, {"Q", to_json(x.q())},
              {"text", x.to_string()}};
}

json to_json(const ResidueState& s) {
  return json{{"s_mod4", s.s_mod4},
              {"t_mod4", s.t_mod4},
              {"s_prev_mod4", s.s_prev_mod4},
              {"t_prev_mod4", s.t_prev_mod4},
              {"k_parity", s.k_parity},
              {"j_st", std::string(1, to_char(s.j_st))},
              {"j_ts", std::string(1, to_char(s.j_ts))}};
}

json to_json(const TransducerTable& table) {
  json initial = json::array();
  for (unsigned c = 1; c <= 4; ++c) {
    initial.push_back({{"digit_class", c}, {"state", table.initial(c)}});
  }
  json states = json::array();
  json transitions = json::array();
  for (StateId id = 0; id < table.size(); ++id) {
    json st = to_json(table.state(id));
    st["id"] = id;
    st["witness"] = format_digits(table.witness(id));
    states.push_back(std::move(st));
    for (unsigned c = 1; c <= 4; ++c) {
      transitions.push_back({{"state", id}, {"digit_class", c}, {"next_state", table.next(id, c)}});
    }
  }
  return json{{"states", std::move(states)},
              {"initial", std::move(initial)},
              {"transitions", std::move(transitions)},
              {"consistency_checks", table.consistency_checks()}};
}

json to_json(const Certificate& c) {
  json matrix = json::array();
  json mod4 = json::array();
  for (int i = 0; i < 2; ++i) {
    matrix.push_back({to_json(c.matrix[i][0]), to_json(c.matrix[i][1])});
    mod4.push_back({c.matrix_mod4[i][0], c.matrix_mod4[i][1]});
  }
  return json{{"L", c.L},
              {"ok", c.ok},
              {"matrix", std::move(matrix)},
              {"matrix_mod4", std::move(mod4)},
              {"identity_mod4", c.identity_mod4},
              {"jacobi_ts", std::string(1, to_char(c.jacobi_ts))}};
}

json to_json(const PeriodDescriptor& d, const std::optional<Certificate>& certificate) {
  json out{{"pre_period", to_string(d.pre_period)},
           {"period", to_string(d.period)},
           {"length", d.period.size()},
           {"pure", d.pure},
           {"minimal", d.minimal},
           {"cycle_length", d.cycle_length},
           {"digit_period", d.digit_period}};
  if (d.within_divisor_bound) out["within_divisor_bound"] = *d.within_divisor_bound;
  out["certificate"] = certificate ? to_json(*certificate) : json(nullptr);
  return out;
}

json to_json(const std::vector<ForbiddenHit>& hits) {
  json out = json::array();
  for (const ForbiddenHit& h : hits) {
    out.push_back({{"position", h.position}, {"pattern", h.pattern == 1 ? "-++-" : "+--+"}});
  }
  return out;
}

json to_json(const ScanReport& report) {
  json words = json::array();
  for (const DigitList& w : report.hit_words) words.push_back(format_digits(w));
  return json{{"max_len", report.max_len},
              {"words_checked", report.words_checked},
              {"hits", report.hits},
              {"near_misses", report.near_misses},
              {"hit_words", std::move(words)}};
}

std::string format_periodic_digits(const DigitList& pre, const DigitList& period) {
  std::string out = format_digits(pre);
  if (!out.empty()) out += ',';
  return out + "{" + format_digits(period) + "}";
}

}  // namespace jseq
