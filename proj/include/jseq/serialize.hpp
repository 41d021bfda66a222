#pragma once

// JSON forms of the library's values. Integers that fit in 64 bits are JSON
// numbers; larger ones are decimal strings.

#include <json.hpp>

#include "jseq/bigint.hpp"
#include "jseq/constructions.hpp"
#include "jseq/periodicity.hpp"
#include "jseq/sequence.hpp"
#include "jseq/surd.hpp"

namespace jseq {

nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(const QuadraticSurd& x);
nlohmann::json to_json(const ResidueState& s);
nlohmann::json to_json(const TransducerTable& table);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const PeriodDescriptor& d,
                       const std::optional<Certificate>& certificate);
nlohmann::json to_json(const std::vector<ForbiddenHit>& hits);
nlohmann::json to_json(const ScanReport& report);

/// Digits of an eventually periodic stream as "1,1,{4,2}".
std::string format_periodic_digits(const DigitList& pre, const DigitList& period);

}  // namespace jseq
