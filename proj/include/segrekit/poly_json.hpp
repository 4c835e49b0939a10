#ifndef SEGREKIT_POLY_JSON_HPP
#define SEGREKIT_POLY_JSON_HPP

#include <json.hpp>

#include "segrekit/polynomial.hpp"

namespace segrekit {

// On-disk polynomial format:
//   {"terms": [{"exps": {"z": 2, "wbar": 1}, "re": "3/4", "im": "0/1"}, ...]}
// Rationals are strings "p/q" with q > 0; zero exponents are omitted; terms
// are emitted in graded-lex order so serialization is deterministic.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace segrekit

#endif
