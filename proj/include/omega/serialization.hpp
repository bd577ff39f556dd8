#pragma once

// JSON forms. Rationals are always written as "num/den" strings.
//
//   {"kind":"omega","zero":false,"top":2,"coeffs":{"2":"3/1","-4":"-5/128"},"floor":-6}
//   {"kind":"aleph","coeffs":["3/1","2/1"]}
//   {"kind":"coeff_table","direction":"d_to_D","cutoff":4,"rows":[["1/1",...],...]}
//
// An omega value with finite support has "floor":"exact". "top" is null for
// zero and for values with no known nonzero coefficient.

#include <nlohmann/json.hpp>

#include "omega/aleph.hpp"
#include "omega/lift_calculus.hpp"
#include "omega/omega_number.hpp"

namespace omega {

using Json = nlohmann::ordered_json;

Json to_json(const OmegaNumber& x);
Json to_json(const AlephNumber& l);
Json to_json(const CoeffTable& table);

/// The from_json functions throw ParseError on malformed documents and
/// MathError when the decoded value violates its type's invariants.
OmegaNumber omega_from_json(const Json& j);
AlephNumber aleph_from_json(const Json& j);
CoeffTable coeff_table_from_json(const Json& j);

}  // namespace omega
