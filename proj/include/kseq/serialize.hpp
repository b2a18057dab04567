#pragma once

// JSON encodings shared by the CLI and the golden tests.
//
//   polynomial  {"terms":[{"exp":[e1,...,ek],"coef":"<decimal>"}, ...]}   (grlex order)
//   scaled      polynomial fields plus "denom_exp": d
//   matrix      {"k":dim,"denom_exp":D,"rows":[[polynomial,...],...]}  entries are
//               numerators over the common denominator t_k^D

#include "kseq/binet.hpp"
#include "kseq/identities.hpp"
#include "kseq/matrix.hpp"
#include "kseq/numseq.hpp"
#include "kseq/poly.hpp"

#include <json.hpp>

namespace kseq {

nlohmann::ordered_json to_json(const Poly& p);
nlohmann::ordered_json to_json(const ScaledPoly& p);
nlohmann::ordered_json to_json(const PolyMatrix& m);
nlohmann::ordered_json to_json(const IntMatrix& m);
nlohmann::ordered_json to_json(const BinetReport& report);
nlohmann::ordered_json to_json(const IdentityReport& report);

// Throw Error("format") on malformed input.
Poly poly_from_json(const nlohmann::ordered_json& j, std::size_t arity);
ScaledPoly scaled_from_json(const nlohmann::ordered_json& j, std::size_t arity);
PolyMatrix matrix_from_json(const nlohmann::ordered_json& j);

} // namespace kseq
