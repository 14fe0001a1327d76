#pragma once

#include <json.hpp>

#include "kmk/ansatz.hpp"
#include "kmk/fine_structure.hpp"
#include "kmk/poly.hpp"
#include "kmk/ratfunc.hpp"
#include "kmk/rooks.hpp"

namespace kmk {

using Json = nlohmann::ordered_json;

// Rationals are strings "p/q" (or "p"); polynomials are coefficient arrays
// low-to-high.
Json to_json(const BigRational& r);
Json to_json(const PolyC& p);
// {"num": [...], "den": [...]}
Json to_json(const RationalFnC& f);
// {"g": int, "theta": {"k": "p/q", ...}}
Json to_json(const FineStructureForm& form);
// [{"num": [...], "a": int, "b": int}, ...]
Json to_json(const AnsatzSum& s);
// {"k": int, "counts": {"g": int, ...}}
Json to_json(const MomentPolynomial& m);

// Inverses; throw std::invalid_argument on schema violations.
PolyC poly_from_json(const Json& j);
RationalFnC rational_fn_from_json(const Json& j);
FineStructureForm fine_structure_from_json(const Json& j);
AnsatzSum ansatz_from_json(const Json& j);
MomentPolynomial moment_polynomial_from_json(const Json& j);

}  // namespace kmk
