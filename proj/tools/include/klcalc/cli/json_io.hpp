#pragma once

#include "json.hpp"

#include "klcalc/affine_pbw.hpp"
#include "klcalc/root_system.hpp"

namespace klcalc::io {

using nlohmann::json;

/// Rationals travel as "p/q" strings.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const Weight& w);
Weight weight_from_json(const json& j);

/// {"algebra", "ambient_dim", "form_scale", "dual_coxeter", "theta", "rho", "simple_roots", "roots"}
json to_json(const RootSystem& rs);
/// {"algebra", "source", "basis": [labels], "brackets": [[i, j, [[k, "c"], ...]], ...], "form": [[i, j, "c"], ...]}
/// Brackets and form entries are listed for i < j (and i <= j for the form) when nonzero.
json to_json(const LieRealization& L);
/// {"level", "weight", "degree", "terms": [{"monomial": [[label, mode], ...], "coeff"}]}
json to_json(const LieRealization& L, const StateVector& v);
/// Throws std::invalid_argument on malformed payloads or unknown labels.
StateVector state_from_json(const LieRealization& L, const json& j);

}  // namespace klcalc::io
