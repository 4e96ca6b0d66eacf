#pragma once

#include <nlohmann/json.hpp>

#include "mfcalc/abelian_group.hpp"
#include "mfcalc/graded_group.hpp"
#include "mfcalc/integer.hpp"
#include "mfcalc/manifold.hpp"
#include "mfcalc/polynomial.hpp"
#include "mfcalc/presentation.hpp"

namespace mfcalc {

using json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json to_json(const Integer& value);
Integer integer_from_json(const json& j);

/// {"rank": r, "torsion": [d1, d2, ...]}
json to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const json& j);

/// {"<degree>": <group>, ...} over the nonzero degrees.
json to_json(const GradedGroup& g);

/// Coefficient list, lowest degree first.
json to_json(const IntPolynomial& p);

/// {"dim": n, "atoms": [{"kind": "SxS", "params": [2, 3], "count": 1}, ...]}.
/// Sig atoms carry "params": [i] and "inner": <expression>.
json to_json(const ManifoldExpr& m);
json to_json(const Atom& a);
/// Inverse of to_json. Sig atoms are re-evaluated through suspend(), and
/// "count" defaults to 1.
ManifoldExpr manifold_from_json(const json& j);

/// {"generators": [...], "relators": ["a1*z*a1^-1*z^-1", ...]}
json to_json(const GroupPresentation& p);

}  // namespace mfcalc
