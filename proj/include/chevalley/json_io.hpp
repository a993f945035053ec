#pragma once

#include <json.hpp>

#include "chevalley/lie.hpp"
#include "chevalley/matrix.hpp"
#include "chevalley/report.hpp"
#include "chevalley/roots.hpp"
#include "chevalley/tits.hpp"

// JSON encodings. Every scalar is a canonical fraction string ("p/q" or "p").
// Decoders throw ParseError on malformed documents.

namespace chevalley {

using Json = nlohmann::json;

/// {"dim": n, "entries": [["p/q", ...], ...]}, row-major.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"n": n, "coords": ["p/q", ...]} in canonical basis order.
Json lie_element_to_json(const LieElement& x);
LieElement lie_element_from_json(const Json& j);

/// {"n": n, "a": ["p/q", ...]}.
Json section_to_json(const TitsSection& s);
TitsSection section_from_json(const Json& j);

/// {"n": n, "relations": [{"tag", "i", "j", "pass"[, "left", "right"]}], "all_pass": bool}.
/// Failed instances also carry their evaluated sides as matrices.
Json report_to_json(const Report& r);
Report report_from_json(const Json& j);

/// One-line notation as an array of images.
Json permutation_to_json(const Permutation& p);

/// {"permutation": [...], "cycles": "(1 2)", "scales": ["p/q", ...]}.
Json decomposition_to_json(const MonomialDecomposition& d);

} // namespace chevalley
