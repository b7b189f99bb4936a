#pragma once

#include "json.hpp"

#include "cacodes/codes.hpp"
#include "cacodes/matrix.hpp"
#include "cacodes/netsim.hpp"
#include "cacodes/subspace.hpp"

namespace cacodes::io {

using Json = nlohmann::ordered_json;

/// Prime-field elements are plain integers; extension-field elements are
/// arrays of m coordinates over F_p.
Json element_to_json(const Field& field, Elem a);
Elem element_from_json(const Field& field, const Json& j);

/// {"rows": r, "cols": c, "q": "p^m", "entries": [[...], ...]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Basis rows of a subspace.
Json rows_to_json(const Subspace& s);

/// {"q": "p^m", "n": n, "codewords": [[basis rows], ...]} in canonical order.
Json code_to_json(const GrassmannianCode& code);
/// Accepts a bare code object or a document holding one under "code".
/// Throws InvalidCodeFile.
GrassmannianCode code_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Json params_to_json(const CodeParams& p);
Json profile_to_json(const GcdProfile& p);
Json stats_to_json(const SimulationStats& s);

}  // namespace cacodes::io
