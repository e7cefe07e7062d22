#pragma once

#include <json.hpp>

#include "liecoh/cohomology/cohomology.hpp"
#include "liecoh/filiform/filiform.hpp"
#include "liecoh/structures/verdicts.hpp"

namespace liecoh {

using Json = nlohmann::ordered_json;

/// Parses text; throws ParseError with the parser's message.
Json parse_json(const std::string& text);

/// Accepts "p/q" strings and JSON integers.
Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);

/// {"dim", "label", "brackets": [{"i", "j", "terms": [{"k", "c"}]}]}, 1-based.
Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

/// {"n", "alpha": {"k,s": "p/q"}}.
Json params_to_json(const FiliformParams& p);
FiliformParams params_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Json matrix_to_json(const Matrix& m);
/// Nonzero entries above the diagonal as [["i,j", "p/q"], ...].
Json form_entries_to_json(const TwoForm& w);

Json cohomology_to_json(const CohomologyResult& r, std::size_t n);
Json series_to_json(const SeriesReport& r);
Json jacobi_to_json(const std::vector<JacobiViolation>& violations);

Json verdict_to_json(const SymplecticVerdict& v);
Json verdict_to_json(const FrobeniusVerdict& v);
Json verdict_to_json(const CnlaVerdict& v);
Json verdict_to_json(const AffineWitness& w);

}  // namespace liecoh
