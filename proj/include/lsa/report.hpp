#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "lsa/catalog.hpp"
#include "lsa/derivations.hpp"
#include "lsa/invariants.hpp"
#include "lsa/superalgebra.hpp"

// JSON views of the computed reports. Keys keep insertion order so output is
// byte-stable; SuperDim is [even, odd] and rationals are "p/q" strings.
namespace lsa::report {

using Json = nlohmann::ordered_json;

Json to_json(SuperDim d);
Json to_json(const Matrix& m);
Json to_json(const LieSuperalgebra& L, const ValidationReport& r);
Json to_json(const InvariantReport& r);
Json to_json(const SchurBoundReport& r);
Json to_json(const IdStarBoundReport& r);
Json to_json(const PropositionAudit& r);
Json to_json(const DerivationSpace& d);
Json to_json(const catalog::Table1Report& r);
Json to_json(const catalog::ClassificationReport& r);
Json to_json(const std::vector<ClassifiedInstance>& instances);

/// Combined output of the `bounds` command.
Json bounds_json(const LieSuperalgebra& L, const SchurBoundReport& schur, const IdStarBoundReport& idstar,
                 const PropositionAudit& audit);

std::string emit(const Json& j);

}  // namespace lsa::report
