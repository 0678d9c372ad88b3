#pragma once

// JSON shapes. Every rational is a fraction string ("3/2", "-1"); keys are
// emitted in sorted order, so dump -> parse -> dump is byte-identical.

#include <string>

#include "json.hpp"

#include "rootgeom/counterexamples.hpp"
#include "rootgeom/stability.hpp"

namespace rootgeom {

using Json = nlohmann::json;

Json to_json(const QVec& v);
Json to_json(const RationalMatrix& m);
// {type, rank, ambient_dim, gram, roots, simple_roots, weight_basis}
Json to_json(const RootSystem& system);
// {type, verdict, scope, shells: [{norm, lattice_count, root_count, determining}],
//  witnesses, diophantine_unstable (A_n only)}
Json to_json(const StabilityReport& report);
Json to_json(const ChamberIndexRecord& record);
// {pair: {sub, sup}, alpha, r, image, index_record}
Json to_json(const ViolationCertificate& cert, const ChamberIndexRecord& record);
Json to_json(const SweepResult& sweep, int max_rank);

QVec qvec_from_json(const Json& j);

std::string canonical_dump(const Json& j);

}  // namespace rootgeom
