#pragma once

#include <json.hpp>

#include "rmac/abelian_group.hpp"
#include "rmac/cell_complex.hpp"
#include "rmac/integer.hpp"
#include "rmac/modrep.hpp"
#include "rmac/polygon.hpp"
#include "rmac/simplicial.hpp"
#include "rmac/spectral.hpp"

namespace rmac {

using Json = nlohmann::ordered_json;

// Numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const FGAbelianGroup& g);
FGAbelianGroup group_from_json(const Json& j);

Json to_json(const SimplicialComplex& k);
// Rejects duplicate faces, unsorted faces and labels outside 1..vertices.
SimplicialComplex complex_from_json(const Json& j);

// Labels per dimension and boundary matrices as [row, col, value] triplets.
Json dump_json(const CellComplex& c);

Json to_json(const E2Page& page);
E2Page e2_page_from_json(const Json& j);

Json to_json(const GenusReport& r);
Json to_json(const CyclicHomology& h);
Json to_json(const H1Decomposition& dec);

}  // namespace rmac
