#pragma once

#include <string>

#include <json.hpp>

#include "quintic/ledger/dataset.hpp"
#include "quintic/lsys/poly.hpp"
#include "quintic/lsys/singular.hpp"
#include "quintic/twisted/models.hpp"

namespace quintic::io {

using Json = nlohmann::ordered_json;

/// Scalars are written as strings ("3", "-1/2"); integers are accepted on input.
exactalg::Scalar scalar_from_json(const exactalg::Field& field, const Json& j);
Json scalar_to_json(const exactalg::Scalar& s);

/// {"field": "fp:11", "degree": 5, "terms": [{"exp": [i, j, k], "coeff": "c"}, ...]}
lsys::HomogeneousPoly poly_from_json(const Json& j);
Json poly_to_json(const lsys::HomogeneousPoly& f);

/// {"field", "points": [[x, y, z]...], "lines": [[a, b, c]...],
///  "conics": [[a, b, c, d, e, f]...], "whole_plane": bool, "type_id": n|null}
projgeom::Config config_from_json(const Json& j);
Json config_to_json(const projgeom::Config& k);

Json singular_set_to_json(const lsys::SingularSet& s);

/// Either {"field", "chain": {"ranks": [...], "boundaries": [matrix...]}} or
/// {"field", "cw": {"vertices": [...], "edges": [{"name", "tail", "head", "monodromy"}],
///   "faces": [{"name", "word": ["b", "-c", ...]}]}}.
/// Optional: "name", "complex_dim", "self_map": [matrix per degree],
/// "mapping_torus": {"map": [matrix per degree], "twist": s}, whose result
/// replaces the complex. Matrices are arrays of rows; shapes come from the ranks.
twisted::Model model_from_json(const Json& j);

/// (p, q, dim) triples, column specs, differentials, expected value.
Json dataset_to_json(const ledger::Dataset& d);
ledger::Dataset dataset_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace quintic::io
