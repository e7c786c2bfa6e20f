// JSON serialization for the CLI surfaces. Rationals are rendered as "a/b"
// strings, complex numbers as [re, im] pairs; documents carry
// "schema_version": 1 (see schemas/ for the field-by-field descriptions).

#pragma once

#include <string>

#include "json.hpp"

#include "dwf/cd.hpp"
#include "dwf/gf.hpp"
#include "dwf/mub.hpp"
#include "dwf/phasespace.hpp"
#include "dwf/polytope.hpp"
#include "dwf/wigner.hpp"

namespace dwf {

using Json = nlohmann::json;

Json field_to_json(const Field& f);

Json striations_to_json(const StriationSet& s, const PropertyReport& rep);

Json mub_to_json(const MubSet& m, bool include_matrices);

// d x d array of [re, im] pairs.
CMatrix density_from_json(const Json& j);
Json density_to_json(const CMatrix& m);

Json pmatrix_to_json(const PMatrix& p);
// Accepts numeric entries (float table) or "a/b" strings (exact table).
PMatrix pmatrix_from_json(const Json& j);

Json wigner_table_to_json(const WignerTable& w);

Json hpolytope_to_json(const HPolytope& h);
HPolytope hpolytope_from_json(const Json& j);
Json vpolytope_to_json(const VPolytope& v);
VPolytope vpolytope_from_json(const Json& j);

Json conjecture_report_to_json(const ConjectureReport& rep);
Json membership_to_json(const MembershipCertificate& cert);
Json classes_to_json(const std::vector<DefinitionClass>& classes);
Json definition_to_json(const WignerDefinition& defn);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace dwf
