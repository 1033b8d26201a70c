#pragma once

#include <string>

#include <json.hpp>

#include "cycoh/cyclic_cohomology.hpp"
#include "cycoh/equichern.hpp"
#include "cycoh/intlinalg.hpp"
#include "cycoh/spaces.hpp"
#include "cycoh/surface.hpp"

namespace cycoh {

using Json = nlohmann::json;

/// Parse + schema-validate helpers; every failure surfaces as SchemaError
/// with a line describing the offending field.
Json parse_json_text(const std::string& text);

/// Matrix entries serialize as JSON numbers when they fit in 64 bits and as
/// decimal strings beyond that; both forms are accepted on input.
Json matrix_to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const Json& j, const std::string& where);

Json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j, const std::string& where);

/// {"m": ..., "action": [[...]]}; validates T^m = I.
Json gmodule_to_json(const GModule& a);
GModule gmodule_from_json(const Json& j);

/// {"0": "Z", "2": "Z/3", ...}: nontrivial entries only. Parsed tables are
/// complete descriptions: max_degree = largest key, zero tail.
Json graded_to_json(const GradedGroup& table);
GradedGroup graded_from_json(const Json& j, const std::string& where);

/// {"source": ..., "target": ..., "matrix": [[...]]}, groups as strings.
Json abmap_to_json(const AbMap& f);
AbMap abmap_from_json(const Json& j, const std::string& where);

Json surface_to_json(const SurfaceWithAction& s);
SurfaceWithAction surface_from_json(const Json& j);

Json snf_to_json(const SnfCertificate& cert);
Json verdict_to_json(const Verdict& v);
Json double_cover_to_json(const DoubleCoverReport& r);
Json exactness_to_json(const ExactnessReport& r);

/// Canonical serialization: two-space indent, keys sorted, trailing newline.
/// Identical values always produce identical bytes.
std::string canonical_dump(const Json& j);

}  // namespace cycoh
