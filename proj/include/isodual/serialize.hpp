#pragma once

#include <string>

#include <json.hpp>

#include "isodual/carlitz.hpp"
#include "isodual/codes.hpp"
#include "isodual/curves.hpp"
#include "isodual/divisor.hpp"
#include "isodual/field.hpp"
#include "isodual/matrix.hpp"

namespace isodual {

using Json = nlohmann::json;

// All emitters produce objects whose keys serialize in a fixed (alphabetical)
// order and carry no wall-clock data, so identical inputs give byte-identical
// dumps.  Matrices serialize as arrays of code rows; the owning object
// carries the field.

Json field_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

Json matrix_json(const MatGF& m);
MatGF matrix_from_json(const FieldPtr& f, const Json& j);

Json place_json(const Place& p);
Place place_from_json(const Json& j);

Json divisor_json(const Divisor& d);
Divisor divisor_from_json(const Json& j);

Json descriptor_json(const ExtensionDescriptor& e);

Json code_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

Json certificate_json(const IsoDualCertificate& c);
IsoDualCertificate certificate_from_json(const Json& j);

Json distance_json(const DistanceReport& r);
DistanceReport distance_from_json(const Json& j);

Json params_json(const ParamReport& r);

Json curvex_census_json(const CurveXCensus& c);
Json additive_census_json(const AdditiveCensus& c);
Json split_report_json(const SplitReport& r);

Json cyclotomic_json(const CyclotomicParams& p);
Json carlitz_report_json(const CarlitzIdentityReport& r);

/// Compact single-line dump with sorted keys; the canonical byte form all
/// file outputs and content ids use.
std::string canonical_dump(const Json& j);

/// FNV-1a 64-bit hash of the canonical dump, as 16 lowercase hex digits.
std::string content_id(const Json& j);

/// Generator matrix as bare CSV (one row per line, element codes).
std::string generator_csv(const LinearCode& c);

} // namespace isodual
