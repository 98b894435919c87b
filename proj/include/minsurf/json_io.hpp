#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "minsurf/curves.hpp"

namespace minsurf {

/// Input that does not match the data schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// [re, im]; each part is a JSON number (FLOAT), or a string "p/q" or "p/q+r/s*sqrt(m)" (EXACT).
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// Coefficient arrays in ascending degree.
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

/// {"num": [...], "den": [...]}; a bare array is read as a polynomial.
Json rational_to_json(const RationalFunction& f);
RationalFunction rational_from_json(const Json& j);

/// "inf" or a scalar.
Json point_to_json(const SpherePoint& p);
SpherePoint point_from_json(const Json& j);

/// {"kind":"r3","h":...,"g":...,"punctures":[...],"genus":0} and the r4 / rn variants.
Json data_to_json(const WData& d);
WData data_from_json(const Json& j);

/// {"components": [poly, ...]}
Json curve_to_json(const ProjectiveCurve& c);
ProjectiveCurve curve_from_json(const Json& j);

/// {"hyperplanes": [[a0, ...], ...]}
Json hyperplanes_to_json(const std::vector<Hyperplane>& H);
std::vector<Hyperplane> hyperplanes_from_json(const Json& j);

/// Parses text; syntax errors become SchemaError.
Json parse_json_text(const std::string& text);

}  // namespace minsurf
