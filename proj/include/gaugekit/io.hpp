#pragma once

// JSON and CSV encodings of bodies, forms, maps and curves.
//
//   body:  {"type":"vpolytope","vertices":[[..],..]} | {"type":"hpolytope","normals":[[..],..]}
//          | {"type":"ellipsoid","radii":[..]} | {"type":"quadratic","Q":[[..],..]}
//          (optionally wrapped as {"body": {...}})
//   form:  {"standard": n} | {"matrix": [[..],..]} (optionally wrapped as {"form": {...}})
//   map:   {"linear": [[..],..], "translation": [..]}
//   curve CSV: t, x_1..x_d[, dx_1..dx_d]

#include "gaugekit/bodies.hpp"
#include "gaugekit/characteristics.hpp"
#include "gaugekit/curve.hpp"
#include "gaugekit/isometry.hpp"
#include "gaugekit/symplectic.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace gaugekit::io {

using Json = nlohmann::json;

// Malformed JSON/CSV or a document that does not match the schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

Vector vector_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
// "1,0,-2" -> (1, 0, -2)
Vector parse_vector(const std::string& text);

ConvexBody body_from_json(const Json& j);
Json body_to_json(const ConvexBody& body);

SymplecticForm form_from_json(const Json& j);
// "det", "standard", "standard:N", or a path to a JSON file.
SymplecticForm form_from_spec(const std::string& spec, Eigen::Index dim);
Json form_to_json(const SymplecticForm& form);

AffineMap map_from_json(const Json& j);
Json map_to_json(const AffineMap& map);

Json curve_to_json(const SampledCurve& curve);
SampledCurve curve_from_json(const Json& j);
void write_curve_csv(std::ostream& out, const SampledCurve& curve);
// Rows of 1 + dim entries carry points only; 1 + 2*dim entries add tangents.
SampledCurve read_curve_csv(std::istream& in, bool closed, Eigen::Index dim);

Json flow_to_json(const FlowResult& flow, bool include_samples);

}  // namespace gaugekit::io
