#include "gaugekit/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace gaugekit::io {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw FormatError("expected an array of numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Json vector_to_json(const Vector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("expected a non-empty array of rows");
  const auto cols = vector_from_json(j[0]).size();
  Matrix m(static_cast<Eigen::Index>(j.size()), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Vector row = vector_from_json(j[i]);
    if (row.size() != cols) throw FormatError("ragged matrix rows");
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) j.push_back(vector_to_json(m.row(i).transpose()));
  return j;
}

Vector parse_vector(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FormatError("cannot parse vector component '" + item + "'");
    }
  }
  if (values.empty()) throw FormatError("empty vector");
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

ConvexBody body_from_json(const Json& doc) {
  const Json& j = doc.contains("body") ? doc.at("body") : doc;
  if (!j.is_object() || !j.contains("type")) throw FormatError("body: missing \"type\"");
  const auto type = j.at("type").get<std::string>();
  try {
    if (type == "vpolytope") return ConvexBody::vpolytope(Matrix(matrix_from_json(j.at("vertices")).transpose()));
    if (type == "hpolytope") {
      const Matrix a = matrix_from_json(j.at("normals"));
      if (j.contains("offsets")) return ConvexBody::hpolytope(a, vector_from_json(j.at("offsets")));
      return ConvexBody::hpolytope(a);
    }
    if (type == "ellipsoid") return ConvexBody::ellipsoid(j.at("radii").get<std::vector<double>>());
    if (type == "quadratic") return ConvexBody::quadratic(matrix_from_json(j.at("Q")));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("body: ") + e.what());
  }
  throw FormatError("body: unknown type \"" + type + "\"");
}

Json body_to_json(const ConvexBody& body) {
  switch (body.kind()) {
    case BodyKind::vpolytope:
      return {{"type", "vpolytope"}, {"vertices", matrix_to_json(body.as_vpolytope().vertices.transpose())}};
    case BodyKind::hpolytope: return {{"type", "hpolytope"}, {"normals", matrix_to_json(body.as_hpolytope().normals)}};
    case BodyKind::smooth: return {{"type", "quadratic"}, {"Q", matrix_to_json(body.as_smooth().q)}};
  }
  return {};
}

SymplecticForm form_from_json(const Json& doc) {
  const Json& j = doc.contains("form") ? doc.at("form") : doc;
  try {
    if (j.contains("standard")) return SymplecticForm::standard(j.at("standard").get<int>());
    if (j.contains("matrix")) return SymplecticForm(matrix_from_json(j.at("matrix")));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("form: ") + e.what());
  }
  throw FormatError("form: expected \"standard\" or \"matrix\"");
}

SymplecticForm form_from_spec(const std::string& spec, Eigen::Index dim) {
  if (spec == "det") {
    require(dim == 2, "form 'det' needs a planar body");
    return SymplecticForm::standard(1);
  }
  if (spec == "standard") return SymplecticForm::standard(static_cast<int>(dim / 2));
  SymplecticForm form = SymplecticForm::standard(1);
  if (spec.rfind("standard:", 0) == 0) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(spec.substr(9), &used);
    } catch (const std::exception&) {
      throw FormatError("form: bad spec '" + spec + "'");
    }
    if (used != spec.size() - 9 || n < 1) throw FormatError("form: bad spec '" + spec + "'");
    form = SymplecticForm::standard(n);
  } else {
    form = form_from_json(read_json_file(spec));
  }
  if (form.dim() != dim)
    throw FormatError("form: dimension " + std::to_string(form.dim()) + " does not match body dimension " +
                      std::to_string(dim));
  return form;
}

Json form_to_json(const SymplecticForm& form) { return {{"matrix", matrix_to_json(form.matrix())}}; }

AffineMap map_from_json(const Json& j) {
  try {
    AffineMap m;
    m.linear = matrix_from_json(j.at("linear"));
    m.translation = j.contains("translation") ? vector_from_json(j.at("translation")) : Vector::Zero(m.linear.rows());
    if (m.linear.rows() != m.linear.cols() || m.translation.size() != m.linear.rows())
      throw FormatError("map: inconsistent dimensions");
    return m;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("map: ") + e.what());
  }
}

Json map_to_json(const AffineMap& map) {
  return {{"linear", matrix_to_json(map.linear)}, {"translation", vector_to_json(map.translation)}};
}

Json curve_to_json(const SampledCurve& curve) {
  Json j = {{"closed", curve.closed}, {"times", curve.times}};
  Json pts = Json::array();
  for (const auto& p : curve.points) pts.push_back(vector_to_json(p));
  j["points"] = std::move(pts);
  if (curve.tangents) {
    Json tan = Json::array();
    for (const auto& v : *curve.tangents) tan.push_back(vector_to_json(v));
    j["tangents"] = std::move(tan);
  }
  return j;
}

SampledCurve curve_from_json(const Json& j) {
  try {
    SampledCurve c;
    c.closed = j.value("closed", false);
    c.times = j.at("times").get<std::vector<double>>();
    for (const auto& p : j.at("points")) c.points.push_back(vector_from_json(p));
    if (j.contains("tangents")) {
      c.tangents.emplace();
      for (const auto& v : j.at("tangents")) c.tangents->push_back(vector_from_json(v));
    }
    c.validate();
    return c;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("curve: ") + e.what());
  }
}

void write_curve_csv(std::ostream& out, const SampledCurve& curve) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out << curve.times[i];
    for (Eigen::Index k = 0; k < curve.points[i].size(); ++k) out << ',' << curve.points[i](k);
    if (curve.tangents)
      for (Eigen::Index k = 0; k < (*curve.tangents)[i].size(); ++k) out << ',' << (*curve.tangents)[i](k);
    out << '\n';
  }
}

SampledCurve read_curve_csv(std::istream& in, bool closed, Eigen::Index dim) {
  SampledCurve c;
  c.closed = closed;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const Vector row = parse_vector(line);
    const auto rest = row.size() - 1;
    if (rest != dim && rest != 2 * dim) throw FormatError("curve csv: row width does not match the dimension");
    const bool with_tangents = rest == 2 * dim;
    if (!c.points.empty() && with_tangents != c.tangents.has_value())
      throw FormatError("curve csv: inconsistent row width");
    c.times.push_back(row(0));
    c.points.push_back(row.segment(1, dim));
    if (with_tangents) {
      if (!c.tangents) c.tangents.emplace();
      c.tangents->push_back(row.segment(1 + dim, dim));
    }
  }
  c.validate();
  return c;
}

Json flow_to_json(const FlowResult& flow, bool include_samples) {
  Json j = {{"closed", flow.closed},
            {"period", flow.period ? Json(*flow.period) : Json(nullptr)},
            {"end_time", flow.end_time},
            {"area", flow.area},
            {"dual_length", flow.dual_length},
            {"max_constraint_drift", flow.max_constraint_drift},
            {"samples", flow.curve.size()}};
  if (include_samples) j["curve"] = curve_to_json(flow.curve);
  return j;
}

}  // namespace gaugekit::io
