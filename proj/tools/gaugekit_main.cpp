// gaugekit: command-line front end.
//
// Results go to stdout as JSON. Exit codes: 0 success / check passed,
// 1 check failed, 2 malformed or invalid input, 3 numerical failure.

#include "gaugekit/characteristics.hpp"
#include "gaugekit/duality.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/io.hpp"
#include "gaugekit/isometry.hpp"
#include "gaugekit/laws.hpp"
#include "gaugekit/orthogonality.hpp"
#include "gaugekit/svg.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace gaugekit;
using io::Json;

namespace {

struct Args {
  std::string body, body2, form = "standard", point, x, y, line_point, line_dir, plane, map;
  std::string csv_out, svg_out, curve, starts_file, suite = "all", out;
  std::vector<std::string> starts, extra_bodies;
  double tol = kDefaultOrthoTol;
  double step = 1e-3, max_time = 100.0, closure_tol = 1e-6;
  double iso_tol = kDefaultIsoTol;
  bool samples = false, with_polar = false, with_dual = false, open_curve = false;
  std::uint64_t seed = 0;
  int size = 600;
};

int g_exit = 0;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Planar polytopes also list their vertices in counter-clockwise order.
Json planar_body_json(const ConvexBody& body) {
  Json j = io::body_to_json(body);
  if (body.dim() == 2 && !body.is_smooth()) {
    Json verts = Json::array();
    for (const auto& v : polygon_vertices(body)) verts.push_back({v(0), v(1)});
    j["vertices_ccw"] = verts;
  }
  return j;
}

ConvexBody load_body(const std::string& path) { return io::body_from_json(io::read_json_file(path)); }

SymplecticForm load_form(const std::string& spec, Eigen::Index dim) {
  auto form = io::form_from_spec(spec, dim);
  require(form.dim() == dim, "form dimension does not match the body");
  return form;
}

PlaneSubspace parse_plane(const std::string& text) {
  const auto sep = text.find(';');
  if (sep == std::string::npos) throw io::FormatError("plane must be given as \"u;v\"");
  return PlaneSubspace(io::parse_vector(text.substr(0, sep)), io::parse_vector(text.substr(sep + 1)));
}

FlowOptions flow_options(const Args& a) {
  require(a.step > 0 && a.max_time > 0 && a.closure_tol > 0, "step, max-time and closure-tol must be positive");
  FlowOptions o;
  o.step = a.step;
  o.max_time = a.max_time;
  o.closure_tol = a.closure_tol;
  return o;
}

Json verdict(bool passed, Json body) {
  body["passed"] = passed;
  if (!passed) g_exit = 1;
  return body;
}

SampledCurve load_curve(const std::string& path, bool closed, Eigen::Index dim) {
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return io::curve_from_json(io::read_json_file(path));
  std::ifstream in(path);
  if (!in) throw io::FormatError("cannot open " + path);
  return io::read_curve_csv(in, closed, dim);
}

std::vector<Vector> load_starts(const Args& a) {
  std::vector<Vector> starts;
  for (const auto& s : a.starts) starts.push_back(io::parse_vector(s));
  if (!a.starts_file.empty()) {
    const Json j = io::read_json_file(a.starts_file);
    const Json& list = j.is_object() ? j.at("starts") : j;
    if (!list.is_array()) throw io::FormatError("starts file: expected an array of points");
    for (const auto& p : list) starts.push_back(io::vector_from_json(p));
  }
  return starts;
}

void cmd_gauge_eval(const Args& a) {
  const Gauge g(load_body(a.body));
  emit({{"gauge", gauge_eval(g, io::parse_vector(a.point))}});
}

void cmd_gauge_distance(const Args& a) {
  const Gauge g(load_body(a.body));
  emit({{"distance", distance(g, io::parse_vector(a.x), io::parse_vector(a.y))}});
}

void cmd_gauge_pointline(const Args& a) {
  const Gauge g(load_body(a.body));
  const auto r = point_line_distance(g, io::parse_vector(a.point),
                                     Line(io::parse_vector(a.line_point), io::parse_vector(a.line_dir)));
  emit({{"distance", r.dist}, {"foot", io::vector_to_json(r.foot)}, {"t", r.t}});
}

void cmd_polar(const Args& a) {
  const auto k = load_body(a.body);
  Json j = planar_body_json(polar_body(k));
  j["metadata"] = {{"operation", "polar"}, {"source", a.body}, {"coordinates", "covector"}};
  emit(j);
}

void cmd_dual_body(const Args& a) {
  const auto k = load_body(a.body);
  const auto r = dual_body_with_provenance(k, load_form(a.form, k.dim()), a.body, a.form);
  Json j = planar_body_json(r.body);
  j["metadata"] = {{"operation", "dual"}, {"source", r.source_id}, {"form", r.form_id}};
  emit(j);
}

void cmd_dual_gauge(const Args& a) {
  const auto k = load_body(a.body);
  emit({{"dual_gauge", dual_gauge_eval(k, load_form(a.form, k.dim()), io::parse_vector(a.point))}});
}

void cmd_ortho(const Args& a) {
  require(a.tol >= 0, "tol must be nonnegative");
  const Gauge g(load_body(a.body));
  const auto r = is_orthogonal(g, io::parse_vector(a.x), io::parse_vector(a.y), a.tol);
  emit(verdict(r.is_orthogonal, {{"is_orthogonal", r.is_orthogonal},
                                 {"t_star", r.t_star},
                                 {"min_value", r.min_value},
                                 {"gauge_x", r.gauge_x},
                                 {"witness", io::vector_to_json(r.witness)}}));
}

void cmd_isometry_check(const Args& a) {
  const auto map = io::map_from_json(io::read_json_file(a.map));
  const auto r = is_gauge_isometry(map, load_body(a.body), load_body(a.body2));
  emit(verdict(r.is_isometry,
               {{"is_isometry", r.is_isometry},
                {"support_error", r.support_error},
                {"diagnostic", r.diagnostic},
                {"tolerance", default_eps()}}));
}

void cmd_isometry_search(const Args& a) {
  const auto r = linear_equivalence_search_2d(load_body(a.body), load_body(a.body2));
  emit(verdict(r.has_value(), {{"found", r.has_value()}, {"map", r ? io::map_to_json(*r) : Json(nullptr)}}));
}

void cmd_char_flow(const Args& a) {
  const auto k = load_body(a.body);
  const auto r = integrate_characteristic(k, load_form(a.form, k.dim()), io::parse_vector(a.point), flow_options(a));
  if (!a.csv_out.empty()) {
    std::ofstream out(a.csv_out);
    if (!out) throw InvalidInput("cannot write " + a.csv_out);
    io::write_curve_csv(out, r.curve);
  }
  emit(io::flow_to_json(r, a.samples));
}

void cmd_char_capacity(const Args& a) {
  const auto k = load_body(a.body);
  const auto r = capacity_estimate(k, load_form(a.form, k.dim()), load_starts(a), flow_options(a), a.iso_tol);
  emit(verdict(r.capacity.has_value(), {{"capacity", r.capacity ? Json(*r.capacity) : Json(nullptr)},
                                        {"min_half_dual_length", r.min_half_dual_length},
                                        {"lengths_agree", r.lengths_agree},
                                        {"closed_count", r.closed_count},
                                        {"flow_count", r.flow_count},
                                        {"heuristic", r.heuristic},
                                        {"areas", r.areas},
                                        {"diagnostics", r.diagnostics}}));
}

void cmd_char_iso(const Args& a) {
  const auto k = load_body(a.body);
  const auto form = load_form(a.form, k.dim());
  const auto curve = load_curve(a.curve, !a.open_curve, k.dim());
  const auto r = isoperimetric_report(k, form, curve, a.iso_tol);
  emit(verdict(r.inequality_holds, {{"area", r.area},
                                    {"dual_length", r.dual_length},
                                    {"ratio", r.ratio},
                                    {"inequality_holds", r.inequality_holds},
                                    {"is_characteristic", r.is_characteristic}}));
}

void cmd_section_body(const Args& a) {
  Json j = planar_body_json(section_body(load_body(a.body), parse_plane(a.plane)));
  j["metadata"] = {{"operation", "section"}, {"source", a.body}, {"plane", a.plane}};
  emit(j);
}

void cmd_section_check(const Args& a) {
  const auto k = load_body(a.body);
  const auto r = section_duality_check(k, load_form(a.form, k.dim()), parse_plane(a.plane));
  emit(verdict(r.hausdorff <= a.tol, {{"hausdorff", r.hausdorff},
                                      {"tolerance", a.tol},
                                      {"lhs", io::body_to_json(r.lhs)},
                                      {"rhs", io::body_to_json(r.rhs)}}));
}

void cmd_section_planar(const Args& a) {
  const auto k = load_body(a.body);
  const auto r = planar_characteristic_check(k, load_form(a.form, k.dim()), parse_plane(a.plane));
  emit(verdict(r.is_characteristic, {{"is_characteristic", r.is_characteristic},
                                     {"support_gap", r.support_gap},
                                     {"out_of_plane_drift", r.out_of_plane_drift},
                                     {"flow_stays_in_plane", r.flow_stays_in_plane},
                                     {"flow_agrees", r.flow_agrees}}));
}

void cmd_laws(const Args& a) {
  const auto report = laws::run_suite(a.suite, a.seed);
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
  const Json j = {{"suite", a.suite}, {"seed", a.seed}, {"checks", checks}, {"exit_code", report.exit_code()}};
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw InvalidInput("cannot write " + a.out);
    out << j.dump(2) << '\n';
  }
  emit(j);
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << c.measured << " tol=" << c.tolerance
              << '\n';
    passed += c.passed;
  }
  std::cerr << passed << "/" << report.checks.size() << " checks passed\n";
  g_exit = report.exit_code();
}

void cmd_render(const Args& a) {
  static const char* palette[] = {"black", "#1f77b4", "#ff7f0e", "#9467bd"};
  std::vector<SvgBody> bodies;
  std::vector<std::string> paths{a.body};
  paths.insert(paths.end(), a.extra_bodies.begin(), a.extra_bodies.end());
  for (std::size_t i = 0; i < paths.size(); ++i) bodies.push_back({load_body(paths[i]), paths[i], palette[i % 4]});
  const ConvexBody k = bodies.front().body;
  require(k.dim() == 2, "render: bodies must be planar");
  SvgOptions opts;
  opts.size_px = a.size;
  if (a.with_polar) bodies.push_back({polar_body(k), "polar (standard inner product)", "red"});
  if (a.with_dual) {
    bodies.push_back({dual_body(k, load_form(a.form, 2)), "symplectic dual", "green"});
    opts.orientation_note = "positive orientation for det is clockwise";
  }
  std::vector<SvgCurve> curves;
  if (!a.curve.empty()) {
    Eigen::Index dim = 2;
    if (!a.plane.empty()) dim = parse_plane(a.plane).dim();
    const auto c = load_curve(a.curve, !a.open_curve, dim);
    SvgCurve sc{{}, a.curve, "#2ca02c"};
    if (dim == 2) {
      for (const auto& p : c.points) sc.points.emplace_back(p(0), p(1));
    } else {
      const auto plane = parse_plane(a.plane);
      const auto form = load_form(a.form, dim);
      for (const auto& p : c.points) sc.points.push_back(plane_coordinates(form, plane, p));
      opts.orientation_note = "curve shown in (u, v) coordinates of the plane";
    }
    curves.push_back(std::move(sc));
  }
  render_svg_file(a.svg_out, bodies, curves, opts);
  emit({{"svg", a.svg_out}, {"bodies", bodies.size()}, {"curves", curves.size()}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauge geometry with symplectic duality"};
  app.require_subcommand(1);
  Args a;

  auto body_opt = [&](CLI::App* c) { c->add_option("--body", a.body, "body JSON file")->required()->check(CLI::ExistingFile); };
  auto form_opt = [&](CLI::App* c) { c->add_option("--form", a.form, "det | standard | standard:N | form JSON file"); };
  auto flow_opts = [&](CLI::App* c) {
    c->add_option("--step", a.step, "RK4 step size");
    c->add_option("--max-time", a.max_time, "integration horizon");
    c->add_option("--closure-tol", a.closure_tol, "closure distance");
  };
  std::vector<std::pair<CLI::App*, void (*)(const Args&)>> handlers;

  auto* gauge = app.add_subcommand("gauge", "gauge evaluation")->require_subcommand(1);
  auto* ge = gauge->add_subcommand("eval", "gauge at a point");
  body_opt(ge);
  ge->add_option("--point", a.point)->required();
  handlers.emplace_back(ge, cmd_gauge_eval);
  auto* gd = gauge->add_subcommand("distance", "d(x, y) = gauge(y - x)");
  body_opt(gd);
  gd->add_option("--x", a.x)->required();
  gd->add_option("--y", a.y)->required();
  handlers.emplace_back(gd, cmd_gauge_distance);
  auto* gp = gauge->add_subcommand("pointline", "distance from a point to a line");
  body_opt(gp);
  gp->add_option("--point", a.point)->required();
  gp->add_option("--line-point", a.line_point)->required();
  gp->add_option("--line-dir", a.line_dir)->required();
  handlers.emplace_back(gp, cmd_gauge_pointline);

  auto* polar = app.add_subcommand("polar", "polar body");
  body_opt(polar);
  handlers.emplace_back(polar, cmd_polar);

  auto* dual = app.add_subcommand("dual", "symplectic dual")->require_subcommand(1);
  auto* db = dual->add_subcommand("body", "dual body");
  body_opt(db);
  form_opt(db);
  handlers.emplace_back(db, cmd_dual_body);
  auto* dg = dual->add_subcommand("gauge", "dual gauge at a point");
  body_opt(dg);
  form_opt(dg);
  dg->add_option("--point", a.point)->required();
  handlers.emplace_back(dg, cmd_dual_gauge);

  auto* ortho = app.add_subcommand("ortho", "orthogonality")->require_subcommand(1);
  auto* oc = ortho->add_subcommand("check", "is x orthogonal to y");
  body_opt(oc);
  oc->add_option("--x", a.x)->required();
  oc->add_option("--y", a.y)->required();
  oc->add_option("--tol", a.tol, "relative tolerance");
  handlers.emplace_back(oc, cmd_ortho);

  auto* iso = app.add_subcommand("isometry", "gauge isometries")->require_subcommand(1);
  auto* ic = iso->add_subcommand("check", "verify an affine map");
  ic->add_option("--map", a.map)->required()->check(CLI::ExistingFile);
  ic->add_option("--body1", a.body)->required()->check(CLI::ExistingFile);
  ic->add_option("--body2", a.body2)->required()->check(CLI::ExistingFile);
  handlers.emplace_back(ic, cmd_isometry_check);
  auto* is = iso->add_subcommand("search", "linear equivalence of two polygons");
  is->add_option("--body1", a.body)->required()->check(CLI::ExistingFile);
  is->add_option("--body2", a.body2)->required()->check(CLI::ExistingFile);
  handlers.emplace_back(is, cmd_isometry_search);

  auto* ch = app.add_subcommand("char", "characteristics")->require_subcommand(1);
  auto* cf = ch->add_subcommand("flow", "integrate a characteristic");
  body_opt(cf);
  form_opt(cf);
  flow_opts(cf);
  cf->add_option("--start", a.point)->required();
  cf->add_option("--csv", a.csv_out, "write samples as CSV");
  cf->add_flag("--samples", a.samples, "include samples in the JSON output");
  handlers.emplace_back(cf, cmd_char_flow);
  auto* cc = ch->add_subcommand("capacity", "minimal action over closed characteristics");
  body_opt(cc);
  form_opt(cc);
  flow_opts(cc);
  cc->add_option("--start", a.starts, "extra start point (repeatable)");
  cc->add_option("--starts-file", a.starts_file, "JSON array of start points")->check(CLI::ExistingFile);
  cc->add_option("--iso-tol", a.iso_tol);
  handlers.emplace_back(cc, cmd_char_capacity);
  auto* ci = ch->add_subcommand("iso", "isoperimetric ratio of a closed curve");
  body_opt(ci);
  form_opt(ci);
  ci->add_option("--curve", a.curve, "CSV or JSON curve")->required()->check(CLI::ExistingFile);
  ci->add_option("--iso-tol", a.iso_tol);
  handlers.emplace_back(ci, cmd_char_iso);

  auto* sec = app.add_subcommand("section", "symplectic plane sections")->require_subcommand(1);
  auto* sb = sec->add_subcommand("body", "section of a body");
  body_opt(sb);
  sb->add_option("--plane", a.plane, "\"u;v\"")->required();
  handlers.emplace_back(sb, cmd_section_body);
  auto* sc = sec->add_subcommand("check", "dual of a section vs projection of the dual");
  body_opt(sc);
  form_opt(sc);
  sc->add_option("--plane", a.plane, "\"u;v\"")->required();
  sc->add_option("--tol", a.tol, "Hausdorff tolerance");
  handlers.emplace_back(sc, cmd_section_check);
  auto* sp = sec->add_subcommand("planar", "is the plane section a characteristic");
  body_opt(sp);
  form_opt(sp);
  sp->add_option("--plane", a.plane, "\"u;v\"")->required();
  handlers.emplace_back(sp, cmd_section_planar);

  auto* laws_cmd = app.add_subcommand("laws", "property suites")->require_subcommand(1);
  auto* lr = laws_cmd->add_subcommand("run", "run a suite");
  std::vector<std::string> suites = laws::suite_names();
  suites.push_back("all");
  lr->add_option("--suite", a.suite)->check(CLI::IsMember(suites));
  lr->add_option("--seed", a.seed);
  lr->add_option("--out", a.out, "also write the JSON report here");
  handlers.emplace_back(lr, cmd_laws);

  auto* render = app.add_subcommand("render", "SVG figure of planar bodies");
  body_opt(render);
  form_opt(render);
  render->add_option("--also", a.extra_bodies, "additional body files")->check(CLI::ExistingFile);
  render->add_flag("--with-polar", a.with_polar);
  render->add_flag("--with-dual", a.with_dual);
  render->add_option("--curve", a.curve, "CSV or JSON curve to overlay")->check(CLI::ExistingFile);
  render->add_option("--plane", a.plane, "\"u;v\" plane for projecting a 4-D curve");
  render->add_flag("--open", a.open_curve, "the overlay curve is not closed");
  render->add_option("--size", a.size)->check(CLI::Range(100, 4000));
  render->add_option("--out", a.svg_out)->required();
  handlers.emplace_back(render, cmd_render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    for (const auto& [cmd, fn] : handlers)
      if (cmd->parsed()) fn(a);
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const io::FormatError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  }
  return g_exit;
}
