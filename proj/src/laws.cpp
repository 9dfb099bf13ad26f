#include "gaugekit/laws.hpp"

#include "gaugekit/characteristics.hpp"
#include "gaugekit/directions.hpp"
#include "gaugekit/duality.hpp"
#include "gaugekit/generators.hpp"
#include "gaugekit/isometry.hpp"
#include "gaugekit/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

namespace gaugekit::laws {

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

void RunReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

namespace {

// Records max error against a tolerance.
struct Worst {
  double value = 0.0;
  void add(double v) { value = std::max(value, std::isnan(v) ? std::numeric_limits<double>::infinity() : v); }
};

CheckRecord upper_bound(std::string name, double measured, double tol) {
  return {std::move(name), measured <= tol, measured, tol, ""};
}

CheckRecord count_check(std::string name, int failures, int total) {
  return {std::move(name), failures == 0, static_cast<double>(failures), 0.0,
          std::to_string(total - failures) + "/" + std::to_string(total) + " cases hold"};
}

std::vector<ConvexBody> planar_fixtures(CounterRng& rng, int random_count) {
  std::vector<ConvexBody> bodies{triangle_fixture(), square_fixture(), ConvexBody::euclidean_ball(2)};
  for (int i = 0; i < random_count; ++i) bodies.push_back(random_polygon(rng));
  return bodies;
}

void suite_triangle(RunReport& r, CounterRng&) {
  const double h = std::sqrt(3.0) / 2.0;
  const ConvexBody k = triangle_fixture();
  const auto polar = polygon_vertices(polar_body(k));
  const auto dual = polygon_vertices(dual_body(k, SymplecticForm::standard(1)));
  auto mismatch = [](const std::vector<Eigen::Vector2d>& got, std::vector<Eigen::Vector2d> want) {
    if (got.size() != want.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const auto& g : got) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& w : want) best = std::min(best, (g - w).cwiseAbs().maxCoeff());
      worst = std::max(worst, best);
    }
    return worst;
  };
  r.checks.push_back(upper_bound("triangle/polar_vertices", mismatch(polar, {{0, -1}, {h, 0.5}, {-h, 0.5}}), 1e-12));
  r.checks.push_back(upper_bound("triangle/dual_vertices", mismatch(dual, {{-1, 0}, {0.5, -h}, {0.5, h}}), 1e-12));
}

void suite_bidual(RunReport& r, CounterRng& rng) {
  Worst planar, spatial;
  const auto det = SymplecticForm::standard(1);
  for (int i = 0; i < 30; ++i) {
    const auto k = random_polygon(rng);
    planar.add(support_distance(bidual_body(k, det), k.negated()));
  }
  for (int i = 0; i < 10; ++i) {
    const auto k = random_hpolytope(rng, 4, 10, 16);
    const auto w = random_form(rng, 4);
    spatial.add(support_distance(bidual_body(k, w), k.negated()));
  }
  r.checks.push_back(upper_bound("bidual/planar_polygons", planar.value, 1e-9));
  r.checks.push_back(upper_bound("bidual/hpolytopes_4d", spatial.value, 1e-9));
}

void suite_dual_gauge(RunReport& r, CounterRng& rng) {
  const auto det = SymplecticForm::standard(1);
  Worst planar;
  for (const auto& k : planar_fixtures(rng, 4)) {
    const auto dual = dual_body(k, det);
    for (int i = 0; i < 100; ++i) {
      const Vector x = random_point(rng, 2);
      planar.add(std::abs(dual_gauge_eval(k, det, x) - dual.gauge(x)));
    }
  }
  Worst spatial;
  const auto w0 = SymplecticForm::standard(2);
  const auto e12 = ConvexBody::ellipsoid({1.0, 2.0});
  const auto dual = dual_body(e12, w0);
  for (int i = 0; i < 100; ++i) {
    const Vector x = random_point(rng, 4);
    spatial.add(std::abs(dual_gauge_eval(e12, w0, x) - dual.gauge(x)));
  }
  r.checks.push_back(upper_bound("dual-gauge/planar", planar.value, 1e-9));
  r.checks.push_back(upper_bound("dual-gauge/ellipsoid_4d", spatial.value, 1e-9));
}

void suite_inequality(RunReport& r, CounterRng& rng) {
  const auto det = SymplecticForm::standard(1);
  Worst violation, equality;
  for (const auto& k : planar_fixtures(rng, 3)) {
    for (int i = 0; i < 200; ++i) {
      const Vector x = random_point(rng, 2);
      const Vector y = random_point(rng, 2);
      violation.add(det(x, y) - dual_gauge_eval(k, det, x) * k.gauge(y));
      const Vector y0 = 1.7 * dual_attainment_point(k, det, x);
      equality.add(std::abs(det(x, y0) - dual_gauge_eval(k, det, x) * k.gauge(y0)));
    }
  }
  r.checks.push_back(upper_bound("inequality/violation", violation.value, 1e-10));
  r.checks.push_back(upper_bound("inequality/equality_on_attainment", equality.value, 1e-8));
}

void suite_reversal(RunReport& r, CounterRng& rng) {
  const auto det = SymplecticForm::standard(1);
  int fail_thm = 0, fail_cor = 0, total = 0;
  for (const auto& k : planar_fixtures(rng, 3)) {
    const Gauge g(k);
    const ConvexBody dual = dual_body(k, det);
    const Gauge gd(dual);
    for (int i = 0; i < 20; ++i, ++total) {
      const Vector y = rng.unit_vector(2);
      // x maximizes w(y, .) on K^w: x ⊣_w y and w(y, x) > 0.
      const Vector x = dual.support(identify_inverse(det, y)).point;
      if (!is_orthogonal(g, -y, x).is_orthogonal) ++fail_thm;
      // x' maximizes w(y, .) on K: x' ⊣ y, w(y, x') > 0.
      const Vector xp = dual_attainment_point(k, det, y);
      if (!is_orthogonal(gd, y, xp).is_orthogonal) ++fail_cor;
    }
  }
  r.checks.push_back(count_check("reversal/planar_theorem", fail_thm, total));
  r.checks.push_back(count_check("reversal/planar_corollary", fail_cor, total));

  int fail4 = 0, total4 = 0;
  const auto w0 = SymplecticForm::standard(2);
  std::vector<ConvexBody> bodies{ConvexBody::ellipsoid({1.0, 2.0})};
  for (int i = 0; i < 3; ++i) bodies.push_back(random_hpolytope(rng, 4, 10, 14));
  for (const auto& k : bodies) {
    const Gauge g(k);
    const ConvexBody dual = dual_body(k, w0);
    const Gauge gd(dual);
    for (int i = 0; i < 5; ++i, ++total4) {
      const Vector x = rng.unit_vector(4);
      const Vector y = dual.support(identify_inverse(w0, x)).point;
      if (!is_orthogonal_to_hyperplane(g, -x, complement_hyperplane(w0, y))) ++fail4;
      const Vector yy = rng.unit_vector(4);
      const Vector xx = dual_attainment_point(k, w0, yy);
      if (!is_orthogonal_to_hyperplane(gd, yy, complement_hyperplane(w0, xx))) ++fail4;
    }
  }
  r.checks.push_back(count_check("reversal/spatial_theorem_and_corollary", fail4, 2 * total4));
}

void suite_rescaling(RunReport& r, CounterRng& rng) {
  const auto det = SymplecticForm::standard(1);
  Worst body_err, gauge_err;
  for (int i = 0; i < 10; ++i) {
    const auto k = random_polygon(rng);
    const auto d1 = dual_body(k, det);
    for (double alpha : {2.0, -1.0, 0.5}) {
      const auto d2 = dual_body(k, det.scaled(alpha));
      // K^{w1} = alpha K^{w2}
      const ConvexBody scaled = alpha > 0 ? d2.scaled(alpha) : d2.negated().scaled(-alpha);
      body_err.add(support_distance(d1, scaled));
      if (alpha < 0) {
        const auto minus = d1.negated();
        for (int j = 0; j < 20; ++j) {
          const Vector x = random_point(rng, 2);
          gauge_err.add(std::abs(d2.gauge(x) - (-alpha) * minus.gauge(x)));
        }
      }
    }
  }
  r.checks.push_back(upper_bound("rescaling/dual_bodies", body_err.value, 1e-9));
  r.checks.push_back(upper_bound("rescaling/negative_scale_gauge", gauge_err.value, 1e-9));
}

void suite_form_independence(RunReport& r, CounterRng& rng) {
  Worst err;
  for (int i = 0; i < 5; ++i) {
    const auto k = random_hpolytope(rng, 4, 10, 14);
    const auto w1 = random_form(rng, 4);
    const auto w2 = random_form(rng, 4);
    const Matrix t = w2.inverse_transpose() * w1.matrix().transpose();
    err.add(support_distance(dual_body(k, w1).linear_image(t), dual_body(k, w2)));
  }
  r.checks.push_back(upper_bound("form-independence/hpolytopes_4d", err.value, 1e-9));
}

void suite_mazur_ulam(RunReport& r, CounterRng& rng) {
  const auto k = triangle_fixture();
  const Gauge g(k);
  const double a = 2.0 * std::numbers::pi / 3.0;
  Matrix rot(2, 2);
  rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  const auto rotation = AffineMap::linear_only(rot);
  Matrix shift_v = k.as_vpolytope().vertices;
  shift_v.row(0).array() += 0.1;
  const auto shifted = ConvexBody::vpolytope(shift_v);

  r.checks.push_back({"mazur-ulam/rotation_is_isometry", is_gauge_isometry(rotation, k, k).is_isometry, 0, 0, ""});
  r.checks.push_back({"mazur-ulam/translate_rejected",
                      !is_gauge_isometry(AffineMap::linear_only(Matrix::Identity(2, 2)), k, shifted).is_isometry, 0, 0,
                      ""});
  r.checks.push_back({"mazur-ulam/search_refutes_translate", !linear_equivalence_search_2d(k, shifted).has_value(), 0,
                      0, ""});
  Worst dist, norm;
  for (int i = 0; i < 100; ++i) {
    const Vector x = random_point(rng, 2), z = random_point(rng, 2);
    dist.add(std::abs(distance(g, x, z) - distance(g, rot * x, rot * z)));
    norm.add(std::abs(symmetrized_norm(g, x - z) - symmetrized_norm(g, rot * (x - z))));
  }
  r.checks.push_back(upper_bound("mazur-ulam/distance_preserved", dist.value, 1e-9));
  r.checks.push_back(upper_bound("mazur-ulam/symmetrized_norm_preserved", norm.value, 1e-9));
}

void suite_flows(RunReport& r, CounterRng&) {
  const auto e = ConvexBody::ellipsoid({1.0, 2.0});
  const auto w0 = SymplecticForm::standard(2);
  const auto f1 = integrate_characteristic(e, w0, Eigen::Vector4d(1, 0, 0, 0));
  const auto f2 = integrate_characteristic(e, w0, Eigen::Vector4d(0, 0, 2, 0), {1e-3, 40.0});
  const double pi = std::numbers::pi;
  r.checks.push_back(upper_bound("flows/plane1_period", f1.closed ? std::abs(*f1.period / (2 * pi) - 1) : 1.0, 1e-4));
  r.checks.push_back(upper_bound("flows/plane1_area", f1.closed ? std::abs(f1.area / pi - 1) : 1.0, 1e-4));
  r.checks.push_back(upper_bound("flows/plane2_period", f2.closed ? std::abs(*f2.period / (8 * pi) - 1) : 1.0, 1e-4));
  r.checks.push_back(upper_bound("flows/plane2_area", f2.closed ? std::abs(f2.area / (4 * pi) - 1) : 1.0, 1e-4));
}

void suite_isoperimetric(RunReport& r, CounterRng& rng) {
  const auto e = ConvexBody::ellipsoid({1.0, 2.0});
  const auto w0 = SymplecticForm::standard(2);
  const auto flow = integrate_characteristic(e, w0, Eigen::Vector4d(1, 0, 0, 0));
  const auto rep = isoperimetric_report(e, w0, flow.curve);
  r.checks.push_back(upper_bound("isoperimetric/flow_ratio", std::abs(rep.ratio - 1.0), 1e-4));
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10; ++i) {
    const auto loop = random_boundary_loop(rng, e, w0, 2048);
    worst_margin = std::min(worst_margin, 1.0 - isoperimetric_report(e, w0, loop).ratio);
  }
  r.checks.push_back({"isoperimetric/loops_strict", worst_margin >= 1e-3, worst_margin, 1e-3, "min 1 - ratio"});
}

void suite_sections(RunReport& r, CounterRng& rng) {
  Worst gap;
  const auto w0 = SymplecticForm::standard(2);
  gap.add(section_duality_check(ConvexBody::euclidean_ball(4), w0,
                                PlaneSubspace(Vector::Unit(4, 0), Vector::Unit(4, 1)))
              .hausdorff);
  gap.add(section_duality_check(ConvexBody::ellipsoid({1.0, 2.0}), w0,
                                PlaneSubspace(Vector::Unit(4, 2), Vector::Unit(4, 3)))
              .hausdorff);
  for (int i = 0; i < 5; ++i) {
    const auto k = random_hpolytope(rng, 4, 10, 14);
    gap.add(section_duality_check(k, w0, random_symplectic_plane(rng, w0)).hausdorff);
  }
  r.checks.push_back(upper_bound("sections/hausdorff", gap.value, 1e-8));
}

void suite_involution(RunReport& r, CounterRng& rng) {
  Worst res;
  const auto det = SymplecticForm::standard(1);
  const auto w0 = SymplecticForm::standard(2);
  const auto disk = ConvexBody::euclidean_ball(2);
  const auto e = ConvexBody::ellipsoid({1.0, 2.0});
  for (int i = 0; i < 50; ++i) {
    res.add(jj_involution_check(disk, det, disk.boundary_ray_intersection(rng.unit_vector(2))));
    res.add(jj_involution_check(e, w0, e.boundary_ray_intersection(rng.unit_vector(4))));
  }
  r.checks.push_back(upper_bound("involution/residual", res.value, 1e-8));
}

void suite_membership_duality(RunReport& r, CounterRng& rng) {
  const auto det = SymplecticForm::standard(1);
  int failures = 0, total = 0;
  for (const auto& k : planar_fixtures(rng, 3)) {
    const auto dual = dual_body(k, det);
    const auto verts = k.is_smooth() ? std::vector<Eigen::Vector2d>{} : polygon_vertices(k);
    for (int i = 0; i < 100; ++i, ++total) {
      const Vector x = random_point(rng, 2);
      // x in K^w iff w(x, y) <= 1 on K; for polygons the vertices suffice.
      double worst = 0.0;
      if (k.is_smooth()) {
        worst = dual_gauge_eval(k, det, x);
      } else {
        worst = -std::numeric_limits<double>::infinity();
        for (const auto& v : verts) worst = std::max(worst, det(x, Vector(v)));
      }
      if (std::abs(worst - 1.0) < 1e-9) continue;
      if (dual.contains(x) != (worst <= 1.0)) ++failures;
    }
  }
  r.checks.push_back(count_check("membership-duality/planar", failures, total));
}

void suite_capacity(RunReport& r, CounterRng&) {
  const auto w0 = SymplecticForm::standard(2);
  const auto est = capacity_estimate(ConvexBody::ellipsoid({1.0, 2.0}), w0, {});
  const double pi = std::numbers::pi;
  r.checks.push_back(upper_bound("capacity/ellipsoid_1_2", est.capacity ? std::abs(*est.capacity / pi - 1) : 1.0, 1e-3));
  r.checks.push_back(upper_bound("capacity/half_dual_length",
                                 est.capacity ? std::abs(est.min_half_dual_length / *est.capacity - 1) : 1.0, 1e-4));
}

const std::map<std::string, std::function<void(RunReport&, CounterRng&)>>& registry() {
  static const std::map<std::string, std::function<void(RunReport&, CounterRng&)>> suites{
      {"bidual", suite_bidual},
      {"capacity", suite_capacity},
      {"dual-gauge", suite_dual_gauge},
      {"flows", suite_flows},
      {"form-independence", suite_form_independence},
      {"inequality", suite_inequality},
      {"involution", suite_involution},
      {"isoperimetric", suite_isoperimetric},
      {"mazur-ulam", suite_mazur_ulam},
      {"membership-duality", suite_membership_duality},
      {"rescaling", suite_rescaling},
      {"reversal", suite_reversal},
      {"sections", suite_sections},
      {"triangle", suite_triangle},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

RunReport run_suite(const std::string& name, std::uint64_t seed) {
  RunReport report;
  const auto& suites = registry();
  if (name == "all") {
    std::uint64_t k = 0;
    for (const auto& [n, fn] : suites) {
      CounterRng rng(seed * 1000003ULL + k++);
      fn(report, rng);
    }
  } else {
    const auto it = suites.find(name);
    require(it != suites.end(), "unknown suite '" + name + "'");
    CounterRng rng(seed);
    it->second(report, rng);
  }
  report.sort();
  return report;
}

}  // namespace gaugekit::laws
