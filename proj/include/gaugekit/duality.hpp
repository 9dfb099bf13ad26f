#pragma once

// Polar bodies and symplectic dual bodies. Every construction is closed-form:
// vertices become halfspace normals and vice versa, and quadratics invert.

#include "gaugekit/bodies.hpp"
#include "gaugekit/symplectic.hpp"

#include <optional>
#include <string>

namespace gaugekit {

// Polar body K° = {f : f(x) <= 1 on K}, in covector coordinates. Read through
// the standard inner product it is a body in the primal plane.
ConvexBody polar_body(const ConvexBody& body);
// max{f(x) : x in K}
double polar_gauge_eval(const ConvexBody& body, const Covector& f);

// K^w = {x : w(x, y) <= 1 for all y in K}, the image of K° under identify().
ConvexBody dual_body(const ConvexBody& body, const SymplecticForm& form);
// Gauge of K^w at x, i.e. max{w(x, y) : y in K}.
double dual_gauge_eval(const ConvexBody& body, const SymplecticForm& form, const Vector& x);
// (K^w)^w; equals -K.
ConvexBody bidual_body(const ConvexBody& body, const SymplecticForm& form);

struct DualBodyResult {
  ConvexBody body;
  std::string source_id;
  std::string form_id;
};

DualBodyResult dual_body_with_provenance(const ConvexBody& body, const SymplecticForm& form,
                                         std::string source_id, std::string form_id);

// alpha > 0 with B = alpha * A when the support functions agree up to that
// factor on the default direction set (tolerance 1e-8), otherwise nothing.
std::optional<double> homothety_detect(const ConvexBody& a, const ConvexBody& b, double tol = 1e-8);

}  // namespace gaugekit
