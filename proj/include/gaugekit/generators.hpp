#pragma once

// Random fixtures for property suites. All draws go through CounterRng, so a
// seed reproduces the exact same bodies, forms and planes.

#include "gaugekit/bodies.hpp"
#include "gaugekit/curve.hpp"
#include "gaugekit/random.hpp"
#include "gaugekit/symplectic.hpp"

#include <vector>

namespace gaugekit {

// Equilateral triangle with vertices (0,2), (sqrt3,-1), (-sqrt3,-1); barycenter at 0.
ConvexBody triangle_fixture();
// Square with vertices (+-1, +-1).
ConvexBody square_fixture();

// Convex polygon in vertex form with min_vertices..max_vertices vertices, origin interior.
ConvexBody random_polygon(CounterRng& rng, int min_vertices = 3, int max_vertices = 10);
// Bounded halfspace polytope with the origin interior.
ConvexBody random_hpolytope(CounterRng& rng, int dim, int min_facets, int max_facets);
// S^T W_0 S for a random well-conditioned S.
SymplecticForm random_form(CounterRng& rng, int dim);
// Plane with |w(u, v)| >= 0.2 |u| |v|.
PlaneSubspace random_symplectic_plane(CounterRng& rng, const SymplecticForm& form);
// A point drawn uniformly from [-r, r]^d.
Vector random_point(CounterRng& rng, Eigen::Index dim, double r = 2.0);


// Closed loop on the boundary of a quadratic body: the direction
//   d(s) = cos(s) a + sin(s) b + sum_k (cos((k+1) s) p_k + sin((k+1) s) q_k)
// pushed radially onto the boundary, with analytic tangents. Orientation is
// chosen so that w(c', c) > 0 at s = 0.
SampledCurve boundary_loop(const ConvexBody& body, const SymplecticForm& form, const Vector& a, const Vector& b,
                           const std::vector<Vector>& cos_terms, const std::vector<Vector>& sin_terms,
                           std::size_t samples);

// A boundary_loop over span{e_x1, e_y1} with random harmonics of amplitude 0.15..0.35.
SampledCurve random_boundary_loop(CounterRng& rng, const ConvexBody& body, const SymplecticForm& form,
                                  std::size_t samples = 4096);

}  // namespace gaugekit
