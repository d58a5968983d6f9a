#pragma once

#include <vector>

#include "unmix/errors.hpp"
#include "unmix/support.hpp"
#include "unmix/triangulate.hpp"

namespace unmix {

/// A facet-supporting hyperplane with its inner normal: every incident
/// point satisfies <p, normal> = offset, every other input point lies
/// strictly above. Normals are primitive integer vectors.
struct Facet {
  RatPoint normal;
  Rat offset;
  std::vector<int> incident;  // all input points on the hyperplane
};

/// Exact convex hull. For lower-dimensional inputs, facets are those of
/// the hull inside its affine hull (computed on an exact coordinate
/// projection recorded in coord_subset) with normals embedded back into
/// the ambient space; dim records the intrinsic dimension.
struct Polytope {
  int ambient = 0;
  Support all_points;
  std::vector<int> vertex_ids;
  std::vector<Facet> facets;
  int dim = 0;
  std::vector<int> coord_subset;  // only when dim < ambient
};

Polytope convex_hull(const Support& s);

/// h_alpha: min over the points of <p, alpha>. alpha must be nonzero.
Rat support_value(const Support& s, const RatPoint& alpha);

/// The minimizer set (S)_alpha as indices into s.points.
std::vector<int> face_of(const Support& s, const RatPoint& alpha);

/// A proper face: the full set of input points on it, one witnessing
/// inner normal (sum of the containing facets' normals), its dimension,
/// and which facets cut it out.
struct Face {
  std::vector<int> vertex_ids;
  RatPoint normal;
  int dim = 0;
  std::vector<int> facet_set;
};

inline constexpr size_t kDefaultFaceCap = 1000000;

/// Every proper face of dimension >= 1, each exactly once, in canonical
/// order (sorted id sets). Computed as the intersection closure of the
/// facet incidence sets. Throws degenerate_error for lower-dimensional
/// polytopes and resource_limit_error past the cap.
std::vector<Face> enumerate_faces(const Polytope& p, size_t face_cap = kDefaultFaceCap);

/// Same closure without the full-dimensionality requirement; used for
/// grouped checks whose union hulls may live in a proper subspace.
std::vector<Face> enumerate_faces_intrinsic(const Polytope& p,
                                            size_t face_cap = kDefaultFaceCap);

}  // namespace unmix
