#pragma once

#include <vector>

#include "feyntope/rational.hpp"

namespace feyntope {

// Exact polyhedral kernel used by the facet oracle and the volume code.
// Everything is over the integers / rationals; no floating point.

// Extreme rays of the dual cone { w : <w, p> >= 0 for all p in points },
// computed by the double description method.  Requires the points to span
// R^d linearly (throws ValidationError otherwise).  Each ray is primitive
// and the result is sorted lexicographically.  For a full-dimensional
// pointed cone over the points these rays are exactly its inward facet
// normals.
std::vector<IVec> dual_cone_rays(const std::vector<IVec>& points);

// d! * volume of the convex hull of points in Z^d (full-dimensional
// input; returns 0 and sets *degenerate when the affine span is smaller).
// Pulling triangulation: fan from the lexicographically smallest vertex
// over recursively triangulated facets.
Int lattice_normalized_volume(const std::vector<IVec>& points, bool* degenerate = nullptr);

// Simplices of the pulling triangulation as index tuples into `points`
// (d+1 indices each).
std::vector<std::vector<int>> pulling_triangulation(const std::vector<IVec>& points);

}  // namespace feyntope
