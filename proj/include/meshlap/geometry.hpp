#pragma once

#include "meshlap/vec3.hpp"

namespace meshlap {

// Area of the triangle [a, b, c]; 0 for colinear points.
double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

// Same area evaluated through the interior angles,
//   Area = 1/4 * sum_i cot(alpha_i) |v_{i+1} - v_{i-1}|^2,
// kept as an independent route for cross-checking the cross-product form.
double triangle_area_from_cotans(const Vec3& a, const Vec3& b, const Vec3& c);

// Interior angle at `at`, in (0, pi). Throws on a degenerate corner.
double corner_angle(const Vec3& at, const Vec3& p, const Vec3& q);

// Unsigned tetrahedron volume |det[b-a, c-a, d-a]| / 6.
double tet_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Signed version; positive when (b-a, c-a, d-a) is a right-handed frame.
double signed_tet_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Interior dihedral angle along the segment [a, b] between the half-planes
// through apex1 and apex2. Ranges over (0, pi]; coplanar apexes on opposite
// sides give exactly pi. Computed from the in-plane perpendiculars so no
// face orientation convention is needed.
double hinge_angle(const Vec3& a, const Vec3& b, const Vec3& apex1, const Vec3& apex2);

// cot of the angle at `at`, computed as dot/|cross| (stable for the weight
// formulas; throws on a degenerate corner).
double corner_cotan(const Vec3& at, const Vec3& p, const Vec3& q);

// cot of hinge_angle(a, b, apex1, apex2), without the angle round trip.
double hinge_cotan(const Vec3& a, const Vec3& b, const Vec3& apex1, const Vec3& apex2);

} // namespace meshlap
