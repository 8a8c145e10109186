#include "meshlap/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace meshlap {

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * norm(cross(b - a, c - a));
}

double triangle_area_from_cotans(const Vec3& a, const Vec3& b, const Vec3& c) {
  double ca = corner_cotan(a, b, c);
  double cb = corner_cotan(b, c, a);
  double cc = corner_cotan(c, a, b);
  return 0.25 * (ca * norm2(c - b) + cb * norm2(a - c) + cc * norm2(b - a));
}

double corner_angle(const Vec3& at, const Vec3& p, const Vec3& q) {
  Vec3 u = p - at;
  Vec3 v = q - at;
  double s = norm(cross(u, v));
  double c = dot(u, v);
  if (s == 0.0 && c == 0.0) throw std::invalid_argument("corner_angle: degenerate corner");
  double ang = std::atan2(s, c);
  if (ang <= 0.0 || ang >= M_PI) throw std::invalid_argument("corner_angle: degenerate triangle");
  return ang;
}

double corner_cotan(const Vec3& at, const Vec3& p, const Vec3& q) {
  Vec3 u = p - at;
  Vec3 v = q - at;
  double s = norm(cross(u, v));
  if (s == 0.0) throw std::invalid_argument("corner_cotan: degenerate corner");
  return dot(u, v) / s;
}

double signed_tet_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return dot(cross(b - a, c - a), d - a) / 6.0;
}

double tet_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return std::fabs(signed_tet_volume(a, b, c, d));
}

double hinge_cotan(const Vec3& a, const Vec3& b, const Vec3& apex1, const Vec3& apex2) {
  Vec3 d = b - a;
  double len = norm(d);
  if (len == 0.0) throw std::invalid_argument("hinge_cotan: zero-length edge");
  d = d / len;
  Vec3 u1 = (apex1 - a) - dot(apex1 - a, d) * d;
  Vec3 u2 = (apex2 - a) - dot(apex2 - a, d) * d;
  double s = norm(cross(u1, u2));
  if (s == 0.0) throw std::invalid_argument("hinge_cotan: flat or degenerate hinge");
  return dot(u1, u2) / s;
}

double hinge_angle(const Vec3& a, const Vec3& b, const Vec3& apex1, const Vec3& apex2) {
  Vec3 d = b - a;
  double len = norm(d);
  if (len == 0.0) throw std::invalid_argument("hinge_angle: zero-length edge");
  d = d / len;
  Vec3 u1 = (apex1 - a) - dot(apex1 - a, d) * d;
  Vec3 u2 = (apex2 - a) - dot(apex2 - a, d) * d;
  if (norm2(u1) == 0.0 || norm2(u2) == 0.0)
    throw std::invalid_argument("hinge_angle: apex lies on the edge line");
  // atan2(+0, -x) = pi, so a flat hinge comes out as exactly pi.
  return std::atan2(norm(cross(u1, u2)), dot(u1, u2));
}

} // namespace meshlap
