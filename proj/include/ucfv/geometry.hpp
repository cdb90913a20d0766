#ifndef UCFV_GEOMETRY_HPP
#define UCFV_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace ucfv {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double xx, double yy) : x(xx), y(yy) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) { return std::sqrt(v.x * v.x + v.y * v.y); }

using Polygon = std::vector<Vec2>;

// Shoelace signed area; positive for counter-clockwise vertex order.
inline double polygon_signed_area(const Polygon& p) {
  double a = 0.0;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& u = p[i];
    const Vec2& v = p[(i + 1) % n];
    a += cross(u, v);
  }
  return 0.5 * a;
}

inline Vec2 polygon_centroid(const Polygon& p) {
  double a = 0.0;
  Vec2 c;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& u = p[i];
    const Vec2& v = p[(i + 1) % n];
    const double w = cross(u, v);
    a += w;
    c += (u + v) * w;
  }
  return c / (3.0 * a);
}

}  // namespace ucfv

#endif
