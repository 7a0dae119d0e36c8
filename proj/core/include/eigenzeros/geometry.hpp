#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace eigenzeros {

inline constexpr double kPi = 3.14159265358979323846;

// Ambient vector. The circle uses component 0 only, the torus components 0-1,
// the sphere all three.
using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline Vec3 scaled(const Vec3& a, double s) {
  return {a[0] * s, a[1] * s, a[2] * s};
}
inline Vec3 add(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 normalized(const Vec3& a) { return scaled(a, 1.0 / norm(a)); }

// A point on a model manifold, in the model's canonical chart:
//   Circle:     c[0] = angle in [0, 2pi)
//   FlatTorus2: (c[0], c[1]) in [0, p1) x [0, p2)
//   Sphere2:    (c[0], c[1], c[2]) a unit vector
struct Point {
  Vec3 c{0.0, 0.0, 0.0};
};

enum class ModelKind { Circle, Sphere2, FlatTorus2 };

struct ManifoldModel {
  ModelKind kind = ModelKind::Circle;
  std::array<double, 2> periods{2.0 * kPi, 2.0 * kPi};  // torus only
  bool isotropy_irreducible = true;
};

ManifoldModel circle_model();
ManifoldModel sphere2_model();
ManifoldModel torus_model(std::array<double, 2> periods);
// Paper-style torus: lattice periods (2pi, 2pi/a).
ManifoldModel torus_model_aspect(double a);

int dim(const ManifoldModel& m);
double model_volume(const ManifoldModel& m);
std::string describe(const ManifoldModel& m);

// Volume of the n-dimensional unit sphere, sigma_n = 2 pi^((n+1)/2) / Gamma((n+1)/2).
double sphere_area(int n);
// The averaged-zero-count constant c(n) = 2 / (sigma_n n^(n/2)).
double weyl_constant(int n);

// Canonicalizes a chart point (wraps torus coordinates, renormalizes sphere
// points, wraps the circle angle).
Point canonicalize(const ManifoldModel& m, Point p);

// Geodesic distance between canonical points.
double geodesic_distance(const ManifoldModel& m, const Point& a, const Point& b);

// Orthonormal tangent frame at p, as ambient vectors. Fills out[0..dim-1].
// The frame is deterministic in p but makes no smoothness promise.
void tangent_frame(const ManifoldModel& m, const Point& p,
                   std::array<Vec3, 2>& out);

// Moves p along the geodesic with initial velocity v (ambient tangent vector).
Point geodesic_step(const ManifoldModel& m, const Point& p, const Vec3& v);

// Haar-uniform random point.
Point random_point(const ManifoldModel& m, std::mt19937_64& rng);

}  // namespace eigenzeros
