#include "eigenzeros/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "eigenzeros/errors.hpp"

namespace eigenzeros {

ManifoldModel circle_model() {
  ManifoldModel m;
  m.kind = ModelKind::Circle;
  m.isotropy_irreducible = true;
  return m;
}

ManifoldModel sphere2_model() {
  ManifoldModel m;
  m.kind = ModelKind::Sphere2;
  m.isotropy_irreducible = true;
  return m;
}

ManifoldModel torus_model(std::array<double, 2> periods) {
  if (!(periods[0] > 0.0) || !(periods[1] > 0.0)) {
    throw ConfigError("torus periods must be positive");
  }
  ManifoldModel m;
  m.kind = ModelKind::FlatTorus2;
  m.periods = periods;
  m.isotropy_irreducible = false;
  return m;
}

ManifoldModel torus_model_aspect(double a) {
  if (!(a > 0.0)) throw ConfigError("torus aspect a must be positive");
  return torus_model({2.0 * kPi, 2.0 * kPi / a});
}

int dim(const ManifoldModel& m) {
  return m.kind == ModelKind::Circle ? 1 : 2;
}

double model_volume(const ManifoldModel& m) {
  switch (m.kind) {
    case ModelKind::Circle:
      return 2.0 * kPi;
    case ModelKind::Sphere2:
      return 4.0 * kPi;
    case ModelKind::FlatTorus2:
      if (!(m.periods[0] > 0.0) || !(m.periods[1] > 0.0)) {
        throw ConfigError("torus periods must be positive");
      }
      return m.periods[0] * m.periods[1];
  }
  throw ConfigError("unknown model kind");
}

std::string describe(const ManifoldModel& m) {
  std::ostringstream os;
  switch (m.kind) {
    case ModelKind::Circle:
      os << "circle";
      break;
    case ModelKind::Sphere2:
      os << "sphere2";
      break;
    case ModelKind::FlatTorus2:
      os << "torus(" << m.periods[0] << "," << m.periods[1] << ")";
      break;
  }
  return os.str();
}

double sphere_area(int n) {
  if (n < 1) throw ConfigError("sphere_area: n must be >= 1");
  return 2.0 * std::pow(kPi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

double weyl_constant(int n) {
  return 2.0 / (sphere_area(n) * std::pow(static_cast<double>(n), 0.5 * n));
}

namespace {

double wrap_into(double x, double period) {
  double y = std::fmod(x, period);
  if (y < 0.0) y += period;
  // fmod can return exactly `period` after the correction when x is a tiny
  // negative number.
  if (y >= period) y = 0.0;
  return y;
}

double wrapped_delta(double a, double b, double period) {
  double d = std::fabs(a - b);
  d = std::fmod(d, period);
  return std::min(d, period - d);
}

}  // namespace

Point canonicalize(const ManifoldModel& m, Point p) {
  switch (m.kind) {
    case ModelKind::Circle:
      p.c[0] = wrap_into(p.c[0], 2.0 * kPi);
      p.c[1] = p.c[2] = 0.0;
      return p;
    case ModelKind::FlatTorus2:
      p.c[0] = wrap_into(p.c[0], m.periods[0]);
      p.c[1] = wrap_into(p.c[1], m.periods[1]);
      p.c[2] = 0.0;
      return p;
    case ModelKind::Sphere2: {
      double r = norm(p.c);
      if (!(r > 0.0)) throw NumericalError("cannot normalize zero vector onto sphere");
      p.c = scaled(p.c, 1.0 / r);
      return p;
    }
  }
  throw ConfigError("unknown model kind");
}

double geodesic_distance(const ManifoldModel& m, const Point& a, const Point& b) {
  switch (m.kind) {
    case ModelKind::Circle:
      return wrapped_delta(a.c[0], b.c[0], 2.0 * kPi);
    case ModelKind::FlatTorus2: {
      double dx = wrapped_delta(a.c[0], b.c[0], m.periods[0]);
      double dy = wrapped_delta(a.c[1], b.c[1], m.periods[1]);
      return std::sqrt(dx * dx + dy * dy);
    }
    case ModelKind::Sphere2: {
      double c = std::clamp(dot(a.c, b.c), -1.0, 1.0);
      return std::acos(c);
    }
  }
  throw ConfigError("unknown model kind");
}

void tangent_frame(const ManifoldModel& m, const Point& p,
                   std::array<Vec3, 2>& out) {
  switch (m.kind) {
    case ModelKind::Circle:
      out[0] = {1.0, 0.0, 0.0};
      return;
    case ModelKind::FlatTorus2:
      out[0] = {1.0, 0.0, 0.0};
      out[1] = {0.0, 1.0, 0.0};
      return;
    case ModelKind::Sphere2: {
      // Pick the coordinate axis least aligned with p, then Gram-Schmidt.
      const Vec3& n = p.c;
      int k = 0;
      if (std::fabs(n[1]) < std::fabs(n[k])) k = 1;
      if (std::fabs(n[2]) < std::fabs(n[k])) k = 2;
      Vec3 e{0.0, 0.0, 0.0};
      e[k] = 1.0;
      Vec3 t1 = sub(e, scaled(n, dot(e, n)));
      t1 = normalized(t1);
      out[0] = t1;
      out[1] = cross(n, t1);
      return;
    }
  }
  throw ConfigError("unknown model kind");
}

Point geodesic_step(const ManifoldModel& m, const Point& p, const Vec3& v) {
  switch (m.kind) {
    case ModelKind::Circle: {
      Point q = p;
      q.c[0] += v[0];
      return canonicalize(m, q);
    }
    case ModelKind::FlatTorus2: {
      Point q = p;
      q.c[0] += v[0];
      q.c[1] += v[1];
      return canonicalize(m, q);
    }
    case ModelKind::Sphere2: {
      double t = norm(v);
      if (t == 0.0) return p;
      Vec3 dir = scaled(v, 1.0 / t);
      Point q;
      q.c = add(scaled(p.c, std::cos(t)), scaled(dir, std::sin(t)));
      return canonicalize(m, q);
    }
  }
  throw ConfigError("unknown model kind");
}

Point random_point(const ManifoldModel& m, std::mt19937_64& rng) {
  switch (m.kind) {
    case ModelKind::Circle: {
      std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
      Point p;
      p.c[0] = u(rng);
      return p;
    }
    case ModelKind::FlatTorus2: {
      std::uniform_real_distribution<double> u1(0.0, m.periods[0]);
      std::uniform_real_distribution<double> u2(0.0, m.periods[1]);
      Point p;
      p.c[0] = u1(rng);
      p.c[1] = u2(rng);
      return p;
    }
    case ModelKind::Sphere2: {
      std::normal_distribution<double> g(0.0, 1.0);
      Vec3 v;
      do {
        v = {g(rng), g(rng), g(rng)};
      } while (norm(v) < 1e-12);
      Point p;
      p.c = normalized(v);
      return p;
    }
  }
  throw ConfigError("unknown model kind");
}

}  // namespace eigenzeros
