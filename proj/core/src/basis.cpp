#include "eigenzeros/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include "eigenzeros/errors.hpp"
#include "spherical_harmonics.hpp"

namespace eigenzeros {

double EigenBasis::value(int i, const Point& x) const {
  std::vector<double> v(size_);
  values(x, v);
  return v[i];
}

Vec3 EigenBasis::gradient(int i, const Point& x) const {
  std::vector<Vec3> g(size_);
  gradients(x, g);
  return g[i];
}

namespace {

class CircleBasis final : public EigenBasis {
 public:
  explicit CircleBasis(int l)
      : EigenBasis(circle_model(), static_cast<double>(l) * l, 2, true),
        l_(l) {}

  void values(const Point& x, std::span<double> out) const override {
    const double t = l_ * x.c[0];
    out[0] = std::cos(t) * kNorm;
    out[1] = std::sin(t) * kNorm;
  }

  void gradients(const Point& x, std::span<Vec3> out) const override {
    const double t = l_ * x.c[0];
    out[0] = {-l_ * std::sin(t) * kNorm, 0.0, 0.0};
    out[1] = {l_ * std::cos(t) * kNorm, 0.0, 0.0};
  }

  int band_limit() const override { return l_; }

  std::string describe() const override {
    return "circle(l=" + std::to_string(l_) + ")";
  }

 private:
  static constexpr double kNorm = 0.56418958354775628695;  // 1/sqrt(pi)
  int l_;
};

class Sphere2Basis final : public EigenBasis {
 public:
  explicit Sphere2Basis(int l)
      : EigenBasis(sphere2_model(), static_cast<double>(l) * (l + 1),
                   2 * l + 1, true),
        l_(l) {}

  void values(const Point& x, std::span<double> out) const override {
    detail::real_sph_values(l_, x.c, out);
  }

  void gradients(const Point& x, std::span<Vec3> out) const override {
    detail::real_sph_gradients(l_, x.c, out);
  }

  int band_limit() const override { return l_; }

  std::string describe() const override {
    return "sphere2(l=" + std::to_string(l_) + ")";
  }

 private:
  int l_;
};

}  // namespace

// One sign-flip orbit of a torus frequency. Owns its slice of the basis:
// 4 product functions when both components are nonzero, 2 otherwise.
struct TorusOrbit {
  std::array<int, 2> freq;    // canonical: k1 >= 0, k2 >= 0
  std::array<double, 2> dual; // (2 pi k1 / p1, 2 pi k2 / p2)
  double normalizer = 0.0;
  int count() const { return (freq[0] > 0 && freq[1] > 0) ? 4 : 2; }
};

class TorusBasis final : public EigenBasis {
 public:
  TorusBasis(ManifoldModel model, double lambda, std::vector<TorusOrbit> orbits,
             bool separating, int total)
      : EigenBasis(model, lambda, total, separating),
        orbits_(std::move(orbits)) {}

  void values(const Point& x, std::span<double> out) const override {
    int at = 0;
    for (const TorusOrbit& o : orbits_) {
      const double sx = std::sin(o.dual[0] * x.c[0]);
      const double cx = std::cos(o.dual[0] * x.c[0]);
      const double sy = std::sin(o.dual[1] * x.c[1]);
      const double cy = std::cos(o.dual[1] * x.c[1]);
      const double k = o.normalizer;
      if (o.freq[0] > 0 && o.freq[1] > 0) {
        out[at++] = k * sx * cy;
        out[at++] = k * sx * sy;
        out[at++] = k * cx * cy;
        out[at++] = k * cx * sy;
      } else if (o.freq[1] == 0) {
        out[at++] = k * sx;
        out[at++] = k * cx;
      } else {
        out[at++] = k * sy;
        out[at++] = k * cy;
      }
    }
  }

  void gradients(const Point& x, std::span<Vec3> out) const override {
    int at = 0;
    for (const TorusOrbit& o : orbits_) {
      const double x1 = o.dual[0], x2 = o.dual[1];
      const double sx = std::sin(x1 * x.c[0]);
      const double cx = std::cos(x1 * x.c[0]);
      const double sy = std::sin(x2 * x.c[1]);
      const double cy = std::cos(x2 * x.c[1]);
      const double k = o.normalizer;
      if (o.freq[0] > 0 && o.freq[1] > 0) {
        out[at++] = {k * x1 * cx * cy, -k * x2 * sx * sy, 0.0};
        out[at++] = {k * x1 * cx * sy, k * x2 * sx * cy, 0.0};
        out[at++] = {-k * x1 * sx * cy, -k * x2 * cx * sy, 0.0};
        out[at++] = {-k * x1 * sx * sy, k * x2 * cx * cy, 0.0};
      } else if (o.freq[1] == 0) {
        out[at++] = {k * x1 * cx, 0.0, 0.0};
        out[at++] = {-k * x1 * sx, 0.0, 0.0};
      } else {
        out[at++] = {0.0, k * x2 * cy, 0.0};
        out[at++] = {0.0, -k * x2 * sy, 0.0};
      }
    }
  }

  int band_limit() const override {
    int b = 1;
    for (const TorusOrbit& o : orbits_) {
      b = std::max({b, o.freq[0], o.freq[1]});
    }
    return b;
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "torus(p=(" << model_.periods[0] << "," << model_.periods[1]
       << "),k=(";
    for (size_t i = 0; i < orbits_.size(); ++i) {
      if (i) os << "+";
      os << orbits_[i].freq[0] << "," << orbits_[i].freq[1];
    }
    os << "))";
    return os.str();
  }

  const std::vector<TorusOrbit>& orbits() const { return orbits_; }

 private:
  std::vector<TorusOrbit> orbits_;
};

namespace {

double orbit_lambda(const std::array<double, 2>& periods, int k1, int k2) {
  const double x1 = 2.0 * kPi * k1 / periods[0];
  const double x2 = 2.0 * kPi * k2 / periods[1];
  return x1 * x1 + x2 * x2;
}

TorusOrbit make_orbit(const std::array<double, 2>& periods, int k1, int k2) {
  TorusOrbit o;
  o.freq = {k1, k2};
  o.dual = {2.0 * kPi * k1 / periods[0], 2.0 * kPi * k2 / periods[1]};
  const double vol = periods[0] * periods[1];
  o.normalizer = (k1 > 0 && k2 > 0) ? 2.0 / std::sqrt(vol)
                                    : std::sqrt(2.0 / vol);
  return o;
}

// All canonical orbit representatives whose eigenvalue matches lambda.
std::vector<std::array<int, 2>> colliding_orbits(
    const std::array<double, 2>& periods, double lambda) {
  std::vector<std::array<int, 2>> hits;
  const int max1 =
      static_cast<int>(std::floor(std::sqrt(lambda) * periods[0] / (2.0 * kPi) + 1e-9));
  const int max2 =
      static_cast<int>(std::floor(std::sqrt(lambda) * periods[1] / (2.0 * kPi) + 1e-9));
  for (int k1 = 0; k1 <= max1; ++k1) {
    for (int k2 = 0; k2 <= max2; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      double l = orbit_lambda(periods, k1, k2);
      if (std::fabs(l - lambda) <= 1e-9 * std::max(1.0, lambda)) {
        hits.push_back({k1, k2});
      }
    }
  }
  return hits;
}

}  // namespace

BasisPtr circle_eigenbasis(int l) {
  if (l < 1) throw ConfigError("circle_eigenbasis: l must be >= 1");
  return std::make_shared<CircleBasis>(l);
}

BasisPtr sphere2_eigenbasis(int l) {
  if (l < 1) throw ConfigError("sphere2_eigenbasis: l must be >= 1");
  return std::make_shared<Sphere2Basis>(l);
}

BasisPtr torus_eigenbasis(std::array<double, 2> periods,
                          std::array<int, 2> frequency,
                          TorusSpectrumPolicy policy) {
  ManifoldModel model = torus_model(periods);
  int k1 = std::abs(frequency[0]);
  int k2 = std::abs(frequency[1]);
  if (k1 == 0 && k2 == 0) {
    throw ConfigError("torus_eigenbasis: frequency must be nonzero");
  }
  const double lambda = orbit_lambda(periods, k1, k2);
  auto orbits = colliding_orbits(periods, lambda);
  if (orbits.size() > 1 && policy == TorusSpectrumPolicy::RejectCollisions) {
    std::ostringstream os;
    os << "torus frequency (" << frequency[0] << "," << frequency[1]
       << ") collides with " << orbits.size() - 1
       << " other orbit(s) at lambda=" << lambda
       << "; choose SingleOrbit or MergedEigenspace";
    throw ConfigError(os.str());
  }

  std::vector<TorusOrbit> chosen;
  if (policy == TorusSpectrumPolicy::MergedEigenspace) {
    for (auto& f : orbits) chosen.push_back(make_orbit(periods, f[0], f[1]));
  } else {
    chosen.push_back(make_orbit(periods, k1, k2));
  }
  int total = 0;
  bool separating = false;
  for (auto& o : chosen) {
    total += o.count();
    if (o.freq[0] > 0 && o.freq[1] > 0) separating = true;
  }
  return std::make_shared<TorusBasis>(model, lambda, std::move(chosen),
                                      separating, total);
}

namespace {

class RestrictedBasis final : public EigenBasis {
 public:
  RestrictedBasis(BasisPtr parent, std::vector<int> indices, bool separating)
      : EigenBasis(parent->model(), parent->lambda(),
                   static_cast<int>(indices.size()), separating),
        parent_(std::move(parent)),
        indices_(std::move(indices)) {}

  void values(const Point& x, std::span<double> out) const override {
    std::vector<double> full(parent_->size());
    parent_->values(x, full);
    for (size_t i = 0; i < indices_.size(); ++i) out[i] = full[indices_[i]];
  }

  void gradients(const Point& x, std::span<Vec3> out) const override {
    std::vector<Vec3> full(parent_->size());
    parent_->gradients(x, full);
    for (size_t i = 0; i < indices_.size(); ++i) out[i] = full[indices_[i]];
  }

  int band_limit() const override { return parent_->band_limit(); }

  std::string describe() const override {
    std::ostringstream os;
    os << parent_->describe() << "[";
    for (size_t i = 0; i < indices_.size(); ++i) {
      if (i) os << ",";
      os << indices_[i];
    }
    os << "]";
    return os.str();
  }

 private:
  BasisPtr parent_;
  std::vector<int> indices_;
};

class RotatedSphereBasis final : public EigenBasis {
 public:
  RotatedSphereBasis(BasisPtr parent, std::array<Vec3, 3> rows)
      : EigenBasis(parent->model(), parent->lambda(), parent->size(),
                   parent->locally_separating()),
        parent_(std::move(parent)),
        rows_(rows) {}

  void values(const Point& x, std::span<double> out) const override {
    parent_->values(apply(x), out);
  }

  void gradients(const Point& x, std::span<Vec3> out) const override {
    parent_->gradients(apply(x), out);
    for (int i = 0; i < size_; ++i) {
      const Vec3 g = out[i];
      // pull back: grad (f o R)(x) = R^T grad f(Rx)
      out[i] = add(add(scaled(rows_[0], g[0]), scaled(rows_[1], g[1])),
                   scaled(rows_[2], g[2]));
    }
  }

  int band_limit() const override { return parent_->band_limit(); }

  std::string describe() const override {
    return parent_->describe() + "+rotation";
  }

 private:
  Point apply(const Point& x) const {
    Point y;
    y.c = {dot(rows_[0], x.c), dot(rows_[1], x.c), dot(rows_[2], x.c)};
    return y;
  }

  BasisPtr parent_;
  std::array<Vec3, 3> rows_;
};

}  // namespace

BasisPtr restricted_subbasis(BasisPtr basis, std::vector<int> indices) {
  if (!basis) throw ConfigError("restricted_subbasis: null basis");
  if (indices.empty()) throw ConfigError("restricted_subbasis: empty index set");
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConfigError("restricted_subbasis: duplicate index");
  }
  for (int i : sorted) {
    if (i < 0 || i >= basis->size()) {
      throw ConfigError("restricted_subbasis: index out of range");
    }
  }
  if (static_cast<int>(sorted.size()) == basis->size()) return basis;
  return std::make_shared<RestrictedBasis>(std::move(basis), std::move(sorted),
                                           /*separating=*/false);
}

BasisPtr rotated_sphere_basis(BasisPtr basis,
                              const std::array<Vec3, 3>& rotation_rows) {
  if (!basis || basis->model().kind != ModelKind::Sphere2) {
    throw ConfigError("rotated_sphere_basis: needs a Sphere2 basis");
  }
  return std::make_shared<RotatedSphereBasis>(std::move(basis), rotation_rows);
}

std::optional<TorusOrbitInfo> torus_product_structure(const EigenBasis& basis) {
  const auto* t = dynamic_cast<const TorusBasis*>(&basis);
  if (!t) return std::nullopt;
  const auto& orbits = t->orbits();
  if (orbits.size() != 1) return std::nullopt;
  const TorusOrbit& o = orbits.front();
  if (o.freq[0] == 0 || o.freq[1] == 0) return std::nullopt;
  return TorusOrbitInfo{o.dual, o.freq, o.normalizer};
}

}  // namespace eigenzeros
