#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eigenzeros/geometry.hpp"

namespace eigenzeros {

// Orthonormal basis f_1..f_N of an invariant eigenspace H of the Laplacian,
// with analytic values and gradients. Immutable after construction; safe to
// share across worker threads.
class EigenBasis {
 public:
  virtual ~EigenBasis() = default;

  const ManifoldModel& model() const { return model_; }
  double lambda() const { return lambda_; }
  int size() const { return size_; }

  // Whether H locally separates points of M. Set by the factories; proper
  // restrictions are conservatively flagged as non-separating.
  bool locally_separating() const { return locally_separating_; }

  // Values of all N basis functions at x. out.size() == N.
  virtual void values(const Point& x, std::span<double> out) const = 0;

  // Gradients of all N basis functions at x, as ambient vectors (tangent to
  // the sphere for Sphere2). out.size() == N.
  virtual void gradients(const Point& x, std::span<Vec3> out) const = 0;

  // Largest integer mode number carried by any basis function (degree l on
  // circle/sphere, max frequency component on the torus). Drives the size of
  // exact quadrature grids.
  virtual int band_limit() const = 0;

  double value(int i, const Point& x) const;
  Vec3 gradient(int i, const Point& x) const;

  virtual std::string describe() const = 0;

 protected:
  EigenBasis(ManifoldModel model, double lambda, int size, bool separating)
      : model_(model), lambda_(lambda), size_(size),
        locally_separating_(separating) {}

  ManifoldModel model_;
  double lambda_;
  int size_;
  bool locally_separating_;
};

using BasisPtr = std::shared_ptr<const EigenBasis>;

// {cos(l theta), sin(l theta)} / sqrt(pi); lambda = l^2, N = 2.
BasisPtr circle_eigenbasis(int l);

// Real orthonormal spherical harmonics of degree l; lambda = l(l+1), N = 2l+1.
// Index i corresponds to order m = i - l (sin harmonics for m < 0).
BasisPtr sphere2_eigenbasis(int l);

// What to do when the requested torus frequency orbit shares its eigenvalue
// with other orbits of the lattice.
enum class TorusSpectrumPolicy {
  RejectCollisions,  // default: refuse to build an ambiguous basis
  SingleOrbit,       // build just the requested orbit (still invariant)
  MergedEigenspace,  // build the full eigenspace, all colliding orbits
};

// Product sin/cos basis of the orbit of (k1, k2) on the torus with the given
// periods. N = 4 when both components are nonzero, 2 otherwise.
BasisPtr torus_eigenbasis(std::array<double, 2> periods,
                          std::array<int, 2> frequency,
                          TorusSpectrumPolicy policy =
                              TorusSpectrumPolicy::RejectCollisions);

// Restriction of `basis` to the given indices (same lambda, smaller N). The
// caller asserts invariance of the restricted span.
BasisPtr restricted_subbasis(BasisPtr basis, std::vector<int> indices);

// Evaluation points composed with a fixed rotation: x -> basis(R x). Only for
// Sphere2 bases; used by chart-independence checks.
BasisPtr rotated_sphere_basis(BasisPtr basis,
                              const std::array<Vec3, 3>& rotation_rows);

// Structure of a single-orbit torus product basis with both frequency
// components nonzero (the N=4 sin/cos product family). Lets the exact
// elimination oracle expand the sampled system symbolically.
struct TorusOrbitInfo {
  std::array<double, 2> dual;
  std::array<int, 2> frequency;
  double normalizer;
};

// Non-empty exactly when `basis` is such a product basis.
std::optional<TorusOrbitInfo> torus_product_structure(const EigenBasis& basis);

}  // namespace eigenzeros
