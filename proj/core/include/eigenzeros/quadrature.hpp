#pragma once

#include <vector>

#include "eigenzeros/basis.hpp"
#include "eigenzeros/geometry.hpp"

namespace eigenzeros {

struct QuadratureNode {
  Point x;
  double weight;
};

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Quadrature exact (to round-off) for products of two basis functions of the
// given band limit: uniform trapezoid on circle/torus, Gauss-Legendre in
// cos(colatitude) x uniform azimuth on the sphere.
std::vector<QuadratureNode> model_quadrature(const ManifoldModel& m,
                                             int band_limit);

// Max-norm distance of the quadrature Gram matrix of `basis` from identity.
double gram_residual(const EigenBasis& basis);

}  // namespace eigenzeros
