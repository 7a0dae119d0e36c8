#include "eigenzeros/quadrature.hpp"

#include <cmath>

#include "eigenzeros/errors.hpp"

namespace eigenzeros {

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw ConfigError("gauss_legendre: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

std::vector<QuadratureNode> model_quadrature(const ManifoldModel& m,
                                             int band_limit) {
  std::vector<QuadratureNode> q;
  switch (m.kind) {
    case ModelKind::Circle: {
      int n = std::max(8, 2 * band_limit + 2);
      double w = 2.0 * kPi / n;
      for (int i = 0; i < n; ++i) {
        Point p;
        p.c[0] = 2.0 * kPi * i / n;
        q.push_back({p, w});
      }
      return q;
    }
    case ModelKind::FlatTorus2: {
      int n1 = std::max(8, 2 * band_limit + 2);
      int n2 = n1;
      double w = m.periods[0] * m.periods[1] / (n1 * n2);
      for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
          Point p;
          p.c[0] = m.periods[0] * i / n1;
          p.c[1] = m.periods[1] * j / n2;
          q.push_back({p, w});
        }
      }
      return q;
    }
    case ModelKind::Sphere2: {
      int nz = std::max(8, 2 * band_limit + 2);
      int nphi = std::max(8, 2 * band_limit + 2);
      std::vector<double> z, wz;
      gauss_legendre(nz, z, wz);
      double wphi = 2.0 * kPi / nphi;
      for (int i = 0; i < nz; ++i) {
        double s = std::sqrt(std::max(0.0, 1.0 - z[i] * z[i]));
        for (int j = 0; j < nphi; ++j) {
          double phi = 2.0 * kPi * j / nphi;
          Point p;
          p.c = {s * std::cos(phi), s * std::sin(phi), z[i]};
          q.push_back({p, wz[i] * wphi});
        }
      }
      return q;
    }
  }
  throw ConfigError("unknown model kind");
}

double gram_residual(const EigenBasis& basis) {
  const int n = basis.size();
  auto quad = model_quadrature(basis.model(), basis.band_limit());
  std::vector<double> gram(static_cast<size_t>(n) * n, 0.0);
  std::vector<double> f(n);
  for (const auto& node : quad) {
    basis.values(node.x, f);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        gram[static_cast<size_t>(i) * n + j] += node.weight * f[i] * f[j];
      }
    }
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst,
                       std::fabs(gram[static_cast<size_t>(i) * n + j] - target));
    }
  }
  return worst;
}

}  // namespace eigenzeros
