#include "spherical_harmonics.hpp"

#include <cmath>
#include <vector>

#include "eigenzeros/errors.hpp"

namespace eigenzeros::detail {

namespace {

// Normalization N_{lm} with the sqrt(2) for m != 0 folded in:
//   Y_{l,m} = N_{lm} P_l^m(z) cos(m phi), m > 0
// lgamma keeps the factorial ratio finite for any reasonable l.
double norm_factor(int l, int m) {
  double log_ratio = std::lgamma(static_cast<double>(l - m + 1)) -
                     std::lgamma(static_cast<double>(l + m + 1));
  double n = std::sqrt((2.0 * l + 1.0) / (4.0 * kPi) * std::exp(log_ratio));
  if (m > 0) n *= std::sqrt(2.0);
  return n;
}

// Q_l^m(z) = P_l^m(z)/(1-z^2)^(m/2) (no Condon-Shortley) and dQ/dz, for fixed
// m and all degrees up to l. q and dq have size l - m + 1.
void q_polynomials(int l, int m, double z, std::span<double> q,
                   std::span<double> dq) {
  // Q_m^m = (2m-1)!!
  double qmm = 1.0;
  for (int i = 1; i <= m; ++i) qmm *= 2.0 * i - 1.0;
  q[0] = qmm;
  dq[0] = 0.0;
  if (l == m) return;
  q[1] = (2.0 * m + 1.0) * z * qmm;
  dq[1] = (2.0 * m + 1.0) * qmm;
  for (int deg = m + 2; deg <= l; ++deg) {
    int i = deg - m;
    double a = 2.0 * deg - 1.0;
    double b = deg + m - 1.0;
    q[i] = (a * z * q[i - 1] - b * q[i - 2]) / (deg - m);
    dq[i] = (a * (q[i - 1] + z * dq[i - 1]) - b * dq[i - 2]) / (deg - m);
  }
}

struct AzimuthalPair {
  double c;   // Re (x+iy)^m
  double s;   // Im (x+iy)^m
  double cp;  // same for m-1 (used by the gradient)
  double sp;
};

AzimuthalPair azimuthal(int m, double x, double y) {
  AzimuthalPair a{1.0, 0.0, 0.0, 0.0};
  for (int i = 1; i <= m; ++i) {
    a.cp = a.c;
    a.sp = a.s;
    a.c = x * a.cp - y * a.sp;
    a.s = x * a.sp + y * a.cp;
  }
  return a;
}

}  // namespace

void real_sph_values(int l, const Vec3& p, std::span<double> out) {
  if (l < 1) throw ConfigError("spherical harmonics need l >= 1");
  const double x = p[0], y = p[1], z = p[2];
  std::vector<double> q(l + 1), dq(l + 1);
  for (int m = 0; m <= l; ++m) {
    q_polynomials(l, m, z, q, dq);
    double base = norm_factor(l, m) * q[l - m];
    if (m == 0) {
      out[l] = base;
    } else {
      AzimuthalPair a = azimuthal(m, x, y);
      out[l + m] = base * a.c;
      out[l - m] = base * a.s;
    }
  }
}

void real_sph_gradients(int l, const Vec3& p, std::span<Vec3> out) {
  if (l < 1) throw ConfigError("spherical harmonics need l >= 1");
  const double x = p[0], y = p[1], z = p[2];
  std::vector<double> q(l + 1), dq(l + 1);
  for (int m = 0; m <= l; ++m) {
    q_polynomials(l, m, z, q, dq);
    double n = norm_factor(l, m);
    double qv = n * q[l - m];
    double qd = n * dq[l - m];
    if (m == 0) {
      out[l] = {0.0, 0.0, qd};
    } else {
      AzimuthalPair a = azimuthal(m, x, y);
      // d/dx C_m = m C_{m-1}, d/dy C_m = -m S_{m-1}; similarly for S_m.
      out[l + m] = {qv * m * a.cp, -qv * m * a.sp, qd * a.c};
      out[l - m] = {qv * m * a.sp, qv * m * a.cp, qd * a.s};
    }
  }
  // Project the ambient gradients onto the tangent plane at p.
  for (int i = 0; i < 2 * l + 1; ++i) {
    double r = dot(out[i], p);
    out[i] = sub(out[i], scaled(p, r));
  }
}

}  // namespace eigenzeros::detail
