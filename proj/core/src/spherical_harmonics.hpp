#pragma once

#include <span>

#include "eigenzeros/geometry.hpp"

namespace eigenzeros::detail {

// Real orthonormal spherical harmonics of degree l on the unit 2-sphere,
// evaluated pole-safely from Cartesian coordinates.
//
// Basis order: m = -l..l, where index i = m + l. For m > 0 the harmonic is
// the cos(m phi) one, for m < 0 the sin(|m| phi) one. No Condon-Shortley
// phase. Normalized so that the L2(S^2) norm with the plain surface measure
// is 1, i.e. Y_{1,0} = sqrt(3/4pi) z.
//
// Internally: Y_{l,m} = N_{lm} Q_l^m(z) C_m(x,y) with Q_l^m(z) =
// P_l^m(z) / (1-z^2)^{m/2} a polynomial in z and (C_m, S_m) = Re/Im (x+iy)^m,
// so values and ambient-gradient formulas contain no pole singularity.
void real_sph_values(int l, const Vec3& p, std::span<double> out);

// Ambient gradients projected onto the tangent plane at p (|p| = 1).
void real_sph_gradients(int l, const Vec3& p, std::span<Vec3> out);

}  // namespace eigenzeros::detail
