#pragma once

#include <random>

#include "ripe/assembly.hpp"
#include "ripe/core.hpp"
#include "ripe/geometry.hpp"
#include "ripe/monomial_table.hpp"

namespace ripe::test {

inline Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Vec3 v{n(rng), n(rng), n(rng)};
  while (norm(v) < 1e-3) v = {n(rng), n(rng), n(rng)};
  return normalized(v);
}

struct Rotation {
  Vec3 c0, c1, c2;  // columns
  Vec3 apply(const Vec3& v) const { return c0 * v.x + c1 * v.y + c2 * v.z; }
};

inline Rotation random_rotation(std::mt19937_64& rng) {
  Rotation r;
  r.c0 = random_unit(rng);
  Vec3 t = random_unit(rng);
  while (std::abs(dot(t, r.c0)) > 0.9) t = random_unit(rng);
  r.c2 = normalized(cross(r.c0, t));
  r.c1 = cross(r.c2, r.c0);
  return r;
}

// triangle with bounded aspect ratio, in general 3-D position
inline ElementGeometry random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Vec3 v1{u(rng), u(rng), u(rng)};
    const Vec3 v2{u(rng), u(rng), u(rng)};
    const Vec3 v3{u(rng), u(rng), u(rng)};
    const double a = 0.5 * norm(cross(v2 - v1, v3 - v1));
    const double d = std::max({norm(v2 - v1), norm(v3 - v2), norm(v1 - v3)});
    if (a > 0.15 * d * d) return ElementGeometry(v1, v2, v3);
  }
}

// n^j . m_{b,c,0} at edge coordinate x, reconstructed pointwise from the
// auxiliary-field recursion for the Laplace single layer. Shares no code with
// the primitive tables; used as the independent integrand for closure checks.
inline double mdotn_laplace(const ElementGeometry& geom, int edge, const Vec3& r_p,
                            int b_want, int c_want, double x) {
  const EdgeFrame& e = geom.edge(edge);
  const Vec3 d = r_p - e.start;
  const double x_p = dot(d, e.dir);
  const double y_p = dot(d, e.in_plane);
  const double z_p = dot(d, geom.k_hat());
  const double x_d = x - x_p;
  const double g2 = y_p * y_p + z_p * z_p;
  const double r = std::sqrt(x_d * x_d + g2);
  const double rho2 = x_d * x_d + y_p * y_p;
  const double x_q = e.alpha_x * x + e.gamma_x;
  const double y_q = e.alpha_y * x + e.gamma_y;
  const double i_dn = -e.beta_x, j_dn = -e.beta_y;
  const auto pc = geom.element_coords(r_p);
  const double xp_e = pc[0], yp_e = pc[1];

  const int p = b_want + c_want;
  MonomialTable<double> m(p, 0, 0);
  for (int a = 0; a <= p; ++a)
    m.at(0, 0, a) = std::pow(r, a + 1) * y_p / ((a + 1) * four_pi * rho2);
  auto inh = [&](int b, int c, int a, double dn) {
    return dn * std::pow(x_q, b) * std::pow(y_q, c) * std::pow(r, a + 1) /
           ((a + 1) * four_pi);
  };
  for (int c = 0; c < p; ++c)
    for (int a = 0; a < p - c; ++a) {
      double v = yp_e * m.at(0, c, a) + inh(0, c, a, j_dn);
      if (c) v -= c * m.at(0, c - 1, a + 2) / (a + 1);
      m.at(0, c + 1, a) = v;
    }
  for (int c = 0; c <= p; ++c)
    for (int b = 0; b < p - c; ++b)
      for (int a = 0; a < p - b - c; ++a) {
        double v = xp_e * m.at(b, c, a) + inh(b, c, a, i_dn);
        if (b) v -= b * m.at(b - 1, c, a + 2) / (a + 1);
        m.at(b + 1, c, a) = v;
      }
  return m.at(b_want, c_want, 0);
}

}  // namespace ripe::test
