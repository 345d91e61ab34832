#include "ripe/kappa.hpp"

#include <cmath>

namespace ripe {

namespace {

// int x_d r^a dx_d; the a = -2 case is the logarithmic one.
double radial_moment(double r, int a) {
  if (a == -2) return std::log(r);
  return std::pow(r, a + 2) / (a + 2);
}

}  // namespace

MonomialTable<double> kappa_table(const EdgeScalars& s, const ElemTables& elem,
                                  int max_bc, int a_extra) {
  constexpr int ghost = -3;
  MonomialTable<double> t(max_bc, ghost, a_extra);

  const double ax = s.alpha_x, ay = s.alpha_y;
  const double ah = s.alpha_hat, bh = s.beta_hat;
  const double g2 = s.gamma_sq;
  const double r = s.r;

  // 1. a-axis
  for (int a = ghost; a <= t.a_max(0, 0); ++a) t.at(0, 0, a) = elem.i(a);
  if (max_bc >= 1) {
    // 2. and 4. first off-axis columns
    for (int a = ghost; a <= t.a_max(0, 1); ++a)
      t.at(0, 1, a) = ay * radial_moment(r, a) - bh * t.at(0, 0, a);
    for (int a = ghost; a <= t.a_max(1, 0); ++a)
      t.at(1, 0, a) = ax * radial_moment(r, a) - ah * t.at(0, 0, a);
  }
  // 3. b = 0 plane
  for (int c = 2; c <= max_bc; ++c)
    for (int a = ghost; a <= t.a_max(0, c); ++a)
      t.at(0, c, a) = ay * ay * t.at(0, c - 2, a + 2) - 2.0 * bh * t.at(0, c - 1, a) -
                      (bh * bh + ay * ay * g2) * t.at(0, c - 2, a);
  // 5. c = 0 plane
  for (int b = 2; b <= max_bc; ++b)
    for (int a = ghost; a <= t.a_max(b, 0); ++a)
      t.at(b, 0, a) = ax * ax * t.at(b - 2, 0, a + 2) - 2.0 * ah * t.at(b - 1, 0, a) -
                      (ah * ah + ax * ax * g2) * t.at(b - 2, 0, a);
  // 6. interior, one c-plane at a time
  for (int c = 0; c < max_bc; ++c)
    for (int b = 0; b < max_bc - c; ++b)
      for (int a = ghost; a <= t.a_max(b + 1, c + 1); ++a)
        t.at(b + 1, c + 1, a) = ax * ay * t.at(b, c, a + 2) - bh * t.at(b + 1, c, a) -
                                ah * t.at(b, c + 1, a) -
                                (ah * bh + ax * ay * g2) * t.at(b, c, a);
  return t;
}

MonomialTable<double> kappa_derivatives(const MonomialTable<double>& kappa,
                                        const EdgeScalars& s, KappaDeriv which) {
  const int need_down = (which == KappaDeriv::xp) ? 0 : 2;
  constexpr int a_min = -1;  // derivative consumers reach down to a = -1
  if (kappa.a_min() > a_min - need_down)
    throw MissingGhostEntries("kappa table lacks the ghost entries for this derivative");

  const int max_bc = kappa.max_bc();
  MonomialTable<double> d(max_bc, a_min, 0);
  const double y_d = -s.y_p;  // on the edge y^j = 0
  const double z_d = -s.z_p;

  for (int b = 0; b <= max_bc; ++b)
    for (int c = 0; c <= max_bc - b; ++c)
      for (int a = a_min; a <= d.a_max(b, c); ++a) {
        switch (which) {
          case KappaDeriv::xp: {
            double v = -std::pow(s.x_q, b) * std::pow(s.y_q, c) * std::pow(s.r, a);
            if (b) v += s.alpha_x * b * kappa.at(b - 1, c, a);
            if (c) v += s.alpha_y * c * kappa.at(b, c - 1, a);
            d.at(b, c, a) = v;
            break;
          }
          case KappaDeriv::yp:
            d.at(b, c, a) = (a == 0) ? 0.0 : -a * y_d * kappa.at(b, c, a - 2);
            break;
          case KappaDeriv::z:
            d.at(b, c, a) = (a == 0) ? 0.0 : a * z_d * kappa.at(b, c, a - 2);
            break;
          case KappaDeriv::z_xp: {
            if (a == 0) {
              d.at(b, c, a) = 0.0;
              break;
            }
            double v = -std::pow(s.x_q, b) * std::pow(s.y_q, c) * std::pow(s.r, a - 2);
            if (b) v += s.alpha_x * b * kappa.at(b - 1, c, a - 2);
            if (c) v += s.alpha_y * c * kappa.at(b, c - 1, a - 2);
            d.at(b, c, a) = a * z_d * v;
            break;
          }
        }
      }
  return d;
}

}  // namespace ripe
