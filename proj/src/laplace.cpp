#include "ripe/laplace.hpp"

#include <cmath>

namespace ripe {

namespace {

// Advances one family entry in the b direction (swap roles for c). The three
// common pieces are the homogeneous shift, the coupling to a base family for
// the first-derivative recursions, and the per-family inhomogeneous term.
struct Frame {
  double xp, yp;        // observation point, element frame
  double idn, jdn;      // i.n^j, j.n^j
  double ax, ay, bx, by;
  double x_q, y_q, r, rho_sq;
  double y_dj, z_d;     // -y_p^j, -z_p^j
  double y_pj, z_pj;
};

}  // namespace

LaplaceEdgeTables laplace_edge_tables(const EdgeScalars& s,
                                      const MonomialTable<double>& kappa,
                                      const ElemTables& elem, int p_s, unsigned pots,
                                      SweepOrder order) {
  const bool want_v = pots & pot_v;
  const bool want_k = pots & pot_k;
  const bool want_kp = pots & pot_kp;
  const bool want_d = pots & pot_d;
  const bool need_xi = want_v || want_kp;
  const bool need_z = want_k || want_kp || want_d;

  if ((want_kp || want_d) && s.rho_sq <= 1e-28 * s.scale * s.scale)
    throw SingularPrimitive("observation point on the edge carrier line");
  if (kappa.a_min() > -3)
    throw MissingGhostEntries("kappa table must carry ghost entries down to a = -3");

  Frame f;
  f.xp = s.elem_xp;
  f.yp = s.elem_yp;
  f.idn = s.i_dot_n;
  f.jdn = s.j_dot_n;
  f.ax = s.alpha_x;
  f.ay = s.alpha_y;
  f.bx = s.beta_x;
  f.by = s.beta_y;
  f.x_q = s.x_q;
  f.y_q = s.y_q;
  f.r = s.r;
  f.rho_sq = s.rho_sq;
  f.y_pj = s.y_p;
  f.z_pj = s.z_p;
  f.y_dj = -s.y_p;
  f.z_d = -s.z_p;

  LaplaceEdgeTables out;
  auto make = [&] { return MonomialTable<double>(p_s, 0, 0); };
  if (need_xi) out.xi = make();
  if (need_z) out.xi_z = make();
  if (want_kp) {
    out.xi_xp = make();
    out.xi_yp = make();
  }
  if (want_d) {
    out.xi_z_xp = make();
    out.xi_z_yp = make();
    out.xi_z_zp = make();
  }

  // d kappa_{b,c,a} / d x_p^j, pointwise part plus lower-column entries
  auto kap_dxp = [&](int b, int c, int a) {
    double v = -std::pow(f.x_q, b) * std::pow(f.y_q, c) * std::pow(f.r, a);
    if (b) v += f.ax * b * kappa.at(b - 1, c, a);
    if (c) v += f.ay * c * kappa.at(b, c - 1, a);
    return v;
  };

  // a-axis seeds
  for (int a = 0; a <= p_s; ++a) {
    if (need_xi) out.xi.at(0, 0, a) = -elem.k(a + 1) / ((a + 1) * four_pi);
    if (need_z) out.xi_z.at(0, 0, a) = f.z_pj * elem.k(a - 1) / four_pi;
    if (want_kp) {
      out.xi_xp.at(0, 0, a) =
          -f.y_pj * std::pow(f.r, a + 1) / ((a + 1) * four_pi * f.rho_sq);
      out.xi_yp.at(0, 0, a) =
          (elem.i(a - 1) - s.x_d * std::pow(f.r, a + 1) / ((a + 1) * f.rho_sq)) / four_pi;
    }
    if (want_d) {
      out.xi_z_xp.at(0, 0, a) = f.z_pj * f.y_pj * std::pow(f.r, a - 1) / (four_pi * f.rho_sq);
      out.xi_z_yp.at(0, 0, a) =
          f.z_pj * (s.x_d * std::pow(f.r, a - 1) / f.rho_sq - (a - 1) * elem.i(a - 3)) /
          four_pi;
      out.xi_z_zp.at(0, 0, a) =
          (a * elem.k(a - 1) + (a - 1) * f.y_pj * elem.i(a - 3)) / four_pi;
    }
  }

  // One b- or c-direction step for every requested family at (b, c, a).
  // In the c direction the roles (x_p, i.n, alpha_x, beta_x) -> (y_p, j.n,
  // alpha_y, beta_y) swap; `cdir` selects that.
  auto advance = [&](int b, int c, int a, bool cdir) {
    const int m = cdir ? c : b;
    const double p = cdir ? f.yp : f.xp;
    const double dn = cdir ? f.jdn : f.idn;
    const double al = cdir ? f.ay : f.ax;
    const double be = cdir ? f.by : f.bx;
    const int tb = b + (cdir ? 0 : 1);
    const int tc = c + (cdir ? 1 : 0);
    const double fm = -static_cast<double>(m) / (a + 1);
    auto hom = [&](const MonomialTable<double>& t) {
      double v = p * t.at(b, c, a);
      if (m) v += fm * t.at(cdir ? b : b - 1, cdir ? c - 1 : c, a + 2);
      return v;
    };
    if (need_xi)
      out.xi.at(tb, tc, a) = hom(out.xi) + dn / ((a + 1) * four_pi) * kappa.at(b, c, a + 1);
    if (need_z)
      out.xi_z.at(tb, tc, a) = hom(out.xi_z) + dn / four_pi * f.z_d * kappa.at(b, c, a - 1);
    if (want_kp) {
      out.xi_xp.at(tb, tc, a) = hom(out.xi_xp) + al * out.xi.at(b, c, a) +
                                dn / ((a + 1) * four_pi) * kap_dxp(b, c, a + 1);
      out.xi_yp.at(tb, tc, a) = hom(out.xi_yp) + be * out.xi.at(b, c, a) -
                                dn / four_pi * f.y_dj * kappa.at(b, c, a - 1);
    }
    if (want_d) {
      double pk = -std::pow(f.x_q, b) * std::pow(f.y_q, c) * std::pow(f.r, a - 1);
      if (b) pk += f.ax * b * kappa.at(b - 1, c, a - 1);
      if (c) pk += f.ay * c * kappa.at(b, c - 1, a - 1);
      out.xi_z_xp.at(tb, tc, a) =
          hom(out.xi_z_xp) + al * out.xi_z.at(b, c, a) + dn / four_pi * f.z_d * pk;
      out.xi_z_yp.at(tb, tc, a) =
          hom(out.xi_z_yp) + be * out.xi_z.at(b, c, a) -
          dn * (a - 1) / four_pi * f.y_dj * f.z_d * kappa.at(b, c, a - 3);
      out.xi_z_zp.at(tb, tc, a) =
          hom(out.xi_z_zp) -
          dn / four_pi *
              (kappa.at(b, c, a - 1) + f.z_d * f.z_d * (a - 1) * kappa.at(b, c, a - 3));
    }
  };

  if (order == SweepOrder::axis_major) {
    // b = 0 plane in the c direction, then b sweeps per c-plane
    for (int c = 0; c < p_s; ++c)
      for (int a = 0; a < p_s - c; ++a) advance(0, c, a, true);
    for (int c = 0; c <= p_s; ++c)
      for (int b = 0; b < p_s - c; ++b)
        for (int a = 0; a < p_s - b - c; ++a) advance(b, c, a, false);
  } else {
    // ascending total degree b + c
    for (int d = 1; d <= p_s; ++d)
      for (int tb = 0; tb <= d; ++tb) {
        const int tc = d - tb;
        for (int a = 0; a <= p_s - d; ++a) {
          if (tb == 0)
            advance(0, tc - 1, a, true);
          else
            advance(tb - 1, tc, a, false);
        }
      }
  }
  return out;
}

LaplaceSingularTables laplace_singular_tables(const ProjectionInfo& proj, int p_s,
                                              unsigned pots) {
  const bool want_v = pots & pot_v;
  const bool want_k = pots & pot_k;
  const bool want_kp = pots & pot_kp;
  const bool want_d = pots & pot_d;
  const bool need_t = want_v || want_kp;
  const bool need_z = want_k || want_kp || want_d;

  const double xp = proj.x_p, yp = proj.y_p;
  const double ah = std::abs(proj.h);
  const double sg = (proj.h > 0.0) - (proj.h < 0.0);

  LaplaceSingularTables out;
  auto make = [&] { return MonomialTable<double>(p_s, 0, 0); };
  if (need_t) out.t = make();
  if (need_z) out.t_z = make();
  if (want_kp) {
    out.t_xp = make();
    out.t_yp = make();
  }
  if (want_d) {
    out.t_z_xp = make();
    out.t_z_yp = make();
    out.t_z_zp = make();
  }

  for (int a = 0; a <= p_s; ++a) {
    if (need_t) out.t.at(0, 0, a) = -std::pow(ah, a + 1) / (2.0 * (a + 1));
    // the if-h-nonzero convention; |h|^{a-1} terms fold to a|h|^{a-1}/2 exactly
    if (need_z) out.t_z.at(0, 0, a) = (ah == 0.0) ? 0.0 : sg * std::pow(ah, a) / 2.0;
    if (want_d)
      out.t_z_zp.at(0, 0, a) =
          (ah == 0.0 || a == 0) ? 0.0 : a * std::pow(ah, a - 1) / 2.0;
    // t_xp, t_yp, t_z_xp, t_z_yp seed to zero
  }

  auto advance = [&](int b, int c, int a, bool cdir) {
    const int m = cdir ? c : b;
    const double p = cdir ? yp : xp;
    const int tb = b + (cdir ? 0 : 1);
    const int tc = c + (cdir ? 1 : 0);
    const double fm = -static_cast<double>(m) / (a + 1);
    auto hom = [&](const MonomialTable<double>& t) {
      double v = p * t.at(b, c, a);
      if (m) v += fm * t.at(cdir ? b : b - 1, cdir ? c - 1 : c, a + 2);
      return v;
    };
    if (need_t) out.t.at(tb, tc, a) = hom(out.t);
    if (need_z) out.t_z.at(tb, tc, a) = hom(out.t_z);
    if (want_kp) {
      // d x_p / d x_p = 1 couples t_xp to t in the b direction, t_yp in c
      out.t_xp.at(tb, tc, a) = hom(out.t_xp) + (cdir ? 0.0 : out.t.at(b, c, a));
      out.t_yp.at(tb, tc, a) = hom(out.t_yp) + (cdir ? out.t.at(b, c, a) : 0.0);
    }
    if (want_d) {
      out.t_z_xp.at(tb, tc, a) = hom(out.t_z_xp) + (cdir ? 0.0 : out.t_z.at(b, c, a));
      out.t_z_yp.at(tb, tc, a) = hom(out.t_z_yp) + (cdir ? out.t_z.at(b, c, a) : 0.0);
      out.t_z_zp.at(tb, tc, a) = hom(out.t_z_zp);
    }
  };

  for (int c = 0; c < p_s; ++c)
    for (int a = 0; a < p_s - c; ++a) advance(0, c, a, true);
  for (int c = 0; c <= p_s; ++c)
    for (int b = 0; b < p_s - c; ++b)
      for (int a = 0; a < p_s - b - c; ++a) advance(b, c, a, false);
  return out;
}

}  // namespace ripe
