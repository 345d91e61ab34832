#include "ripe/helmholtz.hpp"

#include <cmath>

namespace ripe {

TaylorExpansion taylor_coefficients(double k, double r0, double dr_max, double tol,
                                    int p_e_max) {
  TaylorExpansion e;
  e.k = k;
  e.r0 = r0;
  e.dr_max = dr_max;

  const double kd = std::abs(k) * dr_max;
  if (kd > 1.0 + 1e-12)
    throw ExpansionNotConverged(
        "k|r - r0| exceeds 1 on an edge; the expansion assumes elements below about "
        "one sixth of the wavelength");

  if (tol <= 0.0) {
    e.p_e = p_e_max;  // pinned order
    double t = 1.0;
    for (int p = 1; p <= p_e_max; ++p) t *= kd / p;
    e.tail = t;
  } else {
    double t = 1.0;
    int p = 0;
    for (p = 1; p <= p_e_max; ++p) {
      t *= kd / p;
      if (t <= tol) break;
    }
    if (p > p_e_max)
      throw ExpansionNotConverged("expansion order cap too small for the requested tolerance");
    e.p_e = p;
    e.tail = t;
  }

  const cplx ik(0.0, k);
  const cplx q = -ik * r0;
  const int pe = e.p_e;
  // psum[n] = sum_{m<=n} q^m / m!
  std::vector<cplx> psum(static_cast<size_t>(pe));
  cplx term = 1.0;
  psum[0] = 1.0;
  for (int n = 1; n < pe; ++n) {
    term *= q / static_cast<double>(n);
    psum[static_cast<size_t>(n)] = psum[static_cast<size_t>(n - 1)] + term;
  }
  e.a_l.resize(static_cast<size_t>(pe));
  cplx lead = 1.0;  // (ik)^l / l!
  for (int l = 0; l < pe; ++l) {
    if (l > 0) lead *= ik / static_cast<double>(l);
    e.a_l[static_cast<size_t>(l)] = lead * psum[static_cast<size_t>(pe - 1 - l)];
  }
  return e;
}

ThetaTables theta_tables(const MonomialTable<double>& kappa, const TaylorExpansion& exp,
                         const EdgeScalars& s, const ElemTables& elem, int p_s) {
  if (kappa.a_min() > -3)
    throw MissingGhostEntries("kappa table must carry ghost entries down to a = -3");
  if (kappa.a_max(0, 0) < p_s + exp.p_e - 1)
    throw MissingGhostEntries("kappa a-extent below p_s + p_e - 1");
  if (elem.m_max < p_s + exp.p_e)
    throw MissingGhostEntries("elementary tables too short for the S/U sums");
  (void)s;

  ThetaTables th;
  th.e_ikr0 = std::exp(cplx(0.0, exp.k * exp.r0));
  th.theta = MonomialTable<cplx>(p_s, -3, 0);
  const int pe = exp.p_e;
  for (int b = 0; b <= p_s; ++b)
    for (int c = 0; c <= p_s - b; ++c)
      for (int a = -3; a <= th.theta.a_max(b, c); ++a) {
        cplx acc = 0.0;
        for (int l = 0; l < pe; ++l) acc += exp.a_l[static_cast<size_t>(l)] * kappa.at(b, c, a + l);
        th.theta.at(b, c, a) = th.e_ikr0 * acc;
      }

  th.s_min = -3;
  th.s_max = p_s + 1;
  th.s_seq.resize(static_cast<size_t>(th.s_max - th.s_min + 1));
  th.u_seq.resize(th.s_seq.size());
  for (int idx = th.s_min; idx <= th.s_max; ++idx) {
    cplx sk = 0.0, su = 0.0;
    for (int l = 0; l < pe; ++l) {
      sk += exp.a_l[static_cast<size_t>(l)] * elem.k(l + idx);
      su += exp.a_l[static_cast<size_t>(l)] * elem.i(l + idx);
    }
    th.s_seq[static_cast<size_t>(idx - th.s_min)] = th.e_ikr0 / four_pi * sk;
    th.u_seq[static_cast<size_t>(idx - th.s_min)] = th.e_ikr0 / four_pi * su;
  }
  return th;
}

HelmholtzEdgeTables helmholtz_edge_tables(const EdgeScalars& s, const ThetaTables& th,
                                          const TaylorExpansion& exp, int p_s,
                                          unsigned pots) {
  const bool want_v = pots & pot_v;
  const bool want_k = pots & pot_k;
  const bool want_kp = pots & pot_kp;
  const bool want_d = pots & pot_d;
  const bool need_xi = want_v || want_kp;
  const bool need_z = want_k || want_kp || want_d;

  if ((want_kp || want_d) && s.rho_sq <= 1e-28 * s.scale * s.scale)
    throw SingularPrimitive("observation point on the edge carrier line");

  const double k = exp.k;
  const cplx ik(0.0, k);
  const cplx inv_ik = 1.0 / ik;
  const double xp = s.elem_xp, yp = s.elem_yp;
  const double ax = s.alpha_x, ay = s.alpha_y, bx = s.beta_x, by = s.beta_y;
  const double idn = s.i_dot_n, jdn = s.j_dot_n;
  const double y_pj = s.y_p, z_pj = s.z_p;
  const double y_dj = -s.y_p, z_d = -s.z_p, z_dj = -s.z_p;
  const double xd = s.x_d, r = s.r, rho2 = s.rho_sq;
  const cplx e_ikr = std::exp(cplx(0.0, k * r));

  // theta derivative accessors; zero index coefficients guard the ghost range
  auto theta = [&](int b, int c, int a) { return th.theta.at(b, c, a); };
  auto theta_z = [&](int b, int c, int a) -> cplx {
    cplx v = ik * theta(b, c, a - 1);
    if (a) v += static_cast<double>(a) * theta(b, c, a - 2);
    return z_d * v;
  };
  auto theta_xp = [&](int b, int c, int a) -> cplx {
    cplx v = -std::pow(s.x_q, b) * std::pow(s.y_q, c) * std::pow(r, a) * e_ikr;
    if (b) v += ax * b * theta(b - 1, c, a);
    if (c) v += ay * c * theta(b, c - 1, a);
    return v;
  };
  auto theta_yp = [&](int b, int c, int a) -> cplx {
    cplx v = ik * theta(b, c, a - 1);
    if (a) v += static_cast<double>(a) * theta(b, c, a - 2);
    return -y_dj * v;
  };
  auto theta_z_xp = [&](int b, int c, int a) -> cplx {
    cplx v = -std::pow(s.x_q, b) * std::pow(s.y_q, c) *
             (static_cast<double>(a) + ik * r) * std::pow(r, a - 2) * z_d * e_ikr;
    if (b) v += ax * b * theta_z(b - 1, c, a);
    if (c) v += ay * c * theta_z(b, c - 1, a);
    return v;
  };
  auto theta_z_yp = [&](int b, int c, int a) -> cplx {
    cplx v = ik * theta_z(b, c, a - 1);
    if (a) v += static_cast<double>(a) * theta_z(b, c, a - 2);
    return -y_dj * v;
  };
  auto theta_z_zp = [&](int b, int c, int a) -> cplx {
    cplx v = ik * theta_z(b, c, a - 1);
    if (a) v += static_cast<double>(a) * theta_z(b, c, a - 2);
    cplx w = ik * theta(b, c, a - 1);
    if (a) w += static_cast<double>(a) * theta(b, c, a - 2);
    return -z_dj * v - w;
  };

  HelmholtzEdgeTables out;
  auto make = [&] { return MonomialTable<cplx>(p_s, 0, 0); };
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

  // a-axis seeds and recursions
  if (need_xi) out.xi.at(0, 0, 0) = -inv_ik * th.s(0);
  if (need_z) out.xi_z.at(0, 0, 0) = -z_dj * th.s(-1);
  if (want_kp) {
    out.xi_xp.at(0, 0, 0) = -y_pj * e_ikr / (four_pi * ik * rho2);
    out.xi_yp.at(0, 0, 0) = th.u(-1) - xd * e_ikr / (four_pi * ik * rho2);
  }
  if (want_d) {
    out.xi_z_xp.at(0, 0, 0) = y_pj * z_pj * e_ikr / (four_pi * rho2 * r);
    out.xi_z_yp.at(0, 0, 0) =
        z_d * (ik * th.u(-2) - th.u(-3)) + z_pj * xd * e_ikr / (four_pi * rho2 * r);
    out.xi_z_zp.at(0, 0, 0) = th.s(-1) + z_pj * z_pj * (ik * th.s(-2) - th.s(-3));
  }
  for (int a = 0; a < p_s; ++a) {
    const cplx f = -static_cast<double>(a + 1) * inv_ik;
    if (need_xi) out.xi.at(0, 0, a + 1) = f * out.xi.at(0, 0, a) - inv_ik * th.s(a + 1);
    if (need_z)
      out.xi_z.at(0, 0, a + 1) = f * out.xi_z.at(0, 0, a) - z_d * th.s(a) -
                                 static_cast<double>(a + 1) * z_d * inv_ik * th.s(a - 1);
    if (want_kp) {
      out.xi_xp.at(0, 0, a + 1) = f * out.xi_xp.at(0, 0, a) -
                                  y_pj * std::pow(r, a + 1) * e_ikr / (four_pi * ik * rho2);
      out.xi_yp.at(0, 0, a + 1) =
          f * out.xi_yp.at(0, 0, a) + th.u(a) + static_cast<double>(a + 1) * inv_ik * th.u(a - 1) -
          xd * std::pow(r, a + 1) * e_ikr / (four_pi * ik * rho2);
    }
    if (want_d) {
      const cplx edge_pt =
          (k * r - cplx(0.0, a + 1.0)) * std::pow(r, a - 1) * e_ikr / (four_pi * k * rho2);
      out.xi_z_xp.at(0, 0, a + 1) = f * out.xi_z_xp.at(0, 0, a) + y_pj * z_pj * edge_pt;
      out.xi_z_yp.at(0, 0, a + 1) =
          f * out.xi_z_yp.at(0, 0, a) +
          z_d * (ik * th.u(a - 1) + static_cast<double>(2 * a + 1) * th.u(a - 2) +
                 static_cast<double>(a * a - 1) * inv_ik * th.u(a - 3)) +
          z_pj * xd * edge_pt;
      out.xi_z_zp.at(0, 0, a + 1) =
          f * out.xi_z_zp.at(0, 0, a) + th.s(a) +
          (static_cast<double>(a + 1) * inv_ik + z_d * z_d * ik) * th.s(a - 1) +
          z_d * z_d * (static_cast<double>(2 * a + 1) * th.s(a - 2) +
                       static_cast<double>(a * a - 1) * inv_ik * th.s(a - 3));
    }
  }

  // one b- or c-direction step; entry (b+1,c,a) references (b+1,c,a-1), so a
  // ascends within each target column
  auto advance = [&](int b, int c, int a, bool cdir) {
    const int m = cdir ? c : b;
    const double p = cdir ? yp : xp;
    const double dn = cdir ? jdn : idn;
    const double al = cdir ? ay : ax;
    const double be = cdir ? by : bx;
    const int tb = b + (cdir ? 0 : 1);
    const int tc = c + (cdir ? 1 : 0);
    const int pb = cdir ? b : b - 1;  // previous column in the sweep direction
    const int pc = cdir ? c - 1 : c;
    const double ad = static_cast<double>(a);
    auto hom = [&](const MonomialTable<cplx>& t) {
      cplx v = p * t.at(b, c, a);
      if (m) v -= static_cast<double>(m) * inv_ik * t.at(pb, pc, a + 1);
      if (a) v += ad * inv_ik * (p * t.at(b, c, a - 1) - t.at(tb, tc, a - 1));
      return v;
    };
    // base-family coupling for the derivative recursions
    auto coup = [&](const MonomialTable<cplx>& base, double cf) {
      cplx v = cf * base.at(b, c, a);
      if (a) v += ad * cf * inv_ik * base.at(b, c, a - 1);
      return v;
    };
    const cplx dnik = dn * inv_ik / four_pi;
    if (need_xi) out.xi.at(tb, tc, a) = hom(out.xi) + dnik * theta(b, c, a);
    if (need_z) out.xi_z.at(tb, tc, a) = hom(out.xi_z) + dnik * theta_z(b, c, a);
    if (want_kp) {
      out.xi_xp.at(tb, tc, a) =
          hom(out.xi_xp) + coup(out.xi, al) + dnik * theta_xp(b, c, a);
      out.xi_yp.at(tb, tc, a) =
          hom(out.xi_yp) + coup(out.xi, be) + dnik * theta_yp(b, c, a);
    }
    if (want_d) {
      out.xi_z_xp.at(tb, tc, a) =
          hom(out.xi_z_xp) + coup(out.xi_z, al) + dnik * theta_z_xp(b, c, a);
      out.xi_z_yp.at(tb, tc, a) =
          hom(out.xi_z_yp) + coup(out.xi_z, be) + dnik * theta_z_yp(b, c, a);
      out.xi_z_zp.at(tb, tc, a) = hom(out.xi_z_zp) + dnik * theta_z_zp(b, c, a);
    }
  };

  for (int c = 0; c < p_s; ++c)
    for (int a = 0; a < p_s - c; ++a) advance(0, c, a, true);
  for (int c = 0; c <= p_s; ++c)
    for (int b = 0; b < p_s - c; ++b)
      for (int a = 0; a < p_s - b - c; ++a) advance(b, c, a, false);
  return out;
}

HelmholtzSingularTables helmholtz_singular_tables(const ProjectionInfo& proj, double k,
                                                  int p_s, unsigned pots) {
  const bool want_v = pots & pot_v;
  const bool want_k = pots & pot_k;
  const bool want_kp = pots & pot_kp;
  const bool want_d = pots & pot_d;
  const bool need_t = want_v || want_kp;
  const bool need_z = want_k || want_kp || want_d;

  const double xp = proj.x_p, yp = proj.y_p;
  const double ah = std::abs(proj.h);
  const double sg = (proj.h > 0.0) - (proj.h < 0.0);
  const cplx ik(0.0, k);
  const cplx inv_ik = 1.0 / ik;
  const cplx eh = std::exp(cplx(0.0, k * ah));

  HelmholtzSingularTables out;
  auto make = [&] { return MonomialTable<cplx>(p_s, 0, 0); };
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

  // a-axis: T from its recursion (valid from a = -1), T^(z) and T^(z,z_p)
  // with the h = 0 zero conventions; T^(x_p), T^(y_p) a-axes vanish
  if (need_t) out.t.at(0, 0, 0) = cplx(0.0, 1.0) * eh / (2.0 * k);
  if (need_z) out.t_z.at(0, 0, 0) = (ah == 0.0) ? cplx(0.0) : sg * eh / 2.0;
  if (want_d) out.t_z_zp.at(0, 0, 0) = ik * eh / 2.0;
  for (int a = 0; a < p_s; ++a) {
    const cplx f = -static_cast<double>(a + 1) * inv_ik;
    if (need_t)
      out.t.at(0, 0, a + 1) = f * out.t.at(0, 0, a) - std::pow(ah, a + 1) * eh / (2.0 * ik);
    if (need_z)
      out.t_z.at(0, 0, a + 1) =
          f * out.t_z.at(0, 0, a) -
          sg * std::pow(ah, a) * (cplx(0.0, a + 1.0) - k * ah) * eh / (2.0 * k);
    if (want_d) {
      cplx bracket = -2.0 * (a + 1) * k * std::pow(ah, a) - ik * k * std::pow(ah, a + 1);
      if (a > 0) bracket += cplx(0.0, 1.0) * static_cast<double>(a * (a + 1)) * std::pow(ah, a - 1);
      out.t_z_zp.at(0, 0, a + 1) = f * out.t_z_zp.at(0, 0, a) - eh / (2.0 * k) * bracket;
    }
  }

  auto advance = [&](int b, int c, int a, bool cdir) {
    const int m = cdir ? c : b;
    const double p = cdir ? yp : xp;
    const int tb = b + (cdir ? 0 : 1);
    const int tc = c + (cdir ? 1 : 0);
    const int pb = cdir ? b : b - 1;
    const int pc = cdir ? c - 1 : c;
    const double ad = static_cast<double>(a);
    auto hom = [&](const MonomialTable<cplx>& t) {
      cplx v = p * t.at(b, c, a);
      if (m) v -= static_cast<double>(m) * inv_ik * t.at(pb, pc, a + 1);
      if (a) v += ad * inv_ik * (p * t.at(b, c, a - 1) - t.at(tb, tc, a - 1));
      return v;
    };
    // inhomogeneous coupling of T^(x_p) to T in the b direction (resp.
    // T^(y_p) in c), and of the (z,.) pair to T^(z)
    auto coup = [&](const MonomialTable<cplx>& base) {
      cplx v = base.at(b, c, a);
      if (a) v += ad * inv_ik * base.at(b, c, a - 1);
      return v;
    };
    if (need_t) out.t.at(tb, tc, a) = hom(out.t);
    if (need_z) out.t_z.at(tb, tc, a) = hom(out.t_z);
    if (want_kp) {
      out.t_xp.at(tb, tc, a) = hom(out.t_xp) + (cdir ? cplx(0.0) : coup(out.t));
      out.t_yp.at(tb, tc, a) = hom(out.t_yp) + (cdir ? coup(out.t) : cplx(0.0));
    }
    if (want_d) {
      out.t_z_xp.at(tb, tc, a) = hom(out.t_z_xp) + (cdir ? cplx(0.0) : coup(out.t_z));
      out.t_z_yp.at(tb, tc, a) = hom(out.t_z_yp) + (cdir ? coup(out.t_z) : cplx(0.0));
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
