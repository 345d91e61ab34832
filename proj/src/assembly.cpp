#include "ripe/assembly.hpp"

#include <algorithm>
#include <cmath>

#include "ripe/elementary.hpp"
#include "ripe/helmholtz.hpp"
#include "ripe/kappa.hpp"
#include "ripe/laplace.hpp"

namespace ripe {

namespace {

// largest |r - r0| over a straight edge: r is convex in the edge coordinate,
// so the max sits at an endpoint and the min either inside (at gamma) or at
// an endpoint
double edge_dr_max(const EdgeScalars& s_start, const EdgeScalars& s_end) {
  const double r0 = s_start.r;
  const double r_end = s_end.r;
  double r_min = std::min(r0, r_end);
  if (s_start.x_p >= 0.0 && s_start.x_p <= s_start.edge_length)
    r_min = std::sqrt(s_start.gamma_sq);
  return std::max(r_end - r0, r0 - r_min);
}

struct EdgeBasis {
  Vec3 dir, in_plane;
};

}  // namespace

MonomialPotentials monomial_potentials(const EvalRequest& req) {
  const ElementGeometry geom(req.v1, req.v2, req.v3);
  const ProjectionInfo proj = project_point(geom, req.r_p, req.tol.tau_edge);
  const double d_len = geom.max_edge_length();

  const bool want_kp = req.potentials & pot_kp;
  const bool want_d = req.potentials & pot_d;
  if ((want_kp || want_d) && std::abs(norm(req.n_p) - 1.0) > 1e-12)
    throw std::invalid_argument("n_p must be a unit vector when K' or D is requested");

  if (proj.location == Location::on_contour && std::abs(proj.h) <= req.tol.tau_h_rel * d_len)
    throw SingularOnContour(
        "projection of the observation point lies on the element contour; subdivide the "
        "element or perturb the collocation point");

  const bool helm = req.kernel == Kernel::helmholtz && req.k != 0.0;
  const bool interior = proj.location == Location::strict_interior;
  const int p_s = req.p_s;

  MonomialPotentials out;
  out.p_s = p_s;
  out.entries.assign(static_cast<size_t>(monomial_count(p_s)), PotentialQuad{});

  int p_e_used = 0;
  auto accumulate = [&](auto&& value_of) {
    for (int b = 0; b <= p_s; ++b)
      for (int c = 0; c <= p_s - b; ++c) {
        PotentialQuad& q = out.entries[static_cast<size_t>(monomial_index(b, c, p_s))];
        value_of(b, c, q);
      }
  };

  for (int j = 0; j < 3; ++j) {
    const EdgeScalars ss = edge_scalars(geom, req.r_p, j, Endpoint::start);
    const EdgeScalars se = edge_scalars(geom, req.r_p, j, Endpoint::finish);
    const EdgeFrame& ef = geom.edge(j);
    const double ni = want_kp || want_d ? dot(req.n_p, ef.dir) : 0.0;
    const double nj = want_kp || want_d ? dot(req.n_p, ef.in_plane) : 0.0;
    const double nk = want_kp || want_d ? dot(req.n_p, geom.k_hat()) : 0.0;

    if (helm) {
      const TaylorExpansion exp = taylor_coefficients(
          req.k, ss.r0, edge_dr_max(ss, se), req.tol.taylor_tol, req.tol.p_e_max);
      p_e_used = std::max(p_e_used, exp.p_e);
      const int m_max = p_s + exp.p_e + 1;
      const ElemTables el_s = k_table(ss.x_d, ss.z_p, -ss.y_p, m_max);
      const ElemTables el_e = k_table(se.x_d, se.z_p, -se.y_p, m_max);
      const auto kap_s = kappa_table(ss, el_s, p_s, exp.p_e - 1);
      const auto kap_e = kappa_table(se, el_e, p_s, exp.p_e - 1);
      const auto th_s = theta_tables(kap_s, exp, ss, el_s, p_s);
      const auto th_e = theta_tables(kap_e, exp, se, el_e, p_s);
      const auto t_s = helmholtz_edge_tables(ss, th_s, exp, p_s, req.potentials);
      const auto t_e = helmholtz_edge_tables(se, th_e, exp, p_s, req.potentials);
      accumulate([&](int b, int c, PotentialQuad& q) {
        if (req.potentials & pot_v) q.v += t_e.xi.at(b, c, 0) - t_s.xi.at(b, c, 0);
        const cplx dz = (req.potentials & (pot_k | pot_kp | pot_d))
                            ? t_e.xi_z.at(b, c, 0) - t_s.xi_z.at(b, c, 0)
                            : cplx(0.0);
        if (req.potentials & pot_k) q.k += dz;
        if (want_kp)
          q.kp += ni * (t_e.xi_xp.at(b, c, 0) - t_s.xi_xp.at(b, c, 0)) +
                  nj * (t_e.xi_yp.at(b, c, 0) - t_s.xi_yp.at(b, c, 0)) + nk * (-dz);
        if (want_d)
          q.d -= ni * (t_e.xi_z_xp.at(b, c, 0) - t_s.xi_z_xp.at(b, c, 0)) +
                 nj * (t_e.xi_z_yp.at(b, c, 0) - t_s.xi_z_yp.at(b, c, 0)) +
                 nk * (t_e.xi_z_zp.at(b, c, 0) - t_s.xi_z_zp.at(b, c, 0));
      });
    } else {
      const int m_max = p_s + 2;
      const ElemTables el_s = k_table(ss.x_d, ss.z_p, -ss.y_p, m_max);
      const ElemTables el_e = k_table(se.x_d, se.z_p, -se.y_p, m_max);
      const auto kap_s = kappa_table(ss, el_s, p_s, 0);
      const auto kap_e = kappa_table(se, el_e, p_s, 0);
      const auto t_s = laplace_edge_tables(ss, kap_s, el_s, p_s, req.potentials);
      const auto t_e = laplace_edge_tables(se, kap_e, el_e, p_s, req.potentials);
      accumulate([&](int b, int c, PotentialQuad& q) {
        if (req.potentials & pot_v) q.v += t_e.xi.at(b, c, 0) - t_s.xi.at(b, c, 0);
        const double dz = (req.potentials & (pot_k | pot_kp | pot_d))
                              ? t_e.xi_z.at(b, c, 0) - t_s.xi_z.at(b, c, 0)
                              : 0.0;
        if (req.potentials & pot_k) q.k += dz;
        if (want_kp)
          q.kp += ni * (t_e.xi_xp.at(b, c, 0) - t_s.xi_xp.at(b, c, 0)) +
                  nj * (t_e.xi_yp.at(b, c, 0) - t_s.xi_yp.at(b, c, 0)) + nk * (-dz);
        if (want_d)
          q.d -= ni * (t_e.xi_z_xp.at(b, c, 0) - t_s.xi_z_xp.at(b, c, 0)) +
                 nj * (t_e.xi_z_yp.at(b, c, 0) - t_s.xi_z_yp.at(b, c, 0)) +
                 nk * (t_e.xi_z_zp.at(b, c, 0) - t_s.xi_z_zp.at(b, c, 0));
      });
    }
  }

  if (interior) {
    const double ni = (want_kp || want_d) ? dot(req.n_p, geom.i_hat()) : 0.0;
    const double nj = (want_kp || want_d) ? dot(req.n_p, geom.j_hat()) : 0.0;
    const double nk = (want_kp || want_d) ? dot(req.n_p, geom.k_hat()) : 0.0;
    if (helm) {
      const auto st = helmholtz_singular_tables(proj, req.k, p_s, req.potentials);
      accumulate([&](int b, int c, PotentialQuad& q) {
        if (req.potentials & pot_v) q.v += st.t.at(b, c, 0);
        if (req.potentials & pot_k) q.k += st.t_z.at(b, c, 0);
        if (want_kp)
          q.kp += ni * st.t_xp.at(b, c, 0) + nj * st.t_yp.at(b, c, 0) +
                  nk * (-st.t_z.at(b, c, 0));
        if (want_d)
          q.d -= ni * st.t_z_xp.at(b, c, 0) + nj * st.t_z_yp.at(b, c, 0) +
                 nk * st.t_z_zp.at(b, c, 0);
      });
    } else {
      const auto st = laplace_singular_tables(proj, p_s, req.potentials);
      accumulate([&](int b, int c, PotentialQuad& q) {
        if (req.potentials & pot_v) q.v += st.t.at(b, c, 0);
        if (req.potentials & pot_k) q.k += st.t_z.at(b, c, 0);
        if (want_kp)
          q.kp += ni * st.t_xp.at(b, c, 0) + nj * st.t_yp.at(b, c, 0) +
                  nk * (-st.t_z.at(b, c, 0));
        if (want_d)
          q.d -= ni * st.t_z_xp.at(b, c, 0) + nj * st.t_z_yp.at(b, c, 0) +
                 nk * st.t_z_zp.at(b, c, 0);
      });
    }
  }

  for (PotentialQuad& q : out.entries) {
    q.kernel = helm ? Kernel::helmholtz : Kernel::laplace;
    q.p_s = p_s;
    q.p_e_used = p_e_used;
    q.singular_term_included = interior;
  }
  return out;
}

std::vector<PotentialQuad> shape_potentials(const EvalRequest& req, const ShapeSet& shapes) {
  EvalRequest r = req;
  r.p_s = std::max(req.p_s, shapes.order);
  const MonomialPotentials mono = monomial_potentials(r);
  std::vector<PotentialQuad> out;
  out.reserve(shapes.coeffs.size());
  for (const auto& coef : shapes.coeffs) {
    PotentialQuad q;
    q.kernel = mono.entries.front().kernel;
    q.p_s = mono.p_s;
    q.p_e_used = mono.entries.front().p_e_used;
    q.singular_term_included = mono.entries.front().singular_term_included;
    for (int b = 0; b <= shapes.order; ++b)
      for (int c = 0; c <= shapes.order - b; ++c) {
        const double a = coef[static_cast<size_t>(monomial_index(b, c, shapes.order))];
        if (a == 0.0) continue;
        const PotentialQuad& m = mono.at(b, c);
        q.v += a * m.v;
        q.k += a * m.k;
        q.kp += a * m.kp;
        q.d += a * m.d;
      }
    out.push_back(q);
  }
  return out;
}

Method select_method(double h_over_d, double switch_radius) {
  return h_over_d < switch_radius ? Method::ripe : Method::gauss_legendre;
}

}  // namespace ripe
