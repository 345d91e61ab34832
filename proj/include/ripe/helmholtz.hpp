#pragma once

#include <vector>

#include "ripe/elementary.hpp"
#include "ripe/geometry.hpp"
#include "ripe/kappa.hpp"
#include "ripe/monomial_table.hpp"

namespace ripe {

// Truncated Taylor expansion of e^{ikr} about r = r0:
//   e^{ikr} ~ e^{ikr0} sum_l A_l (r)^l ... folded so that
//   theta_{b,c,a} = e^{ikr0} sum_l A_l kappa_{b,c,a+l}.
struct TaylorExpansion {
  double k = 0.0;
  double r0 = 0.0;
  double dr_max = 0.0;
  int p_e = 0;
  std::vector<cplx> a_l;
  double tail = 0.0;  // magnitude estimate of the first dropped term
};

// Picks the smallest order whose tail estimate |k dr|^p / p! meets tol.
// Throws ExpansionNotConverged when |k dr| > 1 or p_e_max is insufficient.
TaylorExpansion taylor_coefficients(double k, double r0, double dr_max, double tol,
                                    int p_e_max);

// theta_{b,c,a} = int x^b y^c r^a e^{ikr} dx^j by direct convolution of the
// Taylor coefficients with kappa along a, plus the S/U sums over the
// elementary sequences. s_seq[s - s_min] = S_s, likewise u_seq.
struct ThetaTables {
  MonomialTable<cplx> theta;
  std::vector<cplx> s_seq, u_seq;
  int s_min = 0, s_max = 0;
  cplx e_ikr0;

  cplx s(int idx) const { return s_seq[static_cast<size_t>(idx - s_min)]; }
  cplx u(int idx) const { return u_seq[static_cast<size_t>(idx - s_min)]; }
};

ThetaTables theta_tables(const MonomialTable<double>& kappa, const TaylorExpansion& exp,
                         const EdgeScalars& s, const ElemTables& elem, int p_s);

struct HelmholtzEdgeTables {
  MonomialTable<cplx> xi;
  MonomialTable<cplx> xi_z;
  MonomialTable<cplx> xi_xp, xi_yp;
  MonomialTable<cplx> xi_z_xp, xi_z_yp, xi_z_zp;
};

HelmholtzEdgeTables helmholtz_edge_tables(const EdgeScalars& s, const ThetaTables& th,
                                          const TaylorExpansion& exp, int p_s,
                                          unsigned pots = pot_all);

struct HelmholtzSingularTables {
  MonomialTable<cplx> t;
  MonomialTable<cplx> t_z;
  MonomialTable<cplx> t_xp, t_yp;
  MonomialTable<cplx> t_z_xp, t_z_yp, t_z_zp;
};

HelmholtzSingularTables helmholtz_singular_tables(const ProjectionInfo& proj, double k,
                                                  int p_s, unsigned pots = pot_all);

}  // namespace ripe
