#pragma once

#include "ripe/elementary.hpp"
#include "ripe/geometry.hpp"
#include "ripe/kappa.hpp"
#include "ripe/monomial_table.hpp"

namespace ripe {

enum class SweepOrder {
  axis_major,    // a-axis, then c on the b=0 plane, then b per c-plane
  degree_major,  // ascending b+c, for truncated-order early exit
};

// Per-edge, per-endpoint primitive tables for the Laplace kernel. xi feeds the
// single layer; the suffixed families are the z / x_p^j / y_p^j derivative
// tables for the double, adjoint and hypersingular layers. xi^(z_p^j) is not
// stored: it equals -xi_z entry-wise.
struct LaplaceEdgeTables {
  MonomialTable<double> xi;
  MonomialTable<double> xi_z;
  MonomialTable<double> xi_xp, xi_yp;
  MonomialTable<double> xi_z_xp, xi_z_yp, xi_z_zp;
};

LaplaceEdgeTables laplace_edge_tables(const EdgeScalars& s,
                                      const MonomialTable<double>& kappa,
                                      const ElemTables& elem, int p_s,
                                      unsigned pots = pot_all,
                                      SweepOrder order = SweepOrder::axis_major);

// Singularity terms T for the contour integral around the projection point,
// in element-frame (x_p, y_p, h) variables. Valid for any h; added by the
// assembly only when the projection is strictly interior.
struct LaplaceSingularTables {
  MonomialTable<double> t;
  MonomialTable<double> t_z;
  MonomialTable<double> t_xp, t_yp;
  MonomialTable<double> t_z_xp, t_z_yp, t_z_zp;
};

LaplaceSingularTables laplace_singular_tables(const ProjectionInfo& proj, int p_s,
                                              unsigned pots = pot_all);

}  // namespace ripe
