#pragma once

#include "ripe/elementary.hpp"
#include "ripe/geometry.hpp"
#include "ripe/monomial_table.hpp"

namespace ripe {

// kappa_{b,c,a} = int x^b y^c r^a dx^j, the edge primitives of the monomial
// weights, with x, y element-frame coordinates of the running edge point.
// Ghost entries a = -1, -2, -3 are always carried so the derivative families
// can reach a-3. a_extra widens the a range per column for the oscillatory
// convolution (a up to max_bc - b - c + a_extra).
MonomialTable<double> kappa_table(const EdgeScalars& s, const ElemTables& elem,
                                  int max_bc, int a_extra = 0);

enum class KappaDeriv { xp, yp, z, z_xp };

// Derivative tables from the closed relations; errors with MissingGhostEntries
// if the base table does not reach far enough down in a.
MonomialTable<double> kappa_derivatives(const MonomialTable<double>& kappa,
                                        const EdgeScalars& s, KappaDeriv which);

}  // namespace ripe
