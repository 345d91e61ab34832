#pragma once

#include <vector>

#include "ripe/core.hpp"
#include "ripe/geometry.hpp"
#include "ripe/shape.hpp"

namespace ripe {

struct Tolerances {
  double tau_edge = 1e-10;   // barycentric width of the on-contour band
  double tau_h_rel = 1e-12;  // |h| <= tau_h_rel * D counts as in-plane
  double taylor_tol = 1e-14; // Taylor tail target for the oscillatory factor
  int p_e_max = 32;
};

struct EvalRequest {
  Vec3 v1, v2, v3;
  Vec3 r_p;
  Vec3 n_p{0.0, 0.0, 0.0};  // unit; required when K' or D is requested
  Kernel kernel = Kernel::laplace;
  double k = 0.0;
  int p_s = 0;
  unsigned potentials = pot_all;
  Tolerances tol;
};

// The four layer potentials for one density. K' and D are the n_p-derivative
// forms; D carries the operator sign -d^2 G / dn_p dn_q. Laplace results have
// zero imaginary parts.
struct PotentialQuad {
  cplx v{}, k{}, kp{}, d{};
  Kernel kernel = Kernel::laplace;
  int p_s = 0;
  int p_e_used = 0;
  bool singular_term_included = false;
};

struct MonomialPotentials {
  int p_s = 0;
  std::vector<PotentialQuad> entries;  // packed with monomial_index(b, c, p_s)

  const PotentialQuad& at(int b, int c) const {
    return entries[static_cast<size_t>(monomial_index(b, c, p_s))];
  }
};

// One run of the recursions: every monomial density x^b y^c with b+c <= p_s
// in the element frame. Throws SingularOnContour when the projection lies on
// the contour with |h| below tolerance, ExpansionNotConverged when the
// per-edge Taylor condition fails, DegenerateElement on bad geometry.
MonomialPotentials monomial_potentials(const EvalRequest& req);

// Contracts one monomial run with each shape function's coefficients.
std::vector<PotentialQuad> shape_potentials(const EvalRequest& req, const ShapeSet& shapes);

enum class Method { ripe, gauss_legendre };

// Routing advice: recursive evaluation below the switch radius, plain
// Gauss-Legendre beyond it. Both paths stay available to callers.
Method select_method(double h_over_d, double switch_radius = 2.0);

}  // namespace ripe
