#pragma once

#include <array>
#include <functional>
#include <vector>

#include "ripe/core.hpp"
#include "ripe/geometry.hpp"

namespace ripe {

// Quadrature rule on the reference triangle. Nodes in barycentric coordinates,
// weights normalized to sum to 1: int_T f dS = area(T) * sum_i w_i f(node_i).
struct TriangleRule {
  int order = 0;
  std::vector<std::array<double, 3>> nodes;
  std::vector<double> weights;
};

// Collapsed tensor-product rule, exact for total degree <= order, positive
// weights. order >= 1.
TriangleRule gl_triangle(int order);

// n-point Gauss-Legendre rule on [0, 1].
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights);

enum class PotentialKind { V, K, Kp, D };

// Kernel-times-density integrand of one layer potential at surface point q.
cplx potential_integrand(Kernel kernel, double k, PotentialKind pot, const Vec3& r_p,
                         const Vec3& n_p, const Vec3& q, const Vec3& n_q);

struct AdaptiveResult {
  cplx value{};
  double error_estimate = 0.0;
  long subdivisions = 0;
  bool converged = false;
};

struct AdaptiveOptions {
  long max_leaves = 200000;
  double tau_edge = 1e-10;
  double tau_h_rel = 1e-12;
};

using DensityFn = std::function<double(double, double)>;  // element-frame (x, y)

// Reference integrator: recursive triangle subdivision driven by a two-rule
// error estimate, with the initial mesh fanned around the projection point
// when it falls on the element (this is the polar split that makes the
// on-element single layer integrable leaf by leaf). Non-convergence is
// reported, never silently accepted.
AdaptiveResult adaptive_potential(const ElementGeometry& geom, const DensityFn& density,
                                  Kernel kernel, double k, PotentialKind pot,
                                  const Vec3& r_p, const Vec3& n_p, double rel_tol,
                                  const AdaptiveOptions& opt = {});

// Fixed-rule evaluation over the whole element (the far-field comparator).
cplx rule_potential(const ElementGeometry& geom, const TriangleRule& rule,
                    const DensityFn& density, Kernel kernel, double k, PotentialKind pot,
                    const Vec3& r_p, const Vec3& n_p);

struct LineResult {
  cplx value{};
  double error_estimate = 0.0;
  bool converged = false;
};

// Adaptive 1-D integration by panel bisection with an embedded pair.
LineResult adaptive_line(const std::function<cplx(double)>& f, double a, double b,
                         double tol, int max_depth = 48);

}  // namespace ripe
