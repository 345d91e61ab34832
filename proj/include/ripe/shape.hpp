#pragma once

#include <vector>

#include "ripe/core.hpp"

namespace ripe {

// Polynomial density basis in element-frame monomial coefficients A_{b,c},
// packed with monomial_index(b, c, order). reference_coeffs, when present,
// holds the originating (u,v)-frame coefficients in the same packing.
struct ShapeSet {
  int order = 0;
  std::vector<std::vector<double>> coeffs;
  std::vector<std::vector<double>> reference_coeffs;

  int count() const { return static_cast<int>(coeffs.size()); }
  double eval(int i, double x, double y) const;
};

double eval_packed(const std::vector<double>& packed, int order, double u, double v);

// Converts reference-frame coefficients a_{b',c'} to element-frame A_{b,c}
// under (x,y)^T = Xi (u,v)^T. Degrees do not mix; each degree-d block is
// solved as a (d+1)x(d+1) Vandermonde system via Newton divided differences
// (Bjorck-Pereyra elimination). Throws SingularTransform when Xi is singular.
ShapeSet convert_reference_coeffs(const std::vector<std::vector<double>>& ref,
                                  const Mat2& xi, int p_s);

// Nodal Lagrange basis on the unit reference triangle, as packed reference
// coefficients. Node order: vertices (v1,v2,v3), then edge nodes along
// (v1v2), (v2v3), (v3v1), then (order 3) the centroid.
std::vector<std::vector<double>> lagrange_basis(int order);

}  // namespace ripe
