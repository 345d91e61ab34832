#pragma once

namespace ripe::fixtures {

// Regression anchors for the singular configuration: element
// {(0,0,0),(1,0,0),(0,1,0)}, observation point at the centroid (h = 0),
// the six shape functions of a conforming second-order Lagrange triangle.
// `recursive` is the analytically evaluated column, `reference` the
// independent singularity-subtraction quadrature it was checked against.
// Helmholtz rows are the real parts at kD = 1 (D the max edge length).
// Hypersingular rows list the raw double-normal integral, i.e. -D in this
// library's operator sign convention.
struct TableRow {
  double recursive;
  double reference;
};

// Row i of the published tables corresponds to lagrange_basis(2) function
// basis_permutation[i] under this library's node order (v1,v2,v3,m12,m23,m13).
inline constexpr int basis_permutation[6] = {1, 2, 0, 4, 3, 5};

inline constexpr double k_times_d = 1.0;

inline constexpr TableRow laplace_single[6] = {
    {-0.0096108650741614, -0.0096108650753968},
    {-0.0096108650741614, -0.0096108650753968},
    {-0.0059161308348599, -0.0059161308348537},
    {0.0733163156462961, 0.0733163156487268},
    {0.0716914080260122, 0.0716914080259944},
    {0.0716914080260122, 0.0716914080259944},
};

inline constexpr TableRow laplace_hyper[6] = {
    {0.3411586129005689, 0.3411586129009882},
    {0.3411586129005690, 0.3411586129009879},
    {0.5031187119584526, 0.5031187119589535},
    {-0.7261344637586460, -0.7261344637604444},
    {-0.9322819538428125, -0.9322819538448199},
    {-0.9322819538428122, -0.9322819538448149},
};

inline constexpr TableRow helmholtz_single[6] = {
    {-0.0097575874677327, -0.0097575874673111},
    {-0.0097575874677327, -0.0097575874673111},
    {-0.0059358291069226, -0.0059358291069324},
    {0.0724350497721009, 0.0724350497713923},
    {0.0707990955161933, 0.0707990955162131},
    {0.0707990955161934, 0.0707990955162131},
};

inline constexpr TableRow helmholtz_hyper[6] = {
    {0.3387374371700406, 0.3387374371703727},
    {0.3387374371700407, 0.3387374371703721},
    {0.5016372264001558, 0.5016372264006584},
    {-0.7079157406214216, -0.7079157406230446},
    {-0.9144708322784949, -0.9144708322805092},
    {-0.9144708322784947, -0.9144708322805069},
};

}  // namespace ripe::fixtures
