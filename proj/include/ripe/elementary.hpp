#pragma once

#include <vector>

#include "ripe/core.hpp"

namespace ripe {

// Primitive sequences
//   i_m(x; a)      = int r^m dx,                r = sqrt(x^2 + a^2)
//   k_m(x; y', z') = z' int r^m / (x^2 + z'^2) dx, r = sqrt(x^2 + y'^2 + z'^2)
// evaluated at one x. Both parities are always filled. In edge-frame terms the
// recursions use i_m(x_d; gamma) and k_m(x_d; z_p^j, -y_p^j).
struct ElemTables {
  static constexpr int i_lowest = -5;
  static constexpr int k_lowest = -3;

  int m_max = 0;
  double x = 0.0, a = 0.0;               // i arguments
  double y_prime = 0.0, z_prime = 0.0;   // k arguments
  bool has_k = false;
  bool degraded = false;                 // a clamped log argument was hit

  std::vector<double> iv, kv;

  double i(int m) const { return iv[static_cast<size_t>(m - i_lowest)]; }
  double k(int m) const { return kv[static_cast<size_t>(m - k_lowest)]; }
};

ElemTables i_table(double x, double a, int m_max);
ElemTables k_table(double x, double y_prime, double z_prime, int m_max);

// Derivatives of i_l and k_l with respect to the edge-frame coordinates
// (x_p^j, y_p^j, z_p^j) of the observation point, at fixed endpoint.
// The tables must come from k_table so the generating scalars are present.
double di_dxp(const ElemTables& t, int l);
double di_dyp(const ElemTables& t, int l);
double di_dzp(const ElemTables& t, int l);
double dk_dxp(const ElemTables& t, int l);
double dk_dyp(const ElemTables& t, int l);
double dk_dzp(const ElemTables& t, int l);

}  // namespace ripe
