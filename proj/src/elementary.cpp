#include "ripe/elementary.hpp"

#include <algorithm>
#include <cmath>

namespace ripe {

namespace {

constexpr double tau_rel = 1e-12;   // degenerate-branch switch
constexpr double tau_log = 1e-300;  // log-argument clamp

// log(r + x) evaluated through the conjugate form for x < 0, where r + x
// suffers cancellation (r + x = a^2 / (r - x)).
double log_r_plus_x(double x, double a, double r, bool& degraded) {
  double arg = (x >= 0.0) ? r + x : (a * a) / (r - x);
  if (arg < tau_log) {
    arg = tau_log;
    degraded = true;
  }
  return std::log(arg);
}

}  // namespace

ElemTables i_table(double x, double a, int m_max) {
  m_max = std::max(m_max, 0);  // closed forms always fill m <= 0
  ElemTables t;
  t.m_max = m_max;
  t.x = x;
  t.a = a;
  t.iv.assign(static_cast<size_t>(m_max - ElemTables::i_lowest + 1), 0.0);
  auto I = [&](int m) -> double& { return t.iv[static_cast<size_t>(m - ElemTables::i_lowest)]; };

  const double scale = std::max(std::abs(x), a);
  if (a <= tau_rel * scale) {
    // a = 0: i_m(x;0) = x|x|^m/(m+1), i_{-1} = sgn(x) log|x|
    if (std::abs(x) < tau_log)
      throw SingularPrimitive("i_m undefined at x = 0, a = 0");
    for (int m = ElemTables::i_lowest; m <= m_max; ++m) {
      if (m == -1) {
        I(m) = (x > 0 ? 1.0 : -1.0) * std::log(std::abs(x));
      } else {
        I(m) = x * std::pow(std::abs(x), m) / (m + 1);
      }
    }
    return t;
  }

  const double r = std::sqrt(x * x + a * a);
  I(0) = x;
  I(-1) = log_r_plus_x(x, a, r, t.degraded);
  I(-2) = std::atan(x / a) / a;
  I(-3) = x / (a * a * r);
  // downward to -5: i_m = (m+3)/((m+2) a^2) (i_{m+2} - x r^{m+2}/(m+3))
  for (int m = -4; m >= ElemTables::i_lowest; --m)
    I(m) = (I(m + 2) - x * std::pow(r, m + 2) / (m + 3)) * (m + 3) / ((m + 2) * a * a);
  // upward, even chain seeded at m=0 and odd chain at m=-1
  for (int m = -1; m <= m_max - 2; ++m)
    I(m + 2) = x * std::pow(r, m + 2) / (m + 3) + (m + 2) * a * a * I(m) / (m + 3);
  return t;
}

ElemTables k_table(double x, double y_prime, double z_prime, int m_max) {
  m_max = std::max(m_max, 1);  // closed-form seeds fill m <= 1
  const double a = std::hypot(y_prime, z_prime);
  ElemTables t = i_table(x, a, m_max);
  t.has_k = true;
  t.y_prime = y_prime;
  t.z_prime = z_prime;
  t.kv.assign(static_cast<size_t>(m_max - ElemTables::k_lowest + 1), 0.0);
  auto K = [&](int m) -> double& { return t.kv[static_cast<size_t>(m - ElemTables::k_lowest)]; };

  const double scale = std::max({std::abs(x), std::abs(y_prime), std::abs(z_prime)});
  if (std::abs(z_prime) <= tau_rel * scale || scale == 0.0) {
    // zero prefactor; the 1/(x^2+z'^2) pole must not sit at this endpoint
    if (std::abs(x) <= tau_rel * scale || scale == 0.0)
      throw SingularPrimitive("k_m: edge line passes through the evaluation point");
    return t;  // k_m = 0
  }

  if (std::abs(y_prime) <= tau_rel * scale) {
    // reduction k_m(x;0,z') = z' i_{m-2}(x;|z'|)
    const ElemTables iz = i_table(x, std::abs(z_prime), m_max);
    t.degraded = t.degraded || iz.degraded;
    for (int m = ElemTables::k_lowest; m <= m_max; ++m)
      K(m) = z_prime * iz.i(m - 2);
    return t;
  }

  const double r = std::sqrt(x * x + a * a);
  const double az = std::abs(z_prime);
  K(-1) = z_prime / (y_prime * az) * std::atan(y_prime * x / (az * r));
  K(0) = z_prime / az * std::atan(x / az);
  K(1) = y_prime * z_prime / az * std::atan(y_prime * x / (az * r)) +
         z_prime * log_r_plus_x(x, a, r, t.degraded);
  // downward: k_m = (k_{m+2} - z' i_m) / y'^2
  K(-2) = (K(0) - z_prime * t.i(-2)) / (y_prime * y_prime);
  K(-3) = (K(-1) - z_prime * t.i(-3)) / (y_prime * y_prime);
  // upward: k_{m+2} = z' i_m + y'^2 k_m
  for (int m = -1; m <= m_max - 2; ++m)
    K(m + 2) = z_prime * t.i(m) + y_prime * y_prime * K(m);
  return t;
}

// The edge recursions build the tables with x = x_d^j, y' = z_p^j,
// z' = -y_p^j, so below y_p^j = -z', z_p^j = y' and rho^2 = x^2 + z'^2.

namespace {
double table_r(const ElemTables& t) { return std::sqrt(t.x * t.x + t.a * t.a); }
double table_rho_sq(const ElemTables& t) { return t.x * t.x + t.z_prime * t.z_prime; }
}  // namespace

double di_dxp(const ElemTables& t, int l) { return -std::pow(table_r(t), l); }

double di_dyp(const ElemTables& t, int l) {
  return l == 0 ? 0.0 : l * (-t.z_prime) * t.i(l - 2);
}

double di_dzp(const ElemTables& t, int l) {
  return l == 0 ? 0.0 : l * t.y_prime * t.i(l - 2);
}

double dk_dxp(const ElemTables& t, int l) {
  return (-t.z_prime) * std::pow(table_r(t), l) / table_rho_sq(t);
}

double dk_dyp(const ElemTables& t, int l) {
  return t.x * std::pow(table_r(t), l) / table_rho_sq(t) -
         (l == 0 ? 0.0 : l * t.i(l - 2));
}

double dk_dzp(const ElemTables& t, int l) {
  return l == 0 ? 0.0 : l * t.y_prime * t.k(l - 2);
}

}  // namespace ripe
