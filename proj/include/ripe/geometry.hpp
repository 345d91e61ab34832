#pragma once

#include <array>

#include "ripe/core.hpp"

namespace ripe {

// Orthonormal frame attached to edge j, with origin at the edge start vertex.
// dir lies along the edge, in_plane completes the right-handed frame with the
// face normal; the outward in-plane edge normal is -in_plane.
struct EdgeFrame {
  Vec3 start, finish;
  Vec3 dir;       // i^j
  Vec3 in_plane;  // j^j = k x i^j
  double length = 0.0;
  // edge frame -> element frame: x = alpha_x x^j + beta_x y^j + gamma_x,
  //                              y = alpha_y x^j + beta_y y^j + gamma_y, z = z^j
  double alpha_x = 0.0, alpha_y = 0.0;
  double beta_x = 0.0, beta_y = 0.0;
  double gamma_x = 0.0, gamma_y = 0.0;
};

// Flat triangle with its element frame (origin at v1, i along v2-v1, k the
// face normal) and the three edge frames. Immutable after construction.
class ElementGeometry {
 public:
  static constexpr double area_epsilon = 1e-12;  // relative to D^2

  ElementGeometry(const Vec3& v1, const Vec3& v2, const Vec3& v3);

  const Vec3& vertex(int i) const { return v_[i]; }
  const Vec3& i_hat() const { return i_; }
  const Vec3& j_hat() const { return j_; }
  const Vec3& k_hat() const { return k_; }
  const EdgeFrame& edge(int j) const { return edges_[j]; }
  double max_edge_length() const { return max_edge_; }
  double area() const { return area_; }
  // reference (u,v) -> element (x,y)
  const Mat2& xi() const { return xi_; }

  Vec3 to_global(double x, double y, double z = 0.0) const {
    return v_[0] + x * i_ + y * j_ + z * k_;
  }
  std::array<double, 3> element_coords(const Vec3& p) const {
    const Vec3 d = p - v_[0];
    return {dot(d, i_), dot(d, j_), dot(d, k_)};
  }

 private:
  Vec3 v_[3];
  Vec3 i_, j_, k_;
  EdgeFrame edges_[3];
  Mat2 xi_;
  double max_edge_ = 0.0, area_ = 0.0;
};

enum class Location { strict_interior, strict_exterior, on_contour };

struct ProjectionInfo {
  double x_p = 0.0, y_p = 0.0;  // element-frame coordinates of the projection
  double h = 0.0;               // signed height of r_p above the plane
  Location location = Location::strict_exterior;
  std::array<double, 3> barycentric{};
};

ProjectionInfo project_point(const ElementGeometry& geom, const Vec3& r_p,
                             double tau_edge = 1e-10);

enum class Endpoint { start, finish };

// Everything the per-edge recursions consume, evaluated at one endpoint of
// one edge. All quantities in the edge frame unless stated otherwise.
struct EdgeScalars {
  int edge = 0;
  double x_end = 0.0;             // endpoint coordinate x^j (0 or the edge length)
  double x_p = 0.0, y_p = 0.0, z_p = 0.0;  // observation point in the edge frame
  double x_d = 0.0;               // x^j - x_p^j
  double r = 0.0;                 // distance endpoint -> observation point
  double rho_sq = 0.0;            // x_d^2 + y_p^2, in-plane distance^2 to the projection
  double gamma_sq = 0.0;          // y_p^2 + z_p^2 = r^2 - x_d^2, constant along the edge
  double r0 = 0.0;                // distance from the edge start vertex
  double alpha_hat = 0.0, beta_hat = 0.0;
  double alpha_x = 0.0, alpha_y = 0.0, beta_x = 0.0, beta_y = 0.0;
  double gamma_x = 0.0, gamma_y = 0.0;
  double i_dot_n = 0.0, j_dot_n = 0.0;  // element axes dotted with the outward edge normal
  double elem_xp = 0.0, elem_yp = 0.0;  // observation point in the element frame
  double x_q = 0.0, y_q = 0.0;          // endpoint in the element frame
  double edge_length = 0.0;
  double scale = 0.0;                   // element max edge length, for thresholds
};

EdgeScalars edge_scalars(const ElementGeometry& geom, const Vec3& r_p, int edge,
                         Endpoint which);

}  // namespace ripe
