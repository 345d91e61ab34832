#include "ripe/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace ripe {

ElementGeometry::ElementGeometry(const Vec3& v1, const Vec3& v2, const Vec3& v3) {
  v_[0] = v1;
  v_[1] = v2;
  v_[2] = v3;

  const Vec3 e1 = v2 - v1;
  const Vec3 e2 = v3 - v1;
  const Vec3 n = cross(e1, e2);
  const double two_area = norm(n);
  max_edge_ = std::max({norm(e1), norm(v3 - v2), norm(e2)});
  area_ = 0.5 * two_area;
  if (!(max_edge_ > 0.0) || area_ < area_epsilon * max_edge_ * max_edge_)
    throw DegenerateElement("element area below threshold");

  i_ = normalized(e1);
  k_ = n * (1.0 / two_area);
  j_ = cross(k_, i_);

  // columns of Xi are the element-frame coordinates of v2-v1 and v3-v1
  xi_ = {dot(e1, i_), dot(e2, i_), dot(e1, j_), dot(e2, j_)};

  for (int j = 0; j < 3; ++j) {
    EdgeFrame& e = edges_[j];
    e.start = v_[j];
    e.finish = v_[(j + 1) % 3];
    const Vec3 d = e.finish - e.start;
    e.length = norm(d);
    e.dir = d * (1.0 / e.length);
    e.in_plane = cross(k_, e.dir);
    e.alpha_x = dot(e.dir, i_);
    e.alpha_y = dot(e.dir, j_);
    e.beta_x = dot(e.in_plane, i_);
    e.beta_y = dot(e.in_plane, j_);
    e.gamma_x = dot(e.start - v_[0], i_);
    e.gamma_y = dot(e.start - v_[0], j_);
  }
}

ProjectionInfo project_point(const ElementGeometry& geom, const Vec3& r_p, double tau_edge) {
  ProjectionInfo info;
  const auto [xp, yp, h] = geom.element_coords(r_p);
  info.x_p = xp;
  info.y_p = yp;
  info.h = h;

  // barycentric coordinates of the projection from the (upper triangular) Xi
  const Mat2& m = geom.xi();
  const double det = m.det();
  const double u = (xp * m.a22 - yp * m.a12) / det;
  const double v = (yp * m.a11 - xp * m.a21) / det;
  info.barycentric = {1.0 - u - v, u, v};

  const double lo = *std::min_element(info.barycentric.begin(), info.barycentric.end());
  if (lo > tau_edge) {
    info.location = Location::strict_interior;
  } else if (lo < -tau_edge) {
    info.location = Location::strict_exterior;
  } else {
    info.location = Location::on_contour;
  }
  return info;
}

EdgeScalars edge_scalars(const ElementGeometry& geom, const Vec3& r_p, int edge,
                         Endpoint which) {
  const EdgeFrame& e = geom.edge(edge);
  EdgeScalars s;
  s.edge = edge;
  s.edge_length = e.length;
  s.scale = geom.max_edge_length();
  s.x_end = (which == Endpoint::start) ? 0.0 : e.length;

  const Vec3 d = r_p - e.start;
  s.x_p = dot(d, e.dir);
  s.y_p = dot(d, e.in_plane);
  s.z_p = dot(d, geom.k_hat());
  s.x_d = s.x_end - s.x_p;
  s.gamma_sq = s.y_p * s.y_p + s.z_p * s.z_p;
  s.rho_sq = s.x_d * s.x_d + s.y_p * s.y_p;
  s.r = std::sqrt(s.x_d * s.x_d + s.gamma_sq);
  s.r0 = norm(d);

  s.alpha_x = e.alpha_x;
  s.alpha_y = e.alpha_y;
  s.beta_x = e.beta_x;
  s.beta_y = e.beta_y;
  s.gamma_x = e.gamma_x;
  s.gamma_y = e.gamma_y;
  // alpha_hat = -(beta_x y^j + gamma_x) - alpha_x x_p^j with y^j = 0 on the edge
  s.alpha_hat = -e.gamma_x - e.alpha_x * s.x_p;
  s.beta_hat = -e.gamma_y - e.alpha_y * s.x_p;
  s.i_dot_n = -e.beta_x;  // n^j = -j^j
  s.j_dot_n = -e.beta_y;

  const auto pe = geom.element_coords(r_p);
  s.elem_xp = pe[0];
  s.elem_yp = pe[1];
  s.x_q = e.alpha_x * s.x_end + e.gamma_x;
  s.y_q = e.alpha_y * s.x_end + e.gamma_y;
  return s;
}

}  // namespace ripe
