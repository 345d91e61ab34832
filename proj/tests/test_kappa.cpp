#include <cmath>
#include <random>

#include "doctest.h"
#include "ripe/kappa.hpp"
#include "ripe/quadrature.hpp"
#include "support.hpp"

using namespace ripe;

namespace {

// direct quadrature of int x^b y^c r^a over the edge segment
double quad_kappa(const ElementGeometry& g, int edge, const Vec3& rp, int b, int c, int a) {
  const EdgeFrame& e = g.edge(edge);
  return adaptive_line(
             [&](double t) {
               const Vec3 q = e.start + t * e.dir;
               const auto xc = g.element_coords(q);
               return cplx(std::pow(xc[0], b) * std::pow(xc[1], c) *
                           std::pow(norm(q - rp), a));
             },
             0.0, e.length, 1e-14)
      .value.real();
}

struct Built {
  EdgeScalars s0, s1;
  ElemTables e0, e1;
  MonomialTable<double> k0, k1;
};

Built build(const ElementGeometry& g, int edge, const Vec3& rp, int p, int extra = 0) {
  Built b{edge_scalars(g, rp, edge, Endpoint::start),
          edge_scalars(g, rp, edge, Endpoint::finish),
          {}, {}, {}, {}};
  b.e0 = k_table(b.s0.x_d, b.s0.z_p, -b.s0.y_p, p + extra + 2);
  b.e1 = k_table(b.s1.x_d, b.s1.z_p, -b.s1.y_p, p + extra + 2);
  b.k0 = kappa_table(b.s0, b.e0, p, extra);
  b.k1 = kappa_table(b.s1, b.e1, p, extra);
  return b;
}

}  // namespace

TEST_SUITE_BEGIN("kappa");

TEST_CASE("axis seeds and smallest table") {
  std::mt19937_64 rng(4);
  const ElementGeometry g = test::random_element(rng);
  const Vec3 rp{0.4, 0.1, 0.8};
  const auto bt = build(g, 1, rp, 0);
  // kappa_{0,0,0} = i_0 = x_d at the endpoint
  CHECK(bt.k1.at(0, 0, 0) == doctest::Approx(bt.s1.x_d).epsilon(1e-14));
  CHECK(bt.k1.a_max(0, 0) == 0);
  CHECK(bt.k1.a_min() == -3);
}

TEST_CASE("defining integral oracle") {
  const ElementGeometry g({0.1, -0.2, 0.3}, {1.1, 0.2, 0.5}, {0.2, 0.9, -0.1});
  const Vec3 rp{0.4, 0.1, 0.8};
  for (int edge = 0; edge < 3; ++edge) {
    const auto bt = build(g, edge, rp, 4, 1);
    for (auto [b, c, a] : {std::array{0, 0, 0}, {1, 0, 1}, {2, 1, 1}, {0, 3, 0},
                           {2, 2, 0}, {1, 1, 2}, {3, 0, -1}, {1, 2, -3}}) {
      const double q = quad_kappa(g, edge, rp, b, c, a);
      const double got = bt.k1.at(b, c, a) - bt.k0.at(b, c, a);
      CHECK(got == doctest::Approx(q).epsilon(1e-11));
    }
  }
}

TEST_CASE("oracle equivalence at random configurations") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int done = 0;
  while (done < 20) {
    const ElementGeometry g = test::random_element(rng);
    const Vec3 rp{u(rng), u(rng), u(rng)};
    const int edge = static_cast<int>(done % 3);
    const auto s = edge_scalars(g, rp, edge, Endpoint::start);
    if (std::sqrt(s.gamma_sq) < 0.1 * g.max_edge_length()) continue;  // rho >= 0.1 D
    ++done;
    const int p = 5;
    const auto bt = build(g, edge, rp, p);
    for (int b = 0; b <= p; ++b)
      for (int c = 0; c <= p - b; ++c)
        for (int a = 0; a <= p - b - c; ++a) {
          const double q = quad_kappa(g, edge, rp, b, c, a);
          const double got = bt.k1.at(b, c, a) - bt.k0.at(b, c, a);
          CHECK(std::abs(got - q) <= 1e-10 * std::max(1.0, std::abs(q)));
        }
  }
}

TEST_CASE("recurrence residuals") {
  std::mt19937_64 rng(77);
  const ElementGeometry g = test::random_element(rng);
  const Vec3 rp{0.3, -0.5, 0.6};
  const auto bt = build(g, 0, rp, 5);
  const auto& s = bt.s1;
  const auto& t = bt.k1;
  const double g2 = s.gamma_sq;
  double row_scale = 0.0;
  for (int b = 0; b <= 5; ++b)
    for (int c = 0; c <= 5 - b; ++c)
      for (int a = -3; a <= t.a_max(b, c); ++a)
        row_scale = std::max(row_scale, std::abs(t.at(b, c, a)));
  for (int b = 0; b + 2 <= 5; ++b)
    for (int c = 0; c <= 5 - b - 2; ++c)
      for (int a = -3; a <= t.a_max(b + 2, c); ++a) {
        const double lhs = t.at(b + 2, c, a);
        const double rhs = s.alpha_x * s.alpha_x * t.at(b, c, a + 2) -
                           2 * s.alpha_hat * t.at(b + 1, c, a) -
                           (s.alpha_hat * s.alpha_hat + s.alpha_x * s.alpha_x * g2) *
                               t.at(b, c, a);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * row_scale);
      }
  for (int b = 0; b + 1 <= 5; ++b)
    for (int c = 0; c + 1 <= 5 - b - 1; ++c)
      for (int a = -3; a <= t.a_max(b + 1, c + 1); ++a) {
        const double lhs = t.at(b + 1, c + 1, a);
        const double rhs = s.alpha_x * s.alpha_y * t.at(b, c, a + 2) -
                           s.beta_hat * t.at(b + 1, c, a) - s.alpha_hat * t.at(b, c + 1, a) -
                           (s.alpha_hat * s.beta_hat + s.alpha_x * s.alpha_y * g2) *
                               t.at(b, c, a);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * row_scale);
      }
}

TEST_CASE("b/c role exchange transposes the table") {
  std::mt19937_64 rng(15);
  const ElementGeometry g = test::random_element(rng);
  const Vec3 rp{0.2, 0.4, -0.7};
  const EdgeScalars s = edge_scalars(g, rp, 2, Endpoint::finish);
  EdgeScalars sw = s;
  std::swap(sw.alpha_x, sw.alpha_y);
  std::swap(sw.alpha_hat, sw.beta_hat);
  std::swap(sw.x_q, sw.y_q);
  const auto elem = k_table(s.x_d, s.z_p, -s.y_p, 8);
  const auto t = kappa_table(s, elem, 4, 0);
  const auto tt = kappa_table(sw, elem, 4, 0);
  for (int b = 0; b <= 4; ++b)
    for (int c = 0; c <= 4 - b; ++c)
      for (int a = -3; a <= t.a_max(b, c); ++a)
        CHECK(t.at(b, c, a) == doctest::Approx(tt.at(c, b, a)).epsilon(1e-13));
}

TEST_CASE("derivative tables") {
  std::mt19937_64 rng(8);
  const ElementGeometry g = test::random_element(rng);
  const Vec3 rp{0.5, 0.2, 0.65};
  const int p = 3, edge = 1;

  SUBCASE("closed special cases") {
    const auto bt = build(g, edge, rp, p);
    const auto dz = kappa_derivatives(bt.k1, bt.s1, KappaDeriv::z);
    for (int b = 0; b <= p; ++b)
      for (int c = 0; c <= p - b; ++c) CHECK(dz.at(b, c, 0) == 0.0);
    const auto dy = kappa_derivatives(bt.k1, bt.s1, KappaDeriv::yp);
    CHECK(dy.at(0, 0, 2) ==
          doctest::Approx(-2.0 * (-bt.s1.y_p) * bt.k1.at(0, 0, 0)).epsilon(1e-13));
  }

  SUBCASE("finite differences") {
    const double h = 1e-6;
    const EdgeFrame& ef = g.edge(edge);
    auto table_at = [&](const Vec3& p_obs, Endpoint ep) {
      const EdgeScalars s = edge_scalars(g, p_obs, edge, ep);
      return kappa_table(s, k_table(s.x_d, s.z_p, -s.y_p, p + 2), p, 0);
    };
    const EdgeScalars s = edge_scalars(g, rp, edge, Endpoint::finish);
    const auto base = table_at(rp, Endpoint::finish);
    const Vec3 dirs[3] = {ef.dir, ef.in_plane, g.k_hat()};
    const KappaDeriv which[3] = {KappaDeriv::xp, KappaDeriv::yp, KappaDeriv::z};
    for (int d = 0; d < 3; ++d) {
      const auto got = kappa_derivatives(base, s, which[d]);
      const double sign = (d == 2) ? -1.0 : 1.0;  // z means the source side
      const auto tp = table_at(rp + h * dirs[d], Endpoint::finish);
      const auto tm = table_at(rp - h * dirs[d], Endpoint::finish);
      for (int b = 0; b <= p; ++b)
        for (int c = 0; c <= p - b; ++c)
          for (int a = 0; a <= p - b - c; ++a) {
            const double fd = sign * (tp.at(b, c, a) - tm.at(b, c, a)) / (2 * h);
            CHECK(got.at(b, c, a) == doctest::Approx(fd).epsilon(1e-6));
          }
    }
    // mixed z, x_p derivative against nested differences
    const auto gzx = kappa_derivatives(base, s, KappaDeriv::z_xp);
    auto dxp_at = [&](const Vec3& p_obs) {
      const EdgeScalars sp = edge_scalars(g, p_obs, edge, Endpoint::finish);
      const auto t = kappa_table(sp, k_table(sp.x_d, sp.z_p, -sp.y_p, p + 2), p, 0);
      return kappa_derivatives(t, sp, KappaDeriv::xp);
    };
    const auto dp = dxp_at(rp + h * g.k_hat());
    const auto dm = dxp_at(rp - h * g.k_hat());
    for (int b = 0; b <= p; ++b)
      for (int c = 0; c <= p - b; ++c)
        for (int a = 0; a <= p - b - c; ++a) {
          const double fd = -(dp.at(b, c, a) - dm.at(b, c, a)) / (2 * h);
          CHECK(gzx.at(b, c, a) == doctest::Approx(fd).epsilon(1e-5));
        }
  }

  SUBCASE("missing ghosts are reported") {
    MonomialTable<double> shallow(p, 0, 0);
    const EdgeScalars s = edge_scalars(g, rp, edge, Endpoint::finish);
    CHECK_THROWS_AS(kappa_derivatives(shallow, s, KappaDeriv::yp), MissingGhostEntries);
  }
}

TEST_SUITE_END();
