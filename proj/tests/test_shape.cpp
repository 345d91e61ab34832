#include <cmath>
#include <random>

#include "doctest.h"
#include "ripe/shape.hpp"

using namespace ripe;

namespace {

Mat2 random_xi(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  for (;;) {
    Mat2 m{n(rng), n(rng), n(rng), n(rng)};
    if (std::abs(m.det()) > 0.3) return m;
  }
}

std::vector<double> packed_monomial(int b, int c, int p) {
  std::vector<double> v(static_cast<size_t>(monomial_count(p)), 0.0);
  v[static_cast<size_t>(monomial_index(b, c, p))] = 1.0;
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("shape");

TEST_CASE("identity transform is a no-op") {
  const Mat2 id{1, 0, 0, 1};
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(static_cast<size_t>(monomial_count(3)));
  for (double& v : a) v = u(rng);
  const ShapeSet s = convert_reference_coeffs({a}, id, 3);
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(s.coeffs[0][i] == doctest::Approx(a[i]).epsilon(1e-13));
}

TEST_CASE("axis scaling") {
  // N(u,v) = u with x = 2u, y = v: coefficient of x must be 1/2
  const Mat2 xi{2, 0, 0, 1};
  const ShapeSet s = convert_reference_coeffs({packed_monomial(1, 0, 1)}, xi, 1);
  CHECK(s.coeffs[0][static_cast<size_t>(monomial_index(1, 0, 1))] ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(s.coeffs[0][static_cast<size_t>(monomial_index(0, 0, 1))]) < 1e-14);
  CHECK(std::abs(s.coeffs[0][static_cast<size_t>(monomial_index(0, 1, 1))]) < 1e-14);
}

TEST_CASE("point-sampling oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  SUBCASE("u^2 v at order 3") {
    const Mat2 xi = random_xi(rng);
    const ShapeSet s = convert_reference_coeffs({packed_monomial(2, 1, 3)}, xi, 3);
    for (int i = 0; i < 20; ++i) {
      const double u = u01(rng), v = u01(rng) * (1.0 - u);
      const double x = xi.a11 * u + xi.a12 * v, y = xi.a21 * u + xi.a22 * v;
      const double want = u * u * v;
      CHECK(s.eval(0, x, y) == doctest::Approx(want).epsilon(1e-10));
    }
  }
  SUBCASE("dense coefficients up to order 6") {
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    for (int trial = 0; trial < 4; ++trial) {
      const int p = 6;
      const Mat2 xi = random_xi(rng);
      std::vector<double> a(static_cast<size_t>(monomial_count(p)));
      for (double& v : a) v = un(rng);
      const ShapeSet s = convert_reference_coeffs({a}, xi, p);
      for (int i = 0; i < 15; ++i) {
        const double u = u01(rng), v = u01(rng) * (1.0 - u);
        const double x = xi.a11 * u + xi.a12 * v, y = xi.a21 * u + xi.a22 * v;
        const double want = eval_packed(a, p, u, v);
        CHECK(s.eval(0, x, y) == doctest::Approx(want).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  for (int p = 1; p <= 5; ++p) {
    const Mat2 xi = random_xi(rng);
    const double det = xi.det();
    const Mat2 inv{xi.a22 / det, -xi.a12 / det, -xi.a21 / det, xi.a11 / det};
    std::vector<double> a(static_cast<size_t>(monomial_count(p)));
    for (double& v : a) v = un(rng);
    const ShapeSet fwd = convert_reference_coeffs({a}, xi, p);
    const ShapeSet back = convert_reference_coeffs({fwd.coeffs[0]}, inv, p);
    for (size_t i = 0; i < a.size(); ++i)
      CHECK(back.coeffs[0][i] == doctest::Approx(a[i]).epsilon(1e-9));
  }
}

TEST_CASE("degree preservation") {
  std::mt19937_64 rng(13);
  const Mat2 xi = random_xi(rng);
  // order-2 polynomial carried in an order-4 packing stays degree 2
  std::vector<double> a(static_cast<size_t>(monomial_count(4)), 0.0);
  a[static_cast<size_t>(monomial_index(1, 1, 4))] = 0.7;
  a[static_cast<size_t>(monomial_index(2, 0, 4))] = -0.2;
  const ShapeSet s = convert_reference_coeffs({a}, xi, 4);
  for (int b = 0; b <= 4; ++b)
    for (int c = 0; c <= 4 - b; ++c)
      if (b + c > 2)
        CHECK(s.coeffs[0][static_cast<size_t>(monomial_index(b, c, 4))] == 0.0);
}

TEST_CASE("singular transform is rejected") {
  const Mat2 bad{1, 2, 2, 4};
  CHECK_THROWS_AS(convert_reference_coeffs({packed_monomial(1, 0, 1)}, bad, 1),
                  SingularTransform);
}

TEST_CASE("lagrange bases") {
  SUBCASE("order 1 is barycentric") {
    const auto b = lagrange_basis(1);
    REQUIRE(b.size() == 3);
    CHECK(eval_packed(b[0], 1, 0.2, 0.3) == doctest::Approx(0.5));
    CHECK(eval_packed(b[1], 1, 0.2, 0.3) == doctest::Approx(0.2));
    CHECK(eval_packed(b[2], 1, 0.2, 0.3) == doctest::Approx(0.3));
  }
  SUBCASE("nodal property") {
    const std::vector<std::array<double, 2>> nodes2 = {
        {0, 0}, {1, 0}, {0, 1}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}};
    const auto b2 = lagrange_basis(2);
    REQUIRE(b2.size() == 6);
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = 0; j < 6; ++j)
        CHECK(eval_packed(b2[i], 2, nodes2[j][0], nodes2[j][1]) ==
              doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-13));
    const std::vector<std::array<double, 2>> nodes3 = {
        {0, 0},           {1, 0},           {0, 1},          {1.0 / 3, 0},
        {2.0 / 3, 0},     {2.0 / 3, 1.0 / 3}, {1.0 / 3, 2.0 / 3}, {0, 2.0 / 3},
        {0, 1.0 / 3},     {1.0 / 3, 1.0 / 3}};
    const auto b3 = lagrange_basis(3);
    REQUIRE(b3.size() == 10);
    for (size_t i = 0; i < 10; ++i)
      for (size_t j = 0; j < 10; ++j)
        CHECK(eval_packed(b3[i], 3, nodes3[j][0], nodes3[j][1]) ==
              doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
  }
  SUBCASE("partition of unity") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int order : {1, 2, 3}) {
      const auto b = lagrange_basis(order);
      for (int i = 0; i < 10; ++i) {
        const double u = u01(rng), v = u01(rng) * (1.0 - u);
        double sum = 0.0;
        for (const auto& f : b) sum += eval_packed(f, order, u, v);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
      }
    }
  }
  SUBCASE("unsupported order") { CHECK_THROWS_AS(lagrange_basis(4), UnsupportedOrder); }
}

TEST_SUITE_END();
