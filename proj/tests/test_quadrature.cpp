#include <cmath>
#include <random>

#include "doctest.h"
#include "ripe/quadrature.hpp"
#include "ripe/reference_tables.hpp"
#include "ripe/shape.hpp"
#include "support.hpp"

using namespace ripe;

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// closed-form reference-triangle moment int u^b v^c dS = b! c! / (b+c+2)!
double moment(int b, int c) { return factorial(b) * factorial(c) / factorial(b + c + 2); }

double apply_ref(const TriangleRule& r, int b, int c) {
  double acc = 0.0;
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    const double u = r.nodes[i][1], v = r.nodes[i][2];
    acc += r.weights[i] * std::pow(u, b) * std::pow(v, c);
  }
  return 0.5 * acc;  // reference area
}

}  // namespace

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("triangle rules integrate moments exactly") {
  for (int order : {2, 5, 8, 12, 16}) {
    const TriangleRule r = gl_triangle(order);
    double wsum = 0.0;
    for (double w : r.weights) {
      CHECK(w > 0.0);
      wsum += w;
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(apply_ref(r, 0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    for (int b = 0; b <= order; ++b)
      for (int c = 0; c <= order - b; ++c)
        CHECK(apply_ref(r, b, c) == doctest::Approx(moment(b, c)).epsilon(1e-13));
  }
  CHECK(apply_ref(gl_triangle(2), 1, 1) == doctest::Approx(1.0 / 24).epsilon(1e-14));
  CHECK(apply_ref(gl_triangle(12), 5, 7) ==
        doctest::Approx(factorial(5) * factorial(7) / factorial(14)).epsilon(1e-14));
  CHECK_THROWS_AS(gl_triangle(0), UnsupportedOrder);
}

TEST_CASE("adaptive line integration") {
  const auto r = adaptive_line([](double x) { return cplx(x * x * x); }, 0.0, 1.0, 1e-13);
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(0.25).epsilon(1e-13));
  const auto o = adaptive_line(
      [](double x) { return std::exp(cplx(0.0, 40.0 * x)); }, 0.0, 1.0, 1e-13);
  const cplx want = (std::exp(cplx(0.0, 40.0)) - 1.0) / cplx(0.0, 40.0);
  CHECK(std::abs(o.value - want) < 1e-12);
}

TEST_CASE("far point agrees with the fixed rule") {
  const ElementGeometry g({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
  const double d = g.max_edge_length();
  const Vec3 rp{1.0 / 3, 1.0 / 3, 5.0 * d};
  const Vec3 np = g.k_hat();
  const auto density = [](double, double) { return 1.0; };
  for (auto pot : {PotentialKind::V, PotentialKind::K, PotentialKind::Kp, PotentialKind::D}) {
    const auto a = adaptive_potential(g, density, Kernel::laplace, 0.0, pot, rp, np, 1e-13);
    const cplx fixed = rule_potential(g, gl_triangle(12), density, Kernel::laplace, 0.0, pot, rp, np);
    CHECK(a.converged);
    CHECK(std::abs(a.value - fixed) <= 1e-12 * std::abs(fixed));
  }
}

TEST_CASE("near point converges within budget") {
  const ElementGeometry g({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
  const Vec3 rp{1.0 / 3, 1.0 / 3, 1e-4 * g.max_edge_length()};
  const auto density = [](double x, double) { return x * x * x; };
  AdaptiveOptions opt;
  opt.max_leaves = 100000;
  const auto a = adaptive_potential(g, density, Kernel::laplace, 0.0, PotentialKind::V, rp,
                                    g.k_hat(), 1e-10, opt);
  CHECK(a.converged);
  CHECK(a.subdivisions < 100000);
  // self-consistency at a looser tolerance
  const auto b = adaptive_potential(g, density, Kernel::laplace, 0.0, PotentialKind::V, rp,
                                    g.k_hat(), 1e-7, opt);
  CHECK(std::abs(a.value - b.value) <= 1e-6 * std::abs(a.value));
}

TEST_CASE("singular mode reproduces the reference table") {
  const ElementGeometry g({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
  const Vec3 rp{1.0 / 3, 1.0 / 3, 0.0};
  const auto basis = lagrange_basis(2);
  for (int i = 0; i < 6; ++i) {
    const int mine = fixtures::basis_permutation[i];
    const auto density = [&](double x, double y) { return eval_packed(basis[static_cast<size_t>(mine)], 2, x, y); };
    const auto a = adaptive_potential(g, density, Kernel::laplace, 0.0, PotentialKind::V, rp,
                                      g.k_hat(), 1e-11);
    CHECK(a.converged);
    CHECK(std::abs(a.value.real() - fixtures::laplace_single[i].recursive) <=
          1e-8 * std::abs(fixtures::laplace_single[i].recursive));
  }
}

TEST_CASE("estimated error bounds actual error") {
  // manufactured integrand with a closed form: for linear g with distinct
  // vertex values, int_T e^g dA = 2A sum_i e^{g_i} / prod_{j != i} (g_i - g_j)
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int bounded = 0, trials = 0;
  while (trials < 40) {
    const ElementGeometry g({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
    const double alpha = u(rng), beta = u(rng);
    const double g0 = 0.0, g1 = alpha, g2 = beta;
    if (std::abs(g1 - g0) < 0.1 || std::abs(g2 - g0) < 0.1 || std::abs(g1 - g2) < 0.1)
      continue;
    ++trials;
    const double exact =
        2.0 * g.area() *
        (std::exp(g0) / ((g0 - g1) * (g0 - g2)) + std::exp(g1) / ((g1 - g0) * (g1 - g2)) +
         std::exp(g2) / ((g2 - g0) * (g2 - g1)));
    // integrate e^{alpha x + beta y} through the adaptive engine by folding the
    // exponential into the density against the V kernel at a far point
    const Vec3 far{0.5, 0.5, 50.0};
    const auto kern_at = [&](double x, double y) {
      return potential_integrand(Kernel::laplace, 0.0, PotentialKind::V, far, g.k_hat(),
                                 g.to_global(x, y), g.k_hat())
          .real();
    };
    const auto dens = [&](double x, double y) {
      return std::exp(alpha * x + beta * y) / kern_at(x, y);
    };
    const auto a =
        adaptive_potential(g, dens, Kernel::laplace, 0.0, PotentialKind::V, far, g.k_hat(), 1e-8);
    if (std::abs(a.value.real() - exact) <= std::max(a.error_estimate, 64 * 1e-16 * std::abs(exact)))
      ++bounded;
  }
  CHECK(bounded >= trials * 95 / 100);
  (void)bounded;
}

TEST_SUITE_END();
