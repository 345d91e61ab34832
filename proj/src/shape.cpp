#include "ripe/shape.hpp"

#include <cmath>

namespace ripe {

namespace {

// packed bivariate polynomial with its own order
struct Poly {
  int order = 0;
  std::vector<double> c;
  Poly() : c(1, 0.0) {}
  explicit Poly(double v) : c(1, v) {}
};

Poly linear(double c0, double cu, double cv) {
  Poly p;
  p.order = 1;
  p.c.assign(3, 0.0);
  p.c[static_cast<size_t>(monomial_index(0, 0, 1))] = c0;
  p.c[static_cast<size_t>(monomial_index(1, 0, 1))] = cu;
  p.c[static_cast<size_t>(monomial_index(0, 1, 1))] = cv;
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  r.order = a.order + b.order;
  r.c.assign(static_cast<size_t>(monomial_count(r.order)), 0.0);
  for (int ba = 0; ba <= a.order; ++ba)
    for (int ca = 0; ca <= a.order - ba; ++ca) {
      const double va = a.c[static_cast<size_t>(monomial_index(ba, ca, a.order))];
      if (va == 0.0) continue;
      for (int bb = 0; bb <= b.order; ++bb)
        for (int cb = 0; cb <= b.order - bb; ++cb) {
          const double vb = b.c[static_cast<size_t>(monomial_index(bb, cb, b.order))];
          if (vb == 0.0) continue;
          r.c[static_cast<size_t>(monomial_index(ba + bb, ca + cb, r.order))] += va * vb;
        }
    }
  return r;
}

Poly scaled(Poly p, double s) {
  for (double& v : p.c) v *= s;
  return p;
}

std::vector<double> repack(const Poly& p, int order) {
  std::vector<double> out(static_cast<size_t>(monomial_count(order)), 0.0);
  for (int b = 0; b <= p.order; ++b)
    for (int c = 0; c <= p.order - b; ++c)
      out[static_cast<size_t>(monomial_index(b, c, order))] =
          p.c[static_cast<size_t>(monomial_index(b, c, p.order))];
  return out;
}

}  // namespace

double eval_packed(const std::vector<double>& packed, int order, double u, double v) {
  double s = 0.0;
  for (int b = 0; b <= order; ++b)
    for (int c = 0; c <= order - b; ++c) {
      const double coef = packed[static_cast<size_t>(monomial_index(b, c, order))];
      if (coef != 0.0) s += coef * std::pow(u, b) * std::pow(v, c);
    }
  return s;
}

double ShapeSet::eval(int i, double x, double y) const {
  return eval_packed(coeffs[static_cast<size_t>(i)], order, x, y);
}

std::vector<std::vector<double>> lagrange_basis(int order) {
  const Poly l1 = linear(1.0, -1.0, -1.0);  // 1 - u - v
  const Poly l2 = linear(0.0, 1.0, 0.0);
  const Poly l3 = linear(0.0, 0.0, 1.0);
  std::vector<Poly> fns;
  switch (order) {
    case 1:
      fns = {l1, l2, l3};
      break;
    case 2: {
      auto vtx = [&](const Poly& l) {
        Poly two_l_minus_1 = scaled(l, 2.0);
        two_l_minus_1.c[0] -= 1.0;
        return mul(l, two_l_minus_1);
      };
      fns = {vtx(l1), vtx(l2), vtx(l3),
             scaled(mul(l1, l2), 4.0), scaled(mul(l2, l3), 4.0), scaled(mul(l3, l1), 4.0)};
      break;
    }
    case 3: {
      auto shifted = [&](const Poly& l, double off) {
        Poly p = scaled(l, 3.0);
        p.c[0] += off;
        return p;
      };
      auto vtx = [&](const Poly& l) {
        return scaled(mul(mul(l, shifted(l, -1.0)), shifted(l, -2.0)), 0.5);
      };
      auto edge = [&](const Poly& li, const Poly& lj) {
        // node with barycentric 2/3 on li, 1/3 on lj
        return scaled(mul(mul(li, lj), shifted(li, -1.0)), 4.5);
      };
      fns = {vtx(l1),      vtx(l2),      vtx(l3),      edge(l1, l2), edge(l2, l1),
             edge(l2, l3), edge(l3, l2), edge(l3, l1), edge(l1, l3),
             scaled(mul(mul(l1, l2), l3), 27.0)};
      break;
    }
    default:
      throw UnsupportedOrder("lagrange_basis supports orders 1..3");
  }
  std::vector<std::vector<double>> out;
  out.reserve(fns.size());
  for (const Poly& p : fns) out.push_back(repack(p, order));
  return out;
}

ShapeSet convert_reference_coeffs(const std::vector<std::vector<double>>& ref,
                                  const Mat2& xi, int p_s) {
  const double frob = std::abs(xi.a11) + std::abs(xi.a12) + std::abs(xi.a21) + std::abs(xi.a22);
  if (std::abs(xi.det()) <= 1e-13 * frob * frob)
    throw SingularTransform("reference-to-element transform is singular");

  ShapeSet set;
  set.order = p_s;
  set.reference_coeffs = ref;
  set.coeffs.reserve(ref.size());

  // sample directions avoiding the y = 0 direction of the transform
  const double phi_bad = std::atan2(-xi.a21, xi.a22);
  const size_t n_packed = static_cast<size_t>(monomial_count(p_s));

  for (const std::vector<double>& a : ref) {
    std::vector<double> out(n_packed, 0.0);
    for (int d = 0; d <= p_s; ++d) {
      bool any = false;
      for (int bp = 0; bp <= d; ++bp)
        any = any || a[static_cast<size_t>(monomial_index(bp, d - bp, p_s))] != 0.0;
      if (!any) continue;

      const int n = d + 1;
      std::vector<double> tau(static_cast<size_t>(n)), f(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        const double phi = phi_bad + 3.14159265358979323846 * (i + 1) / (n + 1);
        const double u = std::cos(phi), v = std::sin(phi);
        const double x = xi.a11 * u + xi.a12 * v;
        const double y = xi.a21 * u + xi.a22 * v;
        double s = 0.0;
        for (int bp = 0; bp <= d; ++bp)
          s += a[static_cast<size_t>(monomial_index(bp, d - bp, p_s))] *
               std::pow(u, bp) * std::pow(v, d - bp);
        tau[static_cast<size_t>(i)] = x / y;
        f[static_cast<size_t>(i)] = s / std::pow(y, d);
      }
      // Newton divided differences, then expansion to monomial coefficients
      std::vector<double> cdd = f;
      for (int j = 1; j < n; ++j)
        for (int i = n - 1; i >= j; --i)
          cdd[static_cast<size_t>(i)] = (cdd[static_cast<size_t>(i)] - cdd[static_cast<size_t>(i - 1)]) /
                                        (tau[static_cast<size_t>(i)] - tau[static_cast<size_t>(i - j)]);
      std::vector<double> mono(static_cast<size_t>(n), 0.0);
      mono[0] = cdd[static_cast<size_t>(n - 1)];
      int deg = 0;
      for (int i = n - 2; i >= 0; --i) {
        // mono <- mono * (t - tau_i) + cdd_i
        for (int j = deg + 1; j >= 1; --j)
          mono[static_cast<size_t>(j)] =
              mono[static_cast<size_t>(j - 1)] - tau[static_cast<size_t>(i)] * mono[static_cast<size_t>(j)];
        mono[0] = -tau[static_cast<size_t>(i)] * mono[0] + cdd[static_cast<size_t>(i)];
        ++deg;
      }
      for (int b = 0; b <= d; ++b)
        out[static_cast<size_t>(monomial_index(b, d - b, p_s))] = mono[static_cast<size_t>(b)];
    }
    set.coeffs.push_back(std::move(out));
  }
  return set;
}

}  // namespace ripe
