#include "ripe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace ripe {

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(static_cast<size_t>(n));
  weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev-like initial guess, on [-1, 1]
    double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(n - 1 - i)] = 0.5 * (1.0 + x);
    weights[static_cast<size_t>(n - 1 - i)] = 1.0 / ((1.0 - x * x) * pp * pp);
  }
}

TriangleRule gl_triangle(int order) {
  if (order < 1) throw UnsupportedOrder("gl_triangle needs order >= 1");
  // collapsed tensor product: u = s, v = t(1-s); the (1-s) jacobian raises
  // the s-degree by one
  const int ns = (order + 3) / 2;
  const int nt = (order + 2) / 2;
  std::vector<double> xs, ws, xt, wt;
  gauss_legendre_01(ns, xs, ws);
  gauss_legendre_01(nt, xt, wt);

  TriangleRule rule;
  rule.order = order;
  rule.nodes.reserve(static_cast<size_t>(ns * nt));
  rule.weights.reserve(static_cast<size_t>(ns * nt));
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nt; ++j) {
      const double u = xs[static_cast<size_t>(i)];
      const double v = xt[static_cast<size_t>(j)] * (1.0 - u);
      // normalized so weights sum to one over the triangle
      const double w = 2.0 * ws[static_cast<size_t>(i)] * wt[static_cast<size_t>(j)] * (1.0 - u);
      rule.nodes.push_back({1.0 - u - v, u, v});
      rule.weights.push_back(w);
    }
  return rule;
}

cplx potential_integrand(Kernel kernel, double k, PotentialKind pot, const Vec3& r_p,
                         const Vec3& n_p, const Vec3& q, const Vec3& n_q) {
  const Vec3 rv = q - r_p;
  const double r = norm(rv);
  if (kernel == Kernel::laplace) {
    switch (pot) {
      case PotentialKind::V:
        return 1.0 / (four_pi * r);
      case PotentialKind::K:
        return -dot(n_q, rv) / (four_pi * r * r * r);
      case PotentialKind::Kp:
        return dot(n_p, rv) / (four_pi * r * r * r);
      case PotentialKind::D:
        return -(dot(n_p, n_q) / (four_pi * r * r * r) -
                 3.0 * dot(n_q, rv) * dot(n_p, rv) / (four_pi * r * r * r * r * r));
    }
  }
  const cplx e = std::exp(cplx(0.0, k * r));
  const cplx g1 = e * (cplx(0.0, k * r) - 1.0) / (four_pi * r * r);  // dG/dr
  switch (pot) {
    case PotentialKind::V:
      return e / (four_pi * r);
    case PotentialKind::K:
      return g1 * dot(n_q, rv) / r;
    case PotentialKind::Kp:
      return -g1 * dot(n_p, rv) / r;
    case PotentialKind::D: {
      const cplx g2 = e * (-k * k * r * r - cplx(0.0, 2.0 * k * r) + 2.0) /
                      (four_pi * r * r * r);  // d2G/dr2
      const double cq = dot(n_q, rv) / r, cp = dot(n_p, rv) / r;
      return -(-g2 * cp * cq + g1 * (cp * cq - dot(n_p, n_q)) / r);
    }
  }
  return {};
}

namespace {

struct P2 {
  double x = 0.0, y = 0.0;
};

struct Leaf {
  P2 a, b, c;
  cplx value{};
  double abs_value = 0.0;
  double err = 0.0;
  long id = 0;
};

struct LeafOrder {
  bool operator()(const Leaf& l, const Leaf& r) const {
    if (l.err != r.err) return l.err < r.err;
    return l.id > r.id;
  }
};

}  // namespace

cplx rule_potential(const ElementGeometry& geom, const TriangleRule& rule,
                    const DensityFn& density, Kernel kernel, double k, PotentialKind pot,
                    const Vec3& r_p, const Vec3& n_p) {
  const auto c1 = geom.element_coords(geom.vertex(1));
  const auto c2 = geom.element_coords(geom.vertex(2));
  const P2 p0{0.0, 0.0}, p1{c1[0], c1[1]}, p2{c2[0], c2[1]};
  cplx acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const auto& n = rule.nodes[i];
    const double x = n[0] * p0.x + n[1] * p1.x + n[2] * p2.x;
    const double y = n[0] * p0.y + n[1] * p1.y + n[2] * p2.y;
    acc += rule.weights[i] * density(x, y) *
           potential_integrand(kernel, k, pot, r_p, n_p, geom.to_global(x, y), geom.k_hat());
  }
  return acc * geom.area();
}

AdaptiveResult adaptive_potential(const ElementGeometry& geom, const DensityFn& density,
                                  Kernel kernel, double k, PotentialKind pot,
                                  const Vec3& r_p, const Vec3& n_p, double rel_tol,
                                  const AdaptiveOptions& opt) {
  static const TriangleRule rule_hi = gl_triangle(12);
  static const TriangleRule rule_lo = gl_triangle(8);

  auto f = [&](double x, double y) {
    return density(x, y) *
           potential_integrand(kernel, k, pot, r_p, n_p, geom.to_global(x, y), geom.k_hat());
  };
  auto apply = [&](const TriangleRule& rule, const P2& a, const P2& b, const P2& c,
                   double& absv) {
    const double area2 = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    cplx acc = 0.0;
    double aacc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const auto& n = rule.nodes[i];
      const double x = n[0] * a.x + n[1] * b.x + n[2] * c.x;
      const double y = n[0] * a.y + n[1] * b.y + n[2] * c.y;
      const cplx v = rule.weights[i] * f(x, y);
      acc += v;
      aacc += std::abs(v);
    }
    absv = std::abs(0.5 * area2) * aacc;
    return 0.5 * area2 * acc;
  };

  long next_id = 0;
  auto make_leaf = [&](const P2& a, const P2& b, const P2& c) {
    Leaf l;
    l.a = a;
    l.b = b;
    l.c = c;
    l.id = next_id++;
    double abs_hi = 0.0, abs_lo = 0.0;
    l.value = apply(rule_hi, a, b, c, abs_hi);
    const cplx lo = apply(rule_lo, a, b, c, abs_lo);
    l.abs_value = abs_hi;
    l.err = std::abs(l.value - lo);
    return l;
  };

  // initial mesh: fan around the projection when it lands on the element,
  // which grades the subdivision into the near-singularity
  const ProjectionInfo proj = project_point(geom, r_p, opt.tau_edge);
  const auto c1 = geom.element_coords(geom.vertex(1));
  const auto c2 = geom.element_coords(geom.vertex(2));
  const P2 p0{0.0, 0.0}, p1{c1[0], c1[1]}, p2{c2[0], c2[1]};

  std::priority_queue<Leaf, std::vector<Leaf>, LeafOrder> heap;
  const double area_floor = 1e-30 * geom.area();
  auto push_tri = [&](const P2& a, const P2& b, const P2& c) {
    const double area2 = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    if (std::abs(0.5 * area2) <= area_floor) return;
    heap.push(make_leaf(a, b, c));
  };
  if (proj.location != Location::strict_exterior) {
    const P2 c0{proj.x_p, proj.y_p};
    push_tri(c0, p0, p1);
    push_tri(c0, p1, p2);
    push_tri(c0, p2, p0);
  } else {
    push_tri(p0, p1, p2);
  }

  AdaptiveResult res;
  long leaves = static_cast<long>(heap.size());
  std::vector<Leaf> done;  // converged leaves parked out of the heap
  const double eps = std::numeric_limits<double>::epsilon();

  auto totals = [&](double& err_sum, cplx& val, double& abs_sum) {
    // deterministic summation: parked leaves in creation order, then heap copy
    std::vector<Leaf> all(done);
    std::priority_queue<Leaf, std::vector<Leaf>, LeafOrder> h2(heap);
    while (!h2.empty()) {
      all.push_back(h2.top());
      h2.pop();
    }
    std::sort(all.begin(), all.end(), [](const Leaf& a, const Leaf& b) { return a.id < b.id; });
    err_sum = 0.0;
    abs_sum = 0.0;
    cplx v = 0.0, comp = 0.0;  // Kahan
    for (const Leaf& l : all) {
      err_sum += l.err;
      abs_sum += l.abs_value;
      const cplx y = l.value - comp;
      const cplx t = v + y;
      comp = (t - v) - y;
      v = t;
    }
    val = v;
  };

  long since_check = 1000000;  // force an initial check
  double stagnant_err = std::numeric_limits<double>::max();
  int stagnant_rounds = 0;

  while (true) {
    const long check_every = std::max<long>(16, leaves / 4);
    if (since_check >= check_every || heap.empty()) {
      since_check = 0;
      double err_sum = 0.0, abs_sum = 0.0;
      cplx val;
      totals(err_sum, val, abs_sum);
      const double floor = 64.0 * eps * abs_sum;
      const double target = std::max(rel_tol * std::abs(val), floor);
      res.value = val;
      res.error_estimate = err_sum;
      res.subdivisions = leaves;
      if (err_sum <= target || heap.empty()) {
        res.converged = err_sum <= std::max(target, 4.0 * floor);
        return res;
      }
      if (leaves >= opt.max_leaves) {
        res.converged = false;
        return res;
      }
      // bail out when refinement stops helping (roundoff-dominated estimates)
      if (err_sum >= 0.9 * stagnant_err) {
        if (++stagnant_rounds >= 40) {
          res.converged = err_sum <= 4.0 * std::max(rel_tol * std::abs(val), floor);
          return res;
        }
      } else {
        stagnant_rounds = 0;
        stagnant_err = err_sum;
      }
    }

    if (heap.empty()) break;
    Leaf worst = heap.top();
    heap.pop();
    // park leaves whose estimate is already at the estimator's noise floor
    if (worst.err <= 32.0 * eps * worst.abs_value) {
      done.push_back(worst);
      since_check++;
      continue;
    }
    const P2 mab{0.5 * (worst.a.x + worst.b.x), 0.5 * (worst.a.y + worst.b.y)};
    const P2 mbc{0.5 * (worst.b.x + worst.c.x), 0.5 * (worst.b.y + worst.c.y)};
    const P2 mca{0.5 * (worst.c.x + worst.a.x), 0.5 * (worst.c.y + worst.a.y)};
    heap.push(make_leaf(worst.a, mab, mca));
    heap.push(make_leaf(mab, worst.b, mbc));
    heap.push(make_leaf(mca, mbc, worst.c));
    heap.push(make_leaf(mab, mbc, mca));
    leaves += 3;
    since_check++;
  }

  res.converged = false;
  return res;
}

LineResult adaptive_line(const std::function<cplx(double)>& f, double a, double b,
                         double tol, int max_depth) {
  static const auto gl12 = [] {
    std::pair<std::vector<double>, std::vector<double>> r;
    gauss_legendre_01(12, r.first, r.second);
    return r;
  }();
  auto panel = [&](double lo, double hi) {
    cplx acc = 0.0;
    for (size_t i = 0; i < gl12.first.size(); ++i)
      acc += gl12.second[i] * f(lo + gl12.first[i] * (hi - lo));
    return acc * (hi - lo);
  };

  LineResult res;
  res.converged = true;
  // explicit stack of (lo, hi, whole-panel value, depth)
  struct Item {
    double lo, hi;
    cplx q;
    int depth;
  };
  std::vector<Item> stack{{a, b, panel(a, b), 0}};
  const double scale_tol = tol * std::max(1.0, std::abs(stack[0].q));
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (it.lo + it.hi);
    const cplx ql = panel(it.lo, mid);
    const cplx qr = panel(mid, it.hi);
    const double err = std::abs(ql + qr - it.q);
    if (err <= scale_tol * std::max(1e-3, (it.hi - it.lo) / (b - a)) || it.depth >= max_depth) {
      if (it.depth >= max_depth && err > scale_tol) res.converged = false;
      res.value += ql + qr;
      res.error_estimate += err;
    } else {
      stack.push_back({it.lo, mid, ql, it.depth + 1});
      stack.push_back({mid, it.hi, qr, it.depth + 1});
    }
  }
  return res;
}

}  // namespace ripe
