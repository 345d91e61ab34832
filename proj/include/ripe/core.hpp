#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ripe {

using cplx = std::complex<double>;

inline constexpr double four_pi = 4.0 * 3.14159265358979323846264338327950288;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) { return v * (1.0 / norm(v)); }

struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
  double det() const { return a11 * a22 - a12 * a21; }
};

enum class Kernel { laplace, helmholtz };

// Potential selection bitmask. V = single layer, K = double layer,
// K' = adjoint double layer, D = hypersingular.
enum Potentials : unsigned {
  pot_v = 1u,
  pot_k = 2u,
  pot_kp = 4u,
  pot_d = 8u,
  pot_all = 15u,
};

// Packed index for monomials x^b y^c with b + c <= p, b-major.
constexpr int monomial_count(int p) { return (p + 1) * (p + 2) / 2; }
constexpr int monomial_index(int b, int c, int p) { return b * (p + 1) - b * (b - 1) / 2 + c; }

struct DegenerateElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularTransform : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularPrimitive : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingGhostEntries : std::logic_error {
  using std::logic_error::logic_error;
};
struct ExpansionNotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularOnContour : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ripe
