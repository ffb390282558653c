#pragma once

// Dense complex 2x2 / 4x4 matrices, bispinors, the Pauli and Dirac bases
// and the spin-1/2 rotation operator.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

#include "twirlwave/errors.hpp"

namespace twirlwave {

using Complex = std::complex<double>;

inline constexpr Complex I_unit{0.0, 1.0};

/// Real Cartesian 3-vector.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  [[nodiscard]] constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  [[nodiscard]] double norm() const { return std::sqrt(x * x + y * y + z * z); }
  [[nodiscard]] constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  [[nodiscard]] constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

/// Complex 3-vector (field strengths).
using CVec3 = std::array<Complex, 3>;

[[nodiscard]] inline double norm2(const CVec3& v) { return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]); }

// conj(a) . b
[[nodiscard]] inline Complex cdot(const CVec3& a, const CVec3& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

[[nodiscard]] inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

[[nodiscard]] inline CVec3 conj(const CVec3& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }

/// Dense row-major N x N complex matrix.
template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t size = N;

  constexpr Matrix() = default;

  /// Row-major initializer; missing entries are zero.
  constexpr Matrix(std::initializer_list<Complex> rows) {
    std::size_t k = 0;
    for (const auto& v : rows) {
      if (k < N * N) data_[k++] = v;
    }
  }

  [[nodiscard]] static constexpr Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  [[nodiscard]] static constexpr Matrix diagonal(const std::array<Complex, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  [[nodiscard]] constexpr Complex& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
  [[nodiscard]] constexpr const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

  [[nodiscard]] Matrix adjoint() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  [[nodiscard]] double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  // largest absolute entry
  [[nodiscard]] double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= Complex{s, 0.0}; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<Complex, N * N> data_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

/// Four-component complex column vector.
class Bispinor {
 public:
  constexpr Bispinor() = default;
  constexpr Bispinor(Complex a, Complex b, Complex c, Complex d) : c_{a, b, c, d} {}

  [[nodiscard]] constexpr Complex& operator[](std::size_t i) { return c_[i]; }
  [[nodiscard]] constexpr const Complex& operator[](std::size_t i) const { return c_[i]; }

  [[nodiscard]] auto begin() const { return c_.begin(); }
  [[nodiscard]] auto end() const { return c_.end(); }

  /// psi^+ psi
  [[nodiscard]] double norm2() const {
    return std::norm(c_[0]) + std::norm(c_[1]) + std::norm(c_[2]) + std::norm(c_[3]);
  }
  [[nodiscard]] double norm() const { return std::sqrt(norm2()); }
  [[nodiscard]] double max_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }
  [[nodiscard]] bool is_finite() const {
    for (const auto& v : c_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  Bispinor& operator+=(const Bispinor& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Bispinor& operator-=(const Bispinor& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Bispinor& operator*=(Complex s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Bispinor operator+(Bispinor a, const Bispinor& b) { return a += b; }
  friend Bispinor operator-(Bispinor a, const Bispinor& b) { return a -= b; }
  friend Bispinor operator-(Bispinor a) { return a *= -1.0; }
  friend Bispinor operator*(Complex s, Bispinor a) { return a *= s; }
  friend Bispinor operator*(double s, Bispinor a) { return a *= Complex{s, 0.0}; }

  friend Bispinor operator*(const Mat4& m, const Bispinor& v) {
    Bispinor r;
    for (std::size_t i = 0; i < 4; ++i)
      r.c_[i] = m(i, 0) * v.c_[0] + m(i, 1) * v.c_[1] + m(i, 2) * v.c_[2] + m(i, 3) * v.c_[3];
    return r;
  }

  friend bool operator==(const Bispinor&, const Bispinor&) = default;

 private:
  std::array<Complex, 4> c_{};
};

/// Complex inner product a^+ b.
[[nodiscard]] inline Complex inner(const Bispinor& a, const Bispinor& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2] + std::conj(a[3]) * b[3];
}

/// Bilinear psi^+ M psi. Real (up to rounding) for Hermitian M.
[[nodiscard]] inline Complex bilinear(const Bispinor& psi, const Mat4& m) { return inner(psi, m * psi); }

[[nodiscard]] inline Bispinor conj(const Bispinor& v) {
  return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2]), std::conj(v[3])};
}

[[nodiscard]] inline double max_abs_diff(const Bispinor& a, const Bispinor& b) { return (a - b).max_abs(); }

/// Assemble a 4x4 matrix from 2x2 blocks [[a, b], [c, d]].
[[nodiscard]] inline Mat4 block(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i, j + 2) = b(i, j);
      m(i + 2, j) = c(i, j);
      m(i + 2, j + 2) = d(i, j);
    }
  return m;
}

template <std::size_t N>
[[nodiscard]] Matrix<N> anticommutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b + b * a;
}

template <std::size_t N>
[[nodiscard]] Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b - b * a;
}

template <std::size_t N>
[[nodiscard]] bool is_hermitian(const Matrix<N>& m, double tol = 0.0) {
  return (m - m.adjoint()).max_abs() <= tol;
}

struct PauliBasis {
  Mat2 sigma0;
  Mat2 sigma_x;
  Mat2 sigma_y;
  Mat2 sigma_z;

  [[nodiscard]] const Mat2& sigma(std::size_t axis) const {
    return axis == 0 ? sigma_x : (axis == 1 ? sigma_y : sigma_z);
  }
};

[[nodiscard]] inline const PauliBasis& pauli_basis() {
  static const PauliBasis basis{
      Mat2::identity(),
      Mat2{0.0, 1.0, 1.0, 0.0},
      Mat2{0.0, -I_unit, I_unit, 0.0},
      Mat2{1.0, 0.0, 0.0, -1.0},
  };
  return basis;
}

/// Dirac matrices in the standard representation:
///   alpha0 = diag(s0, s0), alpha_k = [[0, s_k], [s_k, 0]], beta = alpha4 = diag(s0, -s0),
///   alpha5 = [[0, i s0], [-i s0, 0]].
/// {alpha_x, alpha_y, alpha_z, beta, alpha5} are Hermitian involutions that
/// pairwise anticommute. Under psi = (E_x, E_z, iH_x, iH_z), psi^+ beta psi = E^2 - H^2
/// and psi^+ alpha5 psi = -2 E.H.
struct DiracBasis {
  Mat4 alpha0;
  Mat4 alpha_x;
  Mat4 alpha_y;
  Mat4 alpha_z;
  Mat4 beta;
  Mat4 alpha5;

  [[nodiscard]] const Mat4& alpha(std::size_t axis) const {
    return axis == 0 ? alpha_x : (axis == 1 ? alpha_y : alpha_z);
  }

  /// alpha4 is the same matrix as beta.
  [[nodiscard]] const Mat4& alpha4() const { return beta; }

  /// The five mutually anticommuting generators in the order x, y, z, 4, 5.
  [[nodiscard]] std::array<const Mat4*, 5> generators() const {
    return {&alpha_x, &alpha_y, &alpha_z, &beta, &alpha5};
  }

  /// alpha . v for a real 3-vector.
  [[nodiscard]] Mat4 dot(const Vec3& v) const { return v.x * alpha_x + v.y * alpha_y + v.z * alpha_z; }
};

[[nodiscard]] inline const DiracBasis& dirac_basis() {
  static const DiracBasis basis = [] {
    const auto& p = pauli_basis();
    const Mat2 zero;
    const Mat2 i_s0 = I_unit * p.sigma0;
    return DiracBasis{
        block(p.sigma0, zero, zero, p.sigma0),
        block(zero, p.sigma_x, p.sigma_x, zero),
        block(zero, p.sigma_y, p.sigma_y, zero),
        block(zero, p.sigma_z, p.sigma_z, zero),
        block(p.sigma0, zero, zero, -p.sigma0),
        block(zero, i_s0, -i_s0, zero),
    };
  }();
  return basis;
}

/// Doubled spin matrix Sigma_k = diag(sigma_k, sigma_k).
[[nodiscard]] inline Mat4 spin_matrix(std::size_t axis) {
  const Mat2 zero;
  const Mat2& s = pauli_basis().sigma(axis);
  return block(s, zero, zero, s);
}

inline constexpr double unit_axis_tolerance = 1e-12;

/// Spinor rotation U(n, theta) = cos(theta/2) I - i sin(theta/2) (n . Sigma).
/// U(n, 2 pi) = -I; only a 4 pi turn returns to the identity.
[[nodiscard]] inline Mat4 rotation_operator(const Vec3& axis, double angle) {
  if (!(std::abs(axis.norm() - 1.0) <= unit_axis_tolerance))
    throw invalid_input("rotation axis must be a unit vector");
  const Mat4 n_sigma = axis.x * spin_matrix(0) + axis.y * spin_matrix(1) + axis.z * spin_matrix(2);
  const double half = 0.5 * angle;
  return std::cos(half) * Mat4::identity() + (-I_unit * std::sin(half)) * n_sigma;
}

}  // namespace twirlwave
