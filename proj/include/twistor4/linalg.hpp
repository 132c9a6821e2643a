#pragma once

#include <array>
#include <cmath>
#include <cstddef>

// Small fixed-size dense matrices. Everything here is a plain value type;
// dimensions are 3, 4 or 6 and known at compile time, so no dynamic
// allocation and no external linear-algebra dependency is warranted.

namespace twistor4 {

template <std::size_t N>
using Mat = std::array<std::array<double, N>, N>;

using Mat3 = Mat<3>;
using Mat4 = Mat<4>;
using Mat6 = Mat<6>;
using Vec6 = std::array<double, 6>;

template <std::size_t N>
constexpr Mat<N> zero_mat() {
  Mat<N> m{};
  return m;
}

template <std::size_t N>
constexpr Mat<N> identity() {
  Mat<N> m{};
  for (std::size_t i = 0; i < N; ++i) m[i][i] = 1.0;
  return m;
}

template <std::size_t N>
Mat<N> transpose(const Mat<N>& a) {
  Mat<N> t{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) t[i][j] = a[j][i];
  return t;
}

template <std::size_t N>
Mat<N> mul(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const double aik = a[i][k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < N; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

template <std::size_t N>
std::array<double, N> mul(const Mat<N>& a, const std::array<double, N>& v) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += a[i][j] * v[j];
  return r;
}

/// a^T b a  (change of basis for a bilinear form).
template <std::size_t N>
Mat<N> conjugate(const Mat<N>& a, const Mat<N>& b) {
  return mul(transpose(a), mul(b, a));
}

template <std::size_t N>
double max_abs(const Mat<N>& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (double v : row) m = std::max(m, std::fabs(v));
  return m;
}

template <std::size_t N>
double max_abs_diff(const Mat<N>& a, const Mat<N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      m = std::max(m, std::fabs(a[i][j] - b[i][j]));
  return m;
}

template <std::size_t N>
double trace(const Mat<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i][i];
  return s;
}

/// max |a^T a - I|: deviation from orthogonality.
template <std::size_t N>
double orthogonality_defect(const Mat<N>& a) {
  return max_abs_diff(mul(transpose(a), a), identity<N>());
}

inline double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline double det4(const Mat4& m) {
  double d = 0.0;
  for (int c = 0; c < 4; ++c) {
    Mat3 minor{};
    for (int i = 1; i < 4; ++i) {
      int jj = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == c) continue;
        minor[i - 1][jj++] = m[i][j];
      }
    }
    const double cof = ((c % 2) ? -1.0 : 1.0) * m[0][c] * det3(minor);
    d += cof;
  }
  return d;
}

/// Coefficients of det(x I - A) for symmetric A: invariants under conjugation.
/// Returned as {tr, sum of principal 2x2 minors, det}.
inline std::array<double, 3> char_poly_invariants(const Mat4& a) {
  double tr = trace(a);
  double m2 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m2 += a[i][i] * a[j][j] - a[i][j] * a[j][i];
  return {tr, m2, det4(a)};
}

}  // namespace twistor4
