#include "twistor4/lambda2.hpp"

#include <cmath>
#include <string>

#include "twistor4/errors.hpp"
#include "twistor4/rng.hpp"

namespace twistor4 {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
constexpr int kPairLookup[4][4] = {
    {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
}  // namespace

int pair_index(int i, int j) { return kPairLookup[i][j]; }

std::array<int, 2> index_pair(int k) { return {kPairs[k][0], kPairs[k][1]}; }

Mat4 two_form_to_matrix(const TwoForm& f) {
  Mat4 m{};
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = index_pair(k);
    m[i][j] = f[k];
    m[j][i] = -f[k];
  }
  return m;
}

TwoForm matrix_to_two_form(const Mat4& m) {
  TwoForm f;
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = index_pair(k);
    f[k] = m[i][j];
  }
  return f;
}

TwoForm add(const TwoForm& a, const TwoForm& b) {
  TwoForm r;
  for (int k = 0; k < 6; ++k) r[k] = a[k] + b[k];
  return r;
}

TwoForm scale(double s, const TwoForm& a) {
  TwoForm r;
  for (int k = 0; k < 6; ++k) r[k] = s * a[k];
  return r;
}

double inner(const TwoForm& a, const TwoForm& b) {
  double s = 0.0;
  for (int k = 0; k < 6; ++k) s += a[k] * b[k];
  return s;
}

double norm(const TwoForm& a) { return std::sqrt(inner(a, a)); }

TwoForm hodge_star(const TwoForm& f) {
  // *(12) = 34, *(13) = 42 = -(24), *(14) = 23, and involutively back.
  TwoForm r;
  r[0] = f[5];
  r[1] = -f[4];
  r[2] = f[3];
  r[3] = f[2];
  r[4] = -f[1];
  r[5] = f[0];
  return r;
}

std::array<TwoForm, 2> sd_asd_split(const TwoForm& f) {
  const TwoForm s = hodge_star(f);
  TwoForm plus, minus;
  for (int k = 0; k < 6; ++k) {
    plus[k] = 0.5 * (f[k] + s[k]);
    minus[k] = 0.5 * (f[k] - s[k]);
  }
  return {plus, minus};
}

std::array<TwoForm, 6> alpha_basis(Orientation orientation) {
  std::array<TwoForm, 6> b{};
  // alpha_+^1 = (12 + 34)/sqrt2, alpha_+^2 = (13 + 42)/sqrt2,
  // alpha_+^3 = (14 + 23)/sqrt2; minus triple with the opposite sign.
  b[0].c = {kInvSqrt2, 0, 0, 0, 0, kInvSqrt2};
  b[1].c = {0, kInvSqrt2, 0, 0, -kInvSqrt2, 0};
  b[2].c = {0, 0, kInvSqrt2, kInvSqrt2, 0, 0};
  b[3].c = {kInvSqrt2, 0, 0, 0, 0, -kInvSqrt2};
  b[4].c = {0, kInvSqrt2, 0, 0, kInvSqrt2, 0};
  b[5].c = {0, 0, kInvSqrt2, -kInvSqrt2, 0, 0};
  if (orientation == Orientation::negative) {
    for (int k = 0; k < 3; ++k) std::swap(b[k], b[k + 3]);
  }
  return b;
}

Sym2 Sym2::diag(double a, double b, double c, double d) {
  Sym2 s;
  s.set(0, 0, a);
  s.set(1, 1, b);
  s.set(2, 2, c);
  s.set(3, 3, d);
  return s;
}

Sym2 Sym2::identity() { return diag(1, 1, 1, 1); }

Mat4 Sym2::matrix() const {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = (*this)(i, j);
  return m;
}

Mat6 lambda2_action(const Mat4& r) {
  Mat6 l{};
  for (int row = 0; row < 6; ++row) {
    const auto [k, t] = index_pair(row);
    for (int col = 0; col < 6; ++col) {
      const auto [i, j] = index_pair(col);
      l[row][col] = r[k][i] * r[t][j] - r[k][j] * r[t][i];
    }
  }
  return l;
}

TwoForm act(const Mat4& r, const TwoForm& f) {
  const Mat6 l = lambda2_action(r);
  TwoForm out;
  out.c = mul(l, f.c);
  return out;
}

namespace {

/// Projects the 6x6 action onto the two alpha triples; blocks come back in
/// the (plus, minus) order of the positive-orientation basis.
std::array<Mat3, 2> alpha_blocks(const Mat6& l) {
  const auto basis = alpha_basis(Orientation::positive);
  Mat3 plus{}, minus{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec6 lj = mul(l, basis[j].c);
      Vec6 lj2 = mul(l, basis[j + 3].c);
      plus[i][j] = inner(basis[i], TwoForm{lj});
      minus[i][j] = inner(basis[i + 3], TwoForm{lj2});
    }
  return {plus, minus};
}

}  // namespace

FrameRotation induced_so3_pair(const Mat4& r, double tol) {
  if (orthogonality_defect(r) > tol)
    throw NotSpecialOrthogonal("matrix is not orthogonal within tolerance " +
                               std::to_string(tol));
  if (std::fabs(det4(r) - 1.0) > tol)
    throw NotSpecialOrthogonal("matrix has determinant != +1");
  FrameRotation fr;
  fr.matrix = r;
  const auto blocks = alpha_blocks(lambda2_action(r));
  fr.plus = blocks[0];
  fr.minus = blocks[1];
  return fr;
}

namespace {

struct Quat {
  double w, x, y, z;
};

Quat qmul(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat qconj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

/// Unit quaternion of a special orthogonal 3x3 (Shepperd's method).
Quat quat_from_so3(const Mat3& m) {
  const double tr = m[0][0] + m[1][1] + m[2][2];
  Quat q{};
  if (tr > 0.0) {
    double s = std::sqrt(tr + 1.0) * 2.0;
    q.w = 0.25 * s;
    q.x = (m[2][1] - m[1][2]) / s;
    q.y = (m[0][2] - m[2][0]) / s;
    q.z = (m[1][0] - m[0][1]) / s;
  } else if (m[0][0] > m[1][1] && m[0][0] > m[2][2]) {
    double s = std::sqrt(1.0 + m[0][0] - m[1][1] - m[2][2]) * 2.0;
    q.w = (m[2][1] - m[1][2]) / s;
    q.x = 0.25 * s;
    q.y = (m[0][1] + m[1][0]) / s;
    q.z = (m[0][2] + m[2][0]) / s;
  } else if (m[1][1] > m[2][2]) {
    double s = std::sqrt(1.0 + m[1][1] - m[0][0] - m[2][2]) * 2.0;
    q.w = (m[0][2] - m[2][0]) / s;
    q.x = (m[0][1] + m[1][0]) / s;
    q.y = 0.25 * s;
    q.z = (m[1][2] + m[2][1]) / s;
  } else {
    double s = std::sqrt(1.0 + m[2][2] - m[0][0] - m[1][1]) * 2.0;
    q.w = (m[1][0] - m[0][1]) / s;
    q.x = (m[0][2] + m[2][0]) / s;
    q.y = (m[1][2] + m[2][1]) / s;
    q.z = 0.25 * s;
  }
  const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  q.w /= n; q.x /= n; q.y /= n; q.z /= n;
  return q;
}

}  // namespace

FrameRotation so4_from_so3_pair(const Mat3& plus, const Mat3& minus) {
  // Identify R^4 with the quaternions as (1, i, j, k). The map x |-> p x q*
  // induces the rotation of p on the plus triple and of q on the minus one.
  const Quat p = quat_from_so3(plus);
  const Quat q = quat_from_so3(minus);
  const Quat basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  Mat4 r{};
  for (int col = 0; col < 4; ++col) {
    const Quat image = qmul(p, qmul(basis[col], qconj(q)));
    r[0][col] = image.w;
    r[1][col] = image.x;
    r[2][col] = image.y;
    r[3][col] = image.z;
  }
  return induced_so3_pair(r);
}

FrameRotation sample_rotation(std::uint64_t seed) {
  SplitMix64 gen(SplitMix64::mix(seed, 0x74777234ULL));
  Mat4 g{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g[i][j] = gen.next_gaussian();

  // Gram-Schmidt on columns.
  Mat4 r{};
  for (int col = 0; col < 4; ++col) {
    std::array<double, 4> v{};
    for (int i = 0; i < 4; ++i) v[i] = g[i][col];
    for (int prev = 0; prev < col; ++prev) {
      double dot = 0.0;
      for (int i = 0; i < 4; ++i) dot += v[i] * r[i][prev];
      for (int i = 0; i < 4; ++i) v[i] -= dot * r[i][prev];
    }
    double n = 0.0;
    for (int i = 0; i < 4; ++i) n += v[i] * v[i];
    n = std::sqrt(n);
    for (int i = 0; i < 4; ++i) r[i][col] = v[i] / n;
  }
  if (det4(r) < 0.0)
    for (int i = 0; i < 4; ++i) r[i][3] = -r[i][3];
  return induced_so3_pair(r);
}

std::array<double, 256> kulkarni_nomizu(const Sym2& h, const Sym2& k) {
  std::array<double, 256> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          out[static_cast<std::size_t>(((i * 4 + j) * 4 + a) * 4 + b)] =
              h(i, a) * k(j, b) - h(i, b) * k(j, a) + h(j, b) * k(i, a) -
              h(j, a) * k(i, b);
  return out;
}

}  // namespace twistor4
