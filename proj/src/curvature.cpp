#include "twistor4/curvature.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "twistor4/errors.hpp"

namespace twistor4 {

double Riem4::max_abs() const {
  double m = 0.0;
  for (double v : v_) m = std::max(m, std::fabs(v));
  return m;
}

bool DRiem4::is_zero() const {
  for (double v : v_)
    if (v != 0.0) return false;
  return true;
}

double DRiem4::max_abs() const {
  double m = 0.0;
  for (double v : v_) m = std::max(m, std::fabs(v));
  return m;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& e : errors) {
    os << e.identity << " at (";
    bool first = true;
    for (int i : e.index) {
      if (i == 0) break;
      if (!first) os << ",";
      os << i;
      first = false;
    }
    os << ") residual " << e.residual << "; ";
  }
  return os.str();
}

double curvature_tolerance(const AlgebraicCurvature& c) {
  const double scale = std::max(c.riem.max_abs(), c.driem.max_abs());
  return std::max(1e-12, 1e-9 * scale);
}

ValidationReport validate(const AlgebraicCurvature& c) {
  ValidationReport rep;
  const double tol = curvature_tolerance(c);
  const Riem4& r = c.riem;

  auto flag = [&rep](const char* id, std::array<int, 5> idx, double res) {
    rep.errors.push_back({id, idx, res});
  };

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int cc = 0; cc < 4; ++cc)
        for (int d = 0; d < 4; ++d) {
          const double v = r(a, b, cc, d);
          double res = std::fabs(v + r(b, a, cc, d));
          if (res > tol)
            flag("antisymmetry in first pair", {a + 1, b + 1, cc + 1, d + 1, 0}, res);
          res = std::fabs(v + r(a, b, d, cc));
          if (res > tol)
            flag("antisymmetry in second pair", {a + 1, b + 1, cc + 1, d + 1, 0}, res);
          res = std::fabs(v - r(cc, d, a, b));
          if (res > tol)
            flag("pair exchange", {a + 1, b + 1, cc + 1, d + 1, 0}, res);
          res = std::fabs(v + r(a, cc, d, b) + r(a, d, b, cc));
          if (res > tol)
            flag("first Bianchi identity", {a + 1, b + 1, cc + 1, d + 1, 0}, res);
        }

  if (c.has_derivatives) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          for (int d = 0; d < 4; ++d)
            for (int e = 0; e < 4; ++e) {
              const double v = c.driem(a, b, cc, d, e);
              double res = std::fabs(v + c.driem(b, a, cc, d, e));
              if (res > tol)
                flag("derivative antisymmetry in first pair",
                     {a + 1, b + 1, cc + 1, d + 1, e + 1}, res);
              res = std::fabs(v + c.driem(a, b, d, cc, e));
              if (res > tol)
                flag("derivative antisymmetry in second pair",
                     {a + 1, b + 1, cc + 1, d + 1, e + 1}, res);
              res = std::fabs(v - c.driem(cc, d, a, b, e));
              if (res > tol)
                flag("derivative pair exchange",
                     {a + 1, b + 1, cc + 1, d + 1, e + 1}, res);
              res = std::fabs(v + c.driem(a, cc, d, b, e) + c.driem(a, d, b, cc, e));
              if (res > tol)
                flag("derivative first Bianchi identity",
                     {a + 1, b + 1, cc + 1, d + 1, e + 1}, res);
            }
    // Second Bianchi is advisory only: warn, never reject.
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          for (int d = 0; d < 4; ++d)
            for (int e = 0; e < 4; ++e) {
              const double res = std::fabs(c.driem(a, b, cc, d, e) +
                                           c.driem(a, b, d, e, cc) +
                                           c.driem(a, b, e, cc, d));
              if (res > tol)
                rep.warnings.push_back({"second Bianchi identity",
                                        {a + 1, b + 1, cc + 1, d + 1, e + 1}, res});
            }
  }
  return rep;
}

void validate_or_throw(const AlgebraicCurvature& c) {
  const ValidationReport rep = validate(c);
  if (!rep.ok())
    throw SymmetryViolationError("curvature symmetry violation: " + rep.summary());
}

std::pair<Sym2, double> ricci_scalar(const AlgebraicCurvature& c) {
  Sym2 ric;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += c.riem(i, k, j, k);
      ric.set(i, j, s);
    }
  return {ric, ric.trace()};
}

QTable q_tables(const AlgebraicCurvature& c) {
  QTable q;
  const Riem4& r = c.riem;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      q.q2[a][b] = r(0, 1, a, b) + r(2, 3, a, b);
      q.q3[a][b] = r(0, 2, a, b) + r(3, 1, a, b);
      q.q4[a][b] = r(0, 3, a, b) + r(1, 2, a, b);
    }
  if (c.has_derivatives) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int e = 0; e < 4; ++e) {
          q.dq2[a][b][e] = c.driem(0, 1, a, b, e) + c.driem(2, 3, a, b, e);
          q.dq3[a][b][e] = c.driem(0, 2, a, b, e) + c.driem(3, 1, a, b, e);
          q.dq4[a][b][e] = c.driem(0, 3, a, b, e) + c.driem(1, 2, a, b, e);
        }
  }
  return q;
}

CurvatureBlocks decompose_blocks(const AlgebraicCurvature& c) {
  CurvatureBlocks out;
  const QTable q = q_tables(c);
  const Riem4& r = c.riem;

  const auto& q2 = q.q2;
  const auto& q3 = q.q3;
  const auto& q4 = q.q4;

  out.a[0][0] = 0.5 * (q2[0][1] + q2[2][3]);
  out.a[1][1] = 0.5 * (q3[0][2] + q3[3][1]);
  out.a[2][2] = 0.5 * (q4[0][3] + q4[1][2]);
  out.a[0][1] = out.a[1][0] = 0.5 * (q3[0][1] + q3[2][3]);
  out.a[0][2] = out.a[2][0] = 0.5 * (q4[0][1] + q4[2][3]);
  out.a[1][2] = out.a[2][1] = 0.5 * (q3[0][3] + q3[1][2]);

  out.b[0][0] = 0.5 * (q2[0][1] - q2[2][3]);
  out.b[1][1] = 0.5 * (q3[0][2] - q3[3][1]);
  out.b[2][2] = 0.5 * (q4[0][3] - q4[1][2]);
  out.b[0][1] = 0.5 * (q3[0][1] - q3[2][3]);
  out.b[1][0] = 0.5 * (q2[0][2] - q2[3][1]);
  out.b[0][2] = 0.5 * (q4[0][1] - q4[2][3]);
  out.b[2][0] = 0.5 * (q2[0][3] - q2[1][2]);
  out.b[1][2] = 0.5 * (q4[0][2] - q4[3][1]);
  out.b[2][1] = 0.5 * (q3[0][3] - q3[1][2]);

  out.c[0][0] = 0.5 * (r(0, 1, 0, 1) - 2.0 * r(0, 1, 2, 3) + r(2, 3, 2, 3));
  out.c[0][1] = out.c[1][0] =
      0.5 * (r(0, 1, 0, 2) - r(0, 2, 2, 3) - r(0, 1, 3, 1) + r(2, 3, 3, 1));
  out.c[0][2] = out.c[2][0] =
      0.5 * (r(0, 1, 0, 3) - r(0, 3, 2, 3) - r(0, 1, 1, 2) + r(1, 2, 2, 3));
  out.c[1][1] = 0.5 * (r(0, 2, 0, 2) - 2.0 * r(0, 2, 3, 1) + r(3, 1, 3, 1));
  out.c[1][2] = out.c[2][1] =
      0.5 * (r(0, 2, 0, 3) - r(0, 3, 3, 1) - r(0, 2, 1, 2) + r(1, 2, 3, 1));
  out.c[2][2] = 0.5 * (r(0, 3, 0, 3) - 2.0 * r(0, 3, 1, 2) + r(1, 2, 1, 2));

  auto [ric, s] = ricci_scalar(c);
  out.ric = ric;
  out.s = s;
  return out;
}

Mat6 curvature_operator(const Riem4& r) {
  Mat6 m{};
  for (int row = 0; row < 6; ++row) {
    const auto [i, j] = index_pair(row);
    for (int col = 0; col < 6; ++col) {
      const auto [k, t] = index_pair(col);
      m[row][col] = r(i, j, k, t);
    }
  }
  return m;
}

std::array<Mat3, 3> operator_blocks(const Mat6& op) {
  const auto basis = alpha_basis(Orientation::positive);
  Mat3 a{}, b{}, c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Vec6 opj = mul(op, basis[j].c);
      const Vec6 opj2 = mul(op, basis[j + 3].c);
      a[i][j] = inner(basis[i], TwoForm{opj});
      b[i][j] = inner(basis[i + 3], TwoForm{opj});
      c[i][j] = inner(basis[i + 3], TwoForm{opj2});
    }
  return {a, b, c};
}

Riem4 curvature_from_blocks(const Mat3& a, const Mat3& b, const Mat3& c) {
  const auto basis = alpha_basis(Orientation::positive);
  Mat6 blk{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      blk[i][j] = a[i][j];
      blk[i][j + 3] = b[j][i];  // B^T block
      blk[i + 3][j] = b[i][j];
      blk[i + 3][j + 3] = c[i][j];
    }
  Mat6 p{};
  for (int col = 0; col < 6; ++col)
    for (int row = 0; row < 6; ++row) p[row][col] = basis[col][row];
  const Mat6 op = mul(p, mul(blk, transpose(p)));

  Riem4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const int row = pair_index(std::min(i, j), std::max(i, j));
      const double s1 = i < j ? 1.0 : -1.0;
      for (int k = 0; k < 4; ++k)
        for (int t = 0; t < 4; ++t) {
          if (k == t) continue;
          const int col = pair_index(std::min(k, t), std::max(k, t));
          const double s2 = k < t ? 1.0 : -1.0;
          out.at(i, j, k, t) = s1 * s2 * op[row][col];
        }
    }
  return out;
}

std::pair<Riem4, Riem4> weyl_split(const AlgebraicCurvature& c) {
  const CurvatureBlocks blocks = decompose_blocks(c);
  const double s12 = blocks.s / 12.0;
  Mat3 ap = blocks.a, cm = blocks.c;
  for (int i = 0; i < 3; ++i) {
    ap[i][i] -= s12;
    cm[i][i] -= s12;
  }
  const Mat3 z{};
  return {curvature_from_blocks(ap, z, z), curvature_from_blocks(z, z, cm)};
}

AlgebraicCurvature rotate_curvature(const AlgebraicCurvature& c, const FrameRotation& fr) {
  const Mat4& r = fr.matrix;
  AlgebraicCurvature out;
  out.orientation = c.orientation;
  out.has_derivatives = c.has_derivatives;

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int cc = 0; cc < 4; ++cc)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
              const double rij = r[i][a] * r[j][b];
              if (rij == 0.0) continue;
              for (int k = 0; k < 4; ++k)
                for (int t = 0; t < 4; ++t)
                  s += rij * r[k][cc] * r[t][d] * c.riem(i, j, k, t);
            }
          out.riem.at(a, b, cc, d) = s;
        }

  if (c.has_derivatives) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          for (int d = 0; d < 4; ++d)
            for (int e = 0; e < 4; ++e) {
              double s = 0.0;
              for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                  for (int k = 0; k < 4; ++k)
                    for (int t = 0; t < 4; ++t)
                      for (int u = 0; u < 4; ++u)
                        s += r[i][a] * r[j][b] * r[k][cc] * r[t][d] * r[u][e] *
                             c.driem(i, j, k, t, u);
              out.driem.at(a, b, cc, d, e) = s;
            }
  }
  return out;
}

CurvatureBlocks transform_blocks(const CurvatureBlocks& b, const FrameRotation& r) {
  CurvatureBlocks out = b;
  out.a = conjugate(r.plus, b.a);
  out.c = conjugate(r.minus, b.c);
  out.b = mul(transpose(r.minus), mul(b.b, r.plus));
  return out;
}

Predicates predicates(const AlgebraicCurvature& c, double tol) {
  const CurvatureBlocks blocks = decompose_blocks(c);
  const double s12 = blocks.s / 12.0;

  Mat3 ap = blocks.a, cm = blocks.c;
  for (int i = 0; i < 3; ++i) {
    ap[i][i] -= s12;
    cm[i][i] -= s12;
  }
  const double res_a = max_abs(ap);
  const double res_c = max_abs(cm);

  Predicates p;
  p.scalar = blocks.s;
  p.einstein_residual = max_abs(blocks.b);
  p.einstein = p.einstein_residual <= tol;
  // In a negatively oriented frame the plus block tests self-duality; in a
  // positively oriented frame the roles are exchanged.
  if (c.orientation == Orientation::negative) {
    p.self_dual_residual = res_a;
    p.anti_self_dual_residual = res_c;
  } else {
    p.self_dual_residual = res_c;
    p.anti_self_dual_residual = res_a;
  }
  p.self_dual = p.self_dual_residual <= tol;
  p.anti_self_dual = p.anti_self_dual_residual <= tol;
  return p;
}

AlgebraicCurvature swap_legs34(const AlgebraicCurvature& c) {
  static constexpr int s[4] = {0, 1, 3, 2};
  AlgebraicCurvature out;
  out.orientation = c.orientation == Orientation::positive ? Orientation::negative
                                                           : Orientation::positive;
  out.has_derivatives = c.has_derivatives;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int cc = 0; cc < 4; ++cc)
        for (int d = 0; d < 4; ++d) {
          out.riem.at(a, b, cc, d) = c.riem(s[a], s[b], s[cc], s[d]);
          if (c.has_derivatives)
            for (int e = 0; e < 4; ++e)
              out.driem.at(a, b, cc, d, e) = c.driem(s[a], s[b], s[cc], s[d], s[e]);
        }
  return out;
}

std::string fingerprint(const AlgebraicCurvature& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto eat = [&h](const char* data, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<unsigned char>(data[i]);
      h *= 0x100000001b3ULL;
    }
  };
  char buf[32];
  for (double v : c.riem.raw()) {
    const int n = std::snprintf(buf, sizeof buf, "%.17g,", v);
    eat(buf, static_cast<std::size_t>(n));
  }
  if (c.has_derivatives)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          for (int d = 0; d < 4; ++d)
            for (int e = 0; e < 4; ++e) {
              const int n =
                  std::snprintf(buf, sizeof buf, "%.17g,", c.driem(a, b, cc, d, e));
              eat(buf, static_cast<std::size_t>(n));
            }
  eat(c.orientation == Orientation::positive ? "+" : "-", 1);
  const int n = std::snprintf(buf, sizeof buf, "%016llx",
                              static_cast<unsigned long long>(h));
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace twistor4
