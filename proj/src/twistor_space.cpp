#include "twistor4/twistor_space.hpp"

#include <cmath>

#include "twistor4/errors.hpp"

namespace twistor4 {

double Riem6::max_abs() const {
  double m = 0.0;
  for (double v : v_) m = std::max(m, std::fabs(v));
  return m;
}

double Tens3::max_abs() const {
  double m = 0.0;
  for (double v : v_) m = std::max(m, std::fabs(v));
  return m;
}

double Tens3::max_abs_diff(const Tens3& other) const {
  double m = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i)
    m = std::max(m, std::fabs(v_[i] - other.v_[i]));
  return m;
}

Mat6 structure_matrix(Structure s) {
  Mat6 j{};
  j[0][1] = 1.0; j[1][0] = -1.0;
  j[2][3] = 1.0; j[3][2] = -1.0;
  const double f = s == Structure::AHS ? 1.0 : -1.0;
  j[4][5] = f; j[5][4] = -f;
  return j;
}

namespace {

// Index classes for the 6-dimensional frame: 0..3 horizontal, 4 and 5 fiber.
enum class PairKind { BaseBase, Base5, Base6, Fiber56 };

struct RbarBuilder {
  const Riem4& base;
  const QTable& q;
  double t;

  double q2(int a, int b) const { return q.q2[a][b]; }
  double q3(int a, int b) const { return q.q3[a][b]; }
  double q4(int a, int b) const { return q.q4[a][b]; }
  double dq3(int a, int b, int c) const { return q.dq3[a][b][c]; }
  double dq4(int a, int b, int c) const { return q.dq4[a][b][c]; }

  double s33(int a, int b) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) s += q3(a, c) * q3(b, c);
    return s;
  }
  double s44(int a, int b) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) s += q4(a, c) * q4(b, c);
    return s;
  }
  double s34(int a, int b) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) s += q3(a, c) * q4(b, c);
    return s;
  }

  static PairKind kind(int x, int y) {  // requires x < y
    if (y < 4) return PairKind::BaseBase;
    if (x == 4) return PairKind::Fiber56;
    return y == 4 ? PairKind::Base5 : PairKind::Base6;
  }

  double horizontal(int a, int b, int c, int d) const {
    const double t2 = t * t;
    return base(a, b, c, d) -
           0.25 * t2 *
               ((q3(a, c) * q3(b, d) - q3(a, d) * q3(b, c)) +
                (q4(a, c) * q4(b, d) - q4(a, d) * q4(b, c))) -
           0.5 * t2 * (q3(a, b) * q3(c, d) + q4(a, b) * q4(c, d));
  }

  double mixed_fiber_pair(int a, int b) const {  // entry for ((a b),(5 6))
    return q2(a, b) - 0.25 * t * t * (s34(a, b) - s34(b, a));
  }

  /// Entry for sorted pairs (p<q), (r<s); handles every pattern directly.
  double sorted_entry(int p, int qq, int r, int s) const {
    const PairKind k1 = kind(p, qq);
    const PairKind k2 = kind(r, s);
    const double t2 = t * t;
    using PK = PairKind;
    if (k1 == PK::BaseBase && k2 == PK::BaseBase) return horizontal(p, qq, r, s);
    if (k1 == PK::BaseBase && k2 == PK::Base5) return -0.5 * t * dq3(p, qq, r);
    if (k1 == PK::BaseBase && k2 == PK::Base6) return -0.5 * t * dq4(p, qq, r);
    if (k1 == PK::Base5 && k2 == PK::BaseBase) return -0.5 * t * dq3(r, s, p);
    if (k1 == PK::Base6 && k2 == PK::BaseBase) return -0.5 * t * dq4(r, s, p);
    if (k1 == PK::BaseBase && k2 == PK::Fiber56) return mixed_fiber_pair(p, qq);
    if (k1 == PK::Fiber56 && k2 == PK::BaseBase) return mixed_fiber_pair(r, s);
    if (k1 == PK::Base5 && k2 == PK::Base5) return 0.25 * t2 * s33(p, r);
    if (k1 == PK::Base6 && k2 == PK::Base6) return 0.25 * t2 * s44(p, r);
    if (k1 == PK::Base5 && k2 == PK::Base6)
      return 0.5 * q2(p, r) + 0.25 * t2 * s34(r, p);
    if (k1 == PK::Base6 && k2 == PK::Base5)
      return -0.5 * q2(p, r) + 0.25 * t2 * s34(p, r);
    if (k1 == PK::Fiber56 && k2 == PK::Fiber56) return 1.0 / t2;
    return 0.0;  // one pair is (a,fiber), the other (5,6): always zero
  }

  double entry(int p, int qq, int r, int s) const {
    if (p == qq || r == s) return 0.0;
    double sign = 1.0;
    if (p > qq) { std::swap(p, qq); sign = -sign; }
    if (r > s) { std::swap(r, s); sign = -sign; }
    return sign * sorted_entry(p, qq, r, s);
  }
};

}  // namespace

Riem6 twistor_curvature(const Riem4& base, const QTable& q, double t) {
  const RbarBuilder b{base, q, t};
  Riem6 out;
  for (int p = 0; p < 6; ++p)
    for (int qq = 0; qq < 6; ++qq)
      for (int r = 0; r < 6; ++r)
        for (int s = 0; s < 6; ++s) out.at(p, qq, r, s) = b.entry(p, qq, r, s);
  return out;
}

std::pair<Mat6, double> twistor_ricci_scalar(const Riem6& rbar) {
  Mat6 ric{};
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      double s = 0.0;
      for (int r = 0; r < 6; ++r) s += rbar(p, r, q, r);
      ric[p][q] = s;
    }
  return {ric, trace(ric)};
}

Tens3 nabla_j(const QTable& q, double t, Structure s) {
  Tens3 j{};
  const auto& q3 = q.q3;
  const auto& q4 = q.q4;
  const double ht = 0.5 * t;
  const double fib = 1.0 / t;  // (t/2) * (2/t^2)

  // Writes the (p,q) component for direction r, and the antisymmetric image.
  auto set = [&j](int p, int qq, int r, double v) {
    j.at(p, qq, r) = v;
    j.at(qq, p, r) = -v;
  };

  // The (1,3) and (2,4) planes have the same derivative for both structures.
  set(0, 2, 4, -ht * (q3[0][3] + q3[1][2]));
  set(0, 2, 5, fib - ht * (q4[0][3] + q4[1][2]));
  set(0, 3, 4, -(fib - ht * (q3[0][2] + q3[3][1])));
  set(0, 3, 5, ht * (q4[0][2] + q4[3][1]));
  for (int r = 0; r < 6; ++r) {
    set(1, 2, r, j(0, 3, r));
    set(1, 3, r, -j(0, 2, r));
  }

  if (s == Structure::AHS) {
    for (int a = 0; a < 4; ++a) {
      set(0, 4, a, -ht * (q3[1][a] + q4[0][a]));
      set(0, 5, a, ht * (q3[0][a] - q4[1][a]));
      set(2, 4, a, -ht * (q3[3][a] + q4[2][a]));
      set(2, 5, a, ht * (q3[2][a] - q4[3][a]));
    }
    for (int r = 0; r < 6; ++r) {
      set(1, 4, r, j(0, 5, r));
      set(1, 5, r, -j(0, 4, r));
      set(3, 4, r, j(2, 5, r));
      set(3, 5, r, -j(2, 4, r));
    }
  } else {
    for (int a = 0; a < 4; ++a) {
      set(0, 4, a, -ht * (q3[1][a] - q4[0][a]));
      set(0, 5, a, -ht * (q3[0][a] + q4[1][a]));
      set(2, 4, a, -ht * (q3[3][a] - q4[2][a]));
      set(2, 5, a, -ht * (q3[2][a] + q4[3][a]));
    }
    for (int r = 0; r < 6; ++r) {
      set(1, 4, r, -j(0, 5, r));
      set(1, 5, r, j(0, 4, r));
      set(3, 4, r, -j(2, 5, r));
      set(3, 5, r, j(2, 4, r));
    }
  }
  return j;
}

double nabla_j_norm2(const Tens3& nabla) {
  double s = 0.0;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      for (int r = 0; r < 6; ++r) s += nabla(p, q, r) * nabla(p, q, r);
  return s;
}

Tens3 nijenhuis(const Tens3& nabla, Structure s) {
  const Mat6 jm = structure_matrix(s);
  Tens3 n{};
  for (int r = 0; r < 6; ++r)
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) {
        double acc = 0.0;
        for (int w = 0; w < 6; ++w)
          acc += jm[p][w] * nabla(r, w, q) - jm[q][w] * nabla(r, w, p) +
                 jm[q][w] * nabla(r, p, w) - jm[p][w] * nabla(r, q, w);
        n.at(r, p, q) = acc;
      }
  return n;
}

Tens3 nijenhuis_closed(const QTable& q, double t, Structure s) {
  const auto& q3 = q.q3;
  const auto& q4 = q.q4;
  Tens3 n{};
  auto set = [&n](int r, int p, int qq, double v) {
    n.at(r, p, qq) = v;
    n.at(r, qq, p) = -v;
  };
  if (s == Structure::AHS) {
    const double v1 = -t * (q3[0][2] + q3[3][1] - q4[0][3] - q4[1][2]);  // 2t(A33-A22)
    const double v2 = -t * (q3[0][3] + q3[1][2] + q4[0][2] + q4[3][1]);  // -4t A23
    set(4, 0, 2, v1);
    set(4, 1, 3, -v1);
    set(5, 0, 3, -v1);
    set(5, 1, 2, -v1);
    set(4, 0, 3, v2);
    set(4, 1, 2, v2);
    set(5, 0, 2, v2);
    set(5, 1, 3, -v2);
  } else {
    const double w1 = -t * (q3[0][2] + q3[3][1] + q4[0][3] + q4[1][2]);  // -2t(A22+A33)
    const double w2 = -2.0 / (t * t);  // fiber constant as printed in the table
    set(4, 0, 2, w1);
    set(4, 1, 3, -w1);
    set(5, 0, 3, w1);
    set(5, 1, 2, w1);
    set(0, 2, 4, w2);
    set(2, 0, 4, -w2);
    set(3, 0, 5, -w2);
    set(3, 1, 4, w2);
    set(2, 1, 5, -w2);
    set(1, 2, 5, w2);
    set(1, 3, 4, -w2);
    set(0, 3, 5, w2);
  }
  return n;
}

ThreeFormCoeffs kaehler_differential(const Tens3& nabla) {
  ThreeFormCoeffs out;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        const double v = nabla(c, b, a) + nabla(a, c, b) + nabla(b, a, c);
        if (v != 0.0) out[{a, b, c}] = v;
      }
  return out;
}

ThreeFormCoeffs kaehler_differential_closed(const QTable& q, double t, Structure s) {
  const auto& q3 = q.q3;
  const auto& q4 = q.q4;
  const double it = 1.0 / t;
  ThreeFormCoeffs out;
  auto put = [&out](int a, int b, int c, double v) {
    if (v != 0.0) out[{a, b, c}] = v;
  };
  if (s == Structure::AHS) {
    put(0, 1, 4, -t * q4[0][1]);
    put(0, 1, 5, t * q3[0][1]);
    put(0, 2, 4, -t * q4[0][2]);
    put(0, 2, 5, t * q3[0][2] - it);
    put(0, 3, 4, it - t * q4[0][3]);
    put(0, 3, 5, t * q3[0][3]);
    put(1, 2, 4, it - t * q4[1][2]);
    put(1, 2, 5, t * q3[1][2]);
    put(1, 3, 4, t * q4[3][1]);       // listed on theta^4^theta^2^theta^5
    put(1, 3, 5, it - t * q3[3][1]);  // listed on theta^4^theta^2^theta^6
    put(2, 3, 4, -t * q4[2][3]);
    put(2, 3, 5, t * q3[2][3]);
  } else {
    put(0, 1, 4, t * q4[0][1]);
    put(0, 1, 5, -t * q3[0][1]);
    put(0, 2, 4, t * q4[0][2]);
    put(0, 2, 5, -t * q3[0][2] - it);
    put(0, 3, 4, it + t * q4[0][3]);
    put(0, 3, 5, -t * q3[0][3]);
    put(1, 2, 4, it + t * q4[1][2]);
    put(1, 2, 5, -t * q3[1][2]);
    put(1, 3, 4, -t * q4[3][1]);
    put(1, 3, 5, t * q3[3][1] + it);
    put(2, 3, 4, t * q4[2][3]);
    put(2, 3, 5, -t * q3[2][3]);
  }
  return out;
}

Vec6 codifferential(const QTable& q, double t) {
  Vec6 d{};
  d[4] = t * (q.q3[0][1] + q.q3[2][3]);
  d[5] = t * (q.q4[0][1] + q.q4[2][3]);
  return d;
}

std::tuple<Mat6, double, double> ricci_star(const Riem6& rbar, double sbar) {
  const Mat6 jm = structure_matrix(Structure::AHS);
  Mat6 rs{};
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      double acc = 0.0;
      for (int s = 0; s < 6; ++s) {
        if (jm[q][s] == 0.0) continue;
        for (int tt = 0; tt < 6; ++tt)
          for (int u = 0; u < 6; ++u) {
            if (jm[tt][u] == 0.0) continue;
            acc += jm[q][s] * jm[tt][u] * rbar(p, tt, s, u);
          }
      }
      rs[p][q] = acc;
    }
  const double sstar = trace(rs);
  return {rs, sstar, sbar - sstar};
}

namespace {

double max_coeff_diff(const ThreeFormCoeffs& a, const ThreeFormCoeffs& b,
                      std::array<int, 3>* where) {
  double worst = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        const std::array<int, 3> key{i, j, k};
        const auto ai = a.find(key);
        const auto bi = b.find(key);
        const double av = ai == a.end() ? 0.0 : ai->second;
        const double bv = bi == b.end() ? 0.0 : bi->second;
        if (std::fabs(av - bv) > worst) {
          worst = std::fabs(av - bv);
          if (where) *where = key;
        }
      }
  return worst;
}

double coeff_at(const ThreeFormCoeffs& m, const std::array<int, 3>& key) {
  const auto it = m.find(key);
  return it == m.end() ? 0.0 : it->second;
}

/// |q|^2 = sum over both indices of squares.
double table_norm2(const Mat4& q) {
  double s = 0.0;
  for (const auto& row : q)
    for (double v : row) s += v * v;
  return s;
}

struct ClosedForms {
  const TwistorPointData& d;
  double t;

  // Ricci of g_t, component forms as printed.
  double ric_ab(int a, int b, const Sym2& base_ric) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c)
      s += d.q.q3[a][c] * d.q.q3[b][c] + d.q.q4[a][c] * d.q.q4[b][c];
    return base_ric(a, b) - 0.5 * t * t * s;
  }
  double ric_a5(int a) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) s += d.q.dq3[a][c][c];
    return 0.5 * t * s;
  }
  double ric_a6(int a) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) s += d.q.dq4[a][c][c];
    return 0.5 * t * s;
  }
  double ric_55() const { return 1.0 / (t * t) + 0.25 * table_norm2(d.q.q3); }
  double ric_66() const { return 1.0 / (t * t) + 0.25 * table_norm2(d.q.q4); }
  double ric_56() const {
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) s += d.q.q3[a][c] * d.q.q4[a][c];
    return 0.25 * t * t * s;
  }
  double scal() const {
    return d.base_scalar + 2.0 / (t * t) -
           0.25 * t * t * (table_norm2(d.q.q3) + table_norm2(d.q.q4));
  }

  double norm2_nabla_j() const {
    const auto& q3 = d.q.q3;
    const auto& q4 = d.q.q4;
    auto sq = [](double x) { return x * x; };
    const double bracket =
        sq(q3[0][3] + q3[1][2]) + sq(q4[0][3] + q4[1][2]) +
        sq(q3[0][2] + q3[3][1]) + sq(q4[0][2] + q4[3][1]) +
        sq(q3[1][2] - q4[0][3]) + sq(q3[3][1] - q4[0][3]) +
        sq(q3[0][2] - q4[1][2]) + sq(q3[0][3] + q4[3][1]) +
        sq(q3[0][3] + q4[0][2]) + sq(q4[1][2] - q3[3][1]) +
        sq(q4[0][3] - q3[0][2]) + sq(q3[1][2] + q4[3][1]);
    const double tail =
        2.0 * (sq(q3[0][1]) + sq(q4[0][1]) + sq(q3[2][3]) + sq(q4[2][3])) -
        (q3[0][2] + q3[3][1]) - (q4[0][3] + q4[1][2]) +
        8.0 / (t * t * t * t);
    return t * t * (bracket + tail);
  }

  // Ricci*, component forms as printed (base block needs rbar itself).
  double ricstar_ab(int a, int b, const Mat4& jm4) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) {
      if (jm4[b][c] == 0.0) continue;
      double inner = 0.0;
      for (int e = 0; e < 4; ++e)
        for (int dd = 0; dd < 4; ++dd)
          if (jm4[e][dd] != 0.0) inner += jm4[e][dd] * d.rbar(a, e, c, dd);
      inner += -d.rbar(a, 5, c, 4) + d.rbar(a, 4, c, 5);
      s += jm4[b][c] * inner;
    }
    return s;
  }
  double ricstar_a5(int a, const Mat4& jm4) const {
    double s = 0.0;
    for (int dd = 0; dd < 4; ++dd)
      for (int c = 0; c < 4; ++c) s += jm4[dd][c] * d.q.dq4[a][dd][c];
    return 0.5 * t * s;
  }
  double ricstar_5a(int a, const Mat4& jm4) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c)
      for (int dd = 0; dd < 4; ++dd)
        for (int e = 0; e < 4; ++e)
          s += jm4[a][c] * jm4[e][dd] * d.q.dq3[c][dd][e];
    return 0.5 * t * s;
  }
  double ricstar_a6(int a, const Mat4& jm4) const {
    double s = 0.0;
    for (int dd = 0; dd < 4; ++dd)
      for (int c = 0; c < 4; ++c) s += jm4[dd][c] * d.q.dq3[a][dd][c];
    return -0.5 * t * s;
  }
  double ricstar_6a(int a, const Mat4& jm4) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c)
      for (int dd = 0; dd < 4; ++dd)
        for (int e = 0; e < 4; ++e)
          s += jm4[a][c] * jm4[e][dd] * d.q.dq4[c][dd][e];
    return 0.5 * t * s;
  }
  double ricstar_55(const Mat4& jm4) const {
    double s = 0.0;
    for (int c = 0; c < 4; ++c)
      for (int dd = 0; dd < 4; ++dd) {
        if (jm4[dd][c] == 0.0) continue;
        double inner = 0.5 * d.q.q2[dd][c];
        for (int a = 0; a < 4; ++a)
          inner += 0.25 * t * t * d.q.q3[c][a] * d.q.q4[dd][a];
        s += jm4[dd][c] * inner;
      }
    return s + 1.0 / (t * t);
  }
  double scalstar() const {
    const auto& q2 = d.q.q2;
    const auto& q3 = d.q.q3;
    const auto& q4 = d.q.q4;
    auto sq = [](double x) { return x * x; };
    const double t2 = t * t;
    return -1.5 * t2 * (sq(q3[0][1]) + sq(q4[0][1]) + sq(q3[2][3]) + sq(q4[2][3])) +
           t2 * (q3[0][2] * q3[3][1] + q3[0][3] * q3[1][2] + q4[0][2] * q4[3][1] +
                 q4[0][3] * q4[1][2]) -
           2.0 * t2 * (q3[0][1] * q3[2][3] + q4[0][1] * q4[2][3]) +
           6.0 * (q2[0][1] + q2[2][3]) -
           t2 * ((q3[0][2] + q3[3][1]) * (q4[0][3] + q4[1][2]) -
                 (q4[0][2] + q4[3][1]) * (q3[0][3] + q3[1][2])) +
           2.0 / t2;
  }
};

void append_ricci_diffs(TwistorPointData& d, const Sym2& base_ric) {
  const ClosedForms cf{d, d.t};
  double worst = 0.0, ref = 0.0, printed = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double p = cf.ric_ab(a, b, base_ric);
      if (std::fabs(p - d.ricbar[a][b]) >= worst) {
        worst = std::fabs(p - d.ricbar[a][b]);
        ref = d.ricbar[a][b];
        printed = p;
      }
    }
  d.diffs.push_back({"eq:ricctwist:ab", ref, printed, printed - ref});

  worst = 0.0; ref = 0.0; printed = 0.0;
  for (int a = 0; a < 4; ++a) {
    const double p5 = cf.ric_a5(a);
    if (std::fabs(p5 - d.ricbar[a][4]) >= worst) {
      worst = std::fabs(p5 - d.ricbar[a][4]);
      ref = d.ricbar[a][4];
      printed = p5;
    }
    const double p6 = cf.ric_a6(a);
    if (std::fabs(p6 - d.ricbar[a][5]) >= worst) {
      worst = std::fabs(p6 - d.ricbar[a][5]);
      ref = d.ricbar[a][5];
      printed = p6;
    }
  }
  d.diffs.push_back({"eq:ricctwist:a5", ref, printed, printed - ref});

  d.diffs.push_back({"eq:ricctwist:55", d.ricbar[4][4], cf.ric_55(),
                     cf.ric_55() - d.ricbar[4][4]});
  d.diffs.push_back({"eq:ricctwist:56", d.ricbar[4][5], cf.ric_56(),
                     cf.ric_56() - d.ricbar[4][5]});
  d.diffs.push_back({"eq:ricctwist:66", d.ricbar[5][5], cf.ric_66(),
                     cf.ric_66() - d.ricbar[5][5]});
  d.diffs.push_back({"eq:scaltwist", d.sbar, cf.scal(), cf.scal() - d.sbar});
}

void append_ricstar_diffs(TwistorPointData& d) {
  const ClosedForms cf{d, d.t};
  Mat4 jm4{};
  jm4[0][1] = 1.0; jm4[1][0] = -1.0;
  jm4[2][3] = 1.0; jm4[3][2] = -1.0;

  double worst = 0.0, ref = 0.0, printed = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double p = cf.ricstar_ab(a, b, jm4);
      if (std::fabs(p - d.ricstar[a][b]) >= worst) {
        worst = std::fabs(p - d.ricstar[a][b]);
        ref = d.ricstar[a][b];
        printed = p;
      }
    }
  d.diffs.push_back({"eq:ricstarcomp:ab", ref, printed, printed - ref});

  worst = 0.0; ref = 0.0; printed = 0.0;
  auto track = [&](double p, double r) {
    if (std::fabs(p - r) >= worst) {
      worst = std::fabs(p - r);
      ref = r;
      printed = p;
    }
  };
  for (int a = 0; a < 4; ++a) {
    track(cf.ricstar_a5(a, jm4), d.ricstar[a][4]);
    track(cf.ricstar_5a(a, jm4), d.ricstar[4][a]);
    track(cf.ricstar_a6(a, jm4), d.ricstar[a][5]);
    track(cf.ricstar_6a(a, jm4), d.ricstar[5][a]);
  }
  d.diffs.push_back({"eq:ricstarcomp:a5", ref, printed, printed - ref});

  d.diffs.push_back({"eq:ricstarcomp:55", d.ricstar[4][4], cf.ricstar_55(jm4),
                     cf.ricstar_55(jm4) - d.ricstar[4][4]});
  d.diffs.push_back({"eq:ricstarcomp:56", d.ricstar[4][5], 0.0,
                     0.0 - d.ricstar[4][5] + 0.0});
  d.diffs.push_back({"eq:ricstarcomp:66", d.ricstar[5][5], cf.ricstar_55(jm4),
                     cf.ricstar_55(jm4) - d.ricstar[5][5]});
  d.diffs.push_back({"eq:scalstarcurv", d.sstar, cf.scalstar(),
                     cf.scalstar() - d.sstar});
}

}  // namespace

TwistorPointData build(const AlgebraicCurvature& input, double t) {
  if (!(t > 0.0)) throw NonPositiveT("fiber parameter t must be positive");
  validate_or_throw(input);

  TwistorPointData d;
  d.t = t;
  AlgebraicCurvature c = input;
  if (input.orientation == Orientation::positive) {
    // The fiber tables assume a negatively oriented base frame.
    c = swap_legs34(input);
    d.converted_orientation = true;
  }

  d.q = q_tables(c);
  d.blocks = decompose_blocks(c);
  d.base_scalar = d.blocks.s;

  d.rbar = twistor_curvature(c.riem, d.q, t);
  std::tie(d.ricbar, d.sbar) = twistor_ricci_scalar(d.rbar);

  d.nabla_j = nabla_j(d.q, t, Structure::AHS);
  d.nabla_jj = nabla_j(d.q, t, Structure::ES);
  d.norm2_nabla_j = nabla_j_norm2(d.nabla_j);
  d.norm2_nabla_jj = nabla_j_norm2(d.nabla_jj);

  d.nj = nijenhuis(d.nabla_j, Structure::AHS);
  d.nj_closed = nijenhuis_closed(d.q, t, Structure::AHS);
  d.njj = nijenhuis(d.nabla_jj, Structure::ES);
  d.njj_closed = nijenhuis_closed(d.q, t, Structure::ES);

  d.domega_plus = kaehler_differential(d.nabla_j);
  d.domega_minus = kaehler_differential(d.nabla_jj);
  for (int q = 0; q < 6; ++q) {
    double sp = 0.0, sm = 0.0;
    for (int p = 0; p < 6; ++p) {
      sp -= d.nabla_j(q, p, p);
      sm -= d.nabla_jj(q, p, p);
    }
    d.delta_omega_plus[q] = sp;
    d.delta_omega_minus[q] = sm;
  }

  std::tie(d.ricstar, d.sstar, d.sj) = ricci_star(d.rbar, d.sbar);

  // Cross-check report: every printed closed form against its definition.
  append_ricci_diffs(d, d.blocks.ric);

  const ClosedForms cf{d, t};
  d.diffs.push_back({"eq:squarejplus", d.norm2_nabla_j, cf.norm2_nabla_j(),
                     cf.norm2_nabla_j() - d.norm2_nabla_j});

  {
    const double gap_plus = d.nj.max_abs_diff(d.nj_closed);
    d.diffs.push_back({"eq:nijcompplus", 0.0, gap_plus, gap_plus});
    const double gap_minus = d.njj.max_abs_diff(d.njj_closed);
    d.diffs.push_back({"eq:nijcompmin", 0.0, gap_minus, gap_minus});
  }
  {
    const auto closed_plus = kaehler_differential_closed(d.q, t, Structure::AHS);
    const auto closed_minus = kaehler_differential_closed(d.q, t, Structure::ES);
    std::array<int, 3> at{};
    const double gp = max_coeff_diff(d.domega_plus, closed_plus, &at);
    d.diffs.push_back({"eq:kahtwistplus", coeff_at(d.domega_plus, at),
                       coeff_at(closed_plus, at), gp});
    const double gm = max_coeff_diff(d.domega_minus, closed_minus, &at);
    d.diffs.push_back({"eq:kahtwistmin", coeff_at(d.domega_minus, at),
                       coeff_at(closed_minus, at), gm});

    const Vec6 cod = codifferential(d.q, t);
    double worst = 0.0, ref = 0.0, printed = 0.0;
    for (int k = 0; k < 6; ++k) {
      const double dp = std::fabs(cod[k] - d.delta_omega_plus[k]);
      const double dm = std::fabs(cod[k] - d.delta_omega_minus[k]);
      if (dp >= worst) { worst = dp; ref = d.delta_omega_plus[k]; printed = cod[k]; }
      if (dm >= worst) { worst = dm; ref = d.delta_omega_minus[k]; printed = cod[k]; }
    }
    d.diffs.push_back({"eq:codifftwist", ref, printed, worst});
  }

  append_ricstar_diffs(d);
  return d;
}

double nijenhuis_closed_form_gap(const TwistorPointData& data, bool verify, double tol) {
  const double gap = std::max(data.nj.max_abs_diff(data.nj_closed),
                              data.njj.max_abs_diff(data.njj_closed));
  if (verify && gap > tol)
    throw ClosedFormMismatch("Nijenhuis closed form deviates from definition by " +
                             std::to_string(gap));
  return gap;
}

}  // namespace twistor4
