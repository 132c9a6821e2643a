#pragma once

#include <array>
#include <cstdint>

#include "twistor4/linalg.hpp"

// Two-forms on R^4 in an orthonormal frame, the Hodge star, the splitting of
// Lambda^2 into +1/-1 eigenspaces, and the SO(4) action together with the
// induced pair of SO(3) rotations on the two eigenspaces.

namespace twistor4 {

enum class Orientation { positive, negative };

constexpr const char* to_string(Orientation o) {
  return o == Orientation::positive ? "positive" : "negative";
}

/// A 2-form, stored as its 6 components in the lexicographic basis
/// {theta^i ^ theta^j : 1 <= i < j <= 4}, order (12, 13, 14, 23, 24, 34).
struct TwoForm {
  Vec6 c{};

  double& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
  double operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
};

/// Index of the lexicographic pair (i, j), 0-based, i < j.
int pair_index(int i, int j);

/// The k-th lexicographic pair, 0-based.
std::array<int, 2> index_pair(int k);

/// Antisymmetric 4x4 matrix of a two-form; inverse of matrix_to_two_form.
Mat4 two_form_to_matrix(const TwoForm& f);
TwoForm matrix_to_two_form(const Mat4& m);

TwoForm add(const TwoForm& a, const TwoForm& b);
TwoForm scale(double s, const TwoForm& a);
double inner(const TwoForm& a, const TwoForm& b);
double norm(const TwoForm& a);

/// Hodge star on Lambda^2 for the oriented volume theta^1^...^theta^4.
/// An involution: hodge_star(hodge_star(f)) == f.
TwoForm hodge_star(const TwoForm& f);

/// (self-dual part, anti-self-dual part) = ((f + *f)/2, (f - *f)/2).
std::array<TwoForm, 2> sd_asd_split(const TwoForm& f);

/// Orthonormal eigenbasis of the star operator, (alpha_+^1..3, alpha_-^1..3).
/// For a negatively oriented frame the two triples exchange roles.
std::array<TwoForm, 6> alpha_basis(Orientation orientation);

/// Symmetric (0,2)-tensor. Storage holds one triangle, so the symmetry is
/// exact by construction.
class Sym2 {
 public:
  Sym2() = default;
  static Sym2 diag(double a, double b, double c, double d);
  static Sym2 identity();

  double operator()(int i, int j) const { return v_[slot(i, j)]; }
  void set(int i, int j, double value) { v_[slot(i, j)] = value; }
  double trace() const { return v_[slot(0, 0)] + v_[slot(1, 1)] + v_[slot(2, 2)] + v_[slot(3, 3)]; }
  Mat4 matrix() const;

 private:
  static int slot(int i, int j) {
    if (i > j) { const int t = i; i = j; j = t; }
    // row-major upper triangle of a 4x4
    static constexpr int base[4] = {0, 4, 7, 9};
    return base[i] + (j - i);
  }
  std::array<double, 10> v_{};
};

/// An SO(4) change of frame together with the pair of SO(3) matrices it
/// induces on the star eigenspaces (in the alpha bases of the positive
/// orientation convention).
struct FrameRotation {
  Mat4 matrix = identity<4>();
  Mat3 plus = identity<3>();
  Mat3 minus = identity<3>();
};

/// 6x6 matrix of the induced action on Lambda^2 in the lexicographic basis:
/// eta |-> r eta r^T on antisymmetric matrices.
Mat6 lambda2_action(const Mat4& r);

/// Apply a frame change to a two-form (components eta_ab -> (r eta r^T)_ab).
TwoForm act(const Mat4& r, const TwoForm& f);

/// Validates r in SO(4) and computes the induced SO(3) pair.
/// Throws NotSpecialOrthogonal when r fails orthogonality or det = +1.
FrameRotation induced_so3_pair(const Mat4& r, double tol = 1e-9);

/// The SO(4) rotation whose induced pair is (plus, minus); inputs must be
/// special orthogonal. Inverse of induced_so3_pair up to the double cover.
FrameRotation so4_from_so3_pair(const Mat3& plus, const Mat3& minus);

/// Deterministic Haar-distributed rotation: Gram-Schmidt of a Gaussian 4x4
/// sample with the determinant sign fixed by negating the last column.
FrameRotation sample_rotation(std::uint64_t seed);

/// (h (.) k)_{ijkt} = h_ik k_jt - h_it k_jk + h_jt k_ik - h_jk k_it,
/// returned as the dense 4^4 component table.
std::array<double, 256> kulkarni_nomizu(const Sym2& h, const Sym2& k);

}  // namespace twistor4
