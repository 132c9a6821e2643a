#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistor4/lambda2.hpp"
#include "twistor4/linalg.hpp"

// Algebraic curvature tensors at a point of an oriented four-manifold, their
// decomposition into the 3x3 blocks acting on the star eigenspaces, the Weyl
// split, the q tables all fiber-level formulas are written in, and the
// self-dual / Einstein predicates.

namespace twistor4 {

/// Dense 4^4 table R_abcd (0-based indices internally; 1-based in reports).
class Riem4 {
 public:
  double operator()(int a, int b, int c, int d) const { return v_[idx(a, b, c, d)]; }
  double& at(int a, int b, int c, int d) { return v_[idx(a, b, c, d)]; }
  const std::array<double, 256>& raw() const { return v_; }
  std::array<double, 256>& raw() { return v_; }
  double max_abs() const;

 private:
  static std::size_t idx(int a, int b, int c, int d) {
    return static_cast<std::size_t>(((a * 4 + b) * 4 + c) * 4 + d);
  }
  std::array<double, 256> v_{};
};

/// Dense 4^5 table DR_abcd,e of first covariant derivatives.
class DRiem4 {
 public:
  double operator()(int a, int b, int c, int d, int e) const { return v_[idx(a, b, c, d, e)]; }
  double& at(int a, int b, int c, int d, int e) { return v_[idx(a, b, c, d, e)]; }
  bool is_zero() const;
  double max_abs() const;

 private:
  static std::size_t idx(int a, int b, int c, int d, int e) {
    return static_cast<std::size_t>((((a * 4 + b) * 4 + c) * 4 + d) * 4 + e);
  }
  std::array<double, 1024> v_{};
};

struct AlgebraicCurvature {
  Riem4 riem;
  DRiem4 driem;                 // all-zero unless has_derivatives
  bool has_derivatives = false; // false: locally symmetric, driem exact zero
  Orientation orientation = Orientation::negative;

  bool locally_symmetric() const { return !has_derivatives; }
};

struct CurvatureBlocks {
  Mat3 a{};
  Mat3 b{};
  Mat3 c{};
  Sym2 ric;
  double s = 0.0;
};

/// q2/q3/q4 are the pair-trace combinations every fiber formula uses:
/// q2_ab = R_12ab + R_34ab, q3_ab = R_13ab + R_42ab, q4_ab = R_14ab + R_23ab.
struct QTable {
  Mat4 q2{}, q3{}, q4{};
  std::array<std::array<std::array<double, 4>, 4>, 4> dq2{}, dq3{}, dq4{};  // (q_ab)_c
};

struct SymmetryViolation {
  std::string identity;           // which relation failed
  std::array<int, 5> index{};     // 1-based indices, unused slots 0
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<SymmetryViolation> errors;
  std::vector<SymmetryViolation> warnings;  // second Bianchi on driem
  bool ok() const { return errors.empty(); }
  std::string summary() const;
};

struct Predicates {
  bool einstein = false;
  bool self_dual = false;
  bool anti_self_dual = false;
  double einstein_residual = 0.0;       // max |B|
  double self_dual_residual = 0.0;      // max |A - (S/12) I| in the SD-testing block
  double anti_self_dual_residual = 0.0;
  double scalar = 0.0;
};

/// Default validation tolerance: relative 1e-9 against the largest entry,
/// floored at 1e-12.
double curvature_tolerance(const AlgebraicCurvature& c);

ValidationReport validate(const AlgebraicCurvature& c);
void validate_or_throw(const AlgebraicCurvature& c);

std::pair<Sym2, double> ricci_scalar(const AlgebraicCurvature& c);

QTable q_tables(const AlgebraicCurvature& c);

CurvatureBlocks decompose_blocks(const AlgebraicCurvature& c);

/// (W+, W-) as dense tables; their sum is Riem minus its Ricci part.
std::pair<Riem4, Riem4> weyl_split(const AlgebraicCurvature& c);

/// Components in the rotated frame e' = e r (tensorial change on all slots).
AlgebraicCurvature rotate_curvature(const AlgebraicCurvature& c, const FrameRotation& r);

/// A' = a+^T A a+, B' = a-^T B a+, C' = a-^T C a-.
CurvatureBlocks transform_blocks(const CurvatureBlocks& b, const FrameRotation& r);

Predicates predicates(const AlgebraicCurvature& c, double tol);

/// 6x6 matrix of the curvature operator in the lexicographic two-form basis.
Mat6 curvature_operator(const Riem4& r);

/// Blocks read off the 6x6 operator in the alpha bases (test oracle for
/// decompose_blocks; also used to rebuild tensors from block data).
std::array<Mat3, 3> operator_blocks(const Mat6& op);

/// Inverse of decompose_blocks: dense tensor with the given blocks.
/// Requires trace(a) == trace(c) or first Bianchi fails.
Riem4 curvature_from_blocks(const Mat3& a, const Mat3& b, const Mat3& c);

/// Orientation-reversing relabel (swap of frame legs 3 and 4) applied to all
/// component slots; flips the stored orientation flag.
AlgebraicCurvature swap_legs34(const AlgebraicCurvature& c);

/// FNV-1a hash of the component tables, for report provenance.
std::string fingerprint(const AlgebraicCurvature& c);

}  // namespace twistor4
