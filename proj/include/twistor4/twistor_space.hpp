#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "twistor4/curvature.hpp"

// Fiber-level data of the twistor space (Z_-, g_t) at the point singled out
// by the input frame: the full curvature table of g_t, its Ricci contraction
// and scalar, the covariant derivatives of both tautological almost complex
// structures, their Nijenhuis tensors, the Kaehler-form differentials and the
// star-twisted Ricci contraction.
//
// Every quantity that the component tables also give in closed form is
// computed twice: the definition-by-contraction value is authoritative, the
// closed form is evaluated separately and the difference recorded. Closed
// forms are never trusted blindly (two of them are known to disagree with
// their own definitions; the report makes that visible instead of asserting).

namespace twistor4 {

enum class Structure { AHS, ES };  // the two tautological almost complex structures

constexpr const char* to_string(Structure s) { return s == Structure::AHS ? "AHS" : "ES"; }

/// Dense 6^4 table of curvature components on the twistor space.
class Riem6 {
 public:
  double operator()(int p, int q, int r, int s) const { return v_[idx(p, q, r, s)]; }
  double& at(int p, int q, int r, int s) { return v_[idx(p, q, r, s)]; }
  double max_abs() const;

 private:
  static std::size_t idx(int p, int q, int r, int s) {
    return static_cast<std::size_t>(((p * 6 + q) * 6 + r) * 6 + s);
  }
  std::array<double, 1296> v_{};
};

/// 6x6x6 table T[p][q][r] = T^p_{q,r} (value slot, argument slot, direction).
class Tens3 {
 public:
  double operator()(int p, int q, int r) const { return v_[idx(p, q, r)]; }
  double& at(int p, int q, int r) { return v_[idx(p, q, r)]; }
  double max_abs() const;
  double max_abs_diff(const Tens3& other) const;

 private:
  static std::size_t idx(int p, int q, int r) {
    return static_cast<std::size_t>((p * 6 + q) * 6 + r);
  }
  std::array<double, 216> v_{};
};

/// One closed-form-vs-definition comparison in the report.
struct FormulaDiff {
  std::string tag;      // stable formula tag, e.g. "eq:scaltwist"
  double reference;     // value from the definition (contraction / direct sum)
  double printed;       // value of the closed form as printed
  double delta;         // printed - reference (worst entry for tables)
};

/// Coefficients of a 3-form on the 20 ordered triples i<j<k (0-based keys).
using ThreeFormCoeffs = std::map<std::array<int, 3>, double>;

struct TwistorPointData {
  double t = 1.0;
  bool converted_orientation = false;  // input came in positively oriented
  QTable q;
  CurvatureBlocks blocks;   // of the (possibly converted) base curvature
  double base_scalar = 0.0;

  Riem6 rbar;
  Mat6 ricbar{};            // contraction of rbar (authoritative)
  double sbar = 0.0;

  Tens3 nabla_j;            // AHS
  Tens3 nabla_jj;           // ES
  Tens3 nj, nj_closed;      // Nijenhuis of AHS: definition path, table path
  Tens3 njj, njj_closed;    // same for ES

  double norm2_nabla_j = 0.0;   // direct sum over components (AHS)
  double norm2_nabla_jj = 0.0;

  ThreeFormCoeffs domega_plus, domega_minus;
  Vec6 delta_omega_plus{}, delta_omega_minus{};

  Mat6 ricstar{};           // contraction of rbar against J (authoritative)
  double sstar = 0.0;
  double sj = 0.0;          // sbar - sstar

  std::vector<FormulaDiff> diffs;  // closed-form cross-check report
};

/// J matrix on the twistor space: J^q slots of e_p; fiber sign +1 for AHS,
/// -1 for ES.
Mat6 structure_matrix(Structure s);

/// Full curvature table of g_t from the component formulas; all symmetry
/// images filled. Requires a validated, negatively oriented input.
Riem6 twistor_curvature(const Riem4& base, const QTable& q, double t);

/// (Ricci, scalar) by contraction of rbar.
std::pair<Mat6, double> twistor_ricci_scalar(const Riem6& rbar);

/// Covariant derivative table of the chosen structure.
Tens3 nabla_j(const QTable& q, double t, Structure s);

/// Direct component sum of |nabla J|^2.
double nabla_j_norm2(const Tens3& nabla);

/// Nijenhuis tensor from nabla J and the structure matrix (definition path).
Tens3 nijenhuis(const Tens3& nabla, Structure s);

/// Nijenhuis tensor from the closed component table.
Tens3 nijenhuis_closed(const QTable& q, double t, Structure s);

/// d(omega) coefficients from nabla J (definition path).
ThreeFormCoeffs kaehler_differential(const Tens3& nabla);

/// d(omega) coefficients from the closed component table.
ThreeFormCoeffs kaehler_differential_closed(const QTable& q, double t, Structure s);

/// Codifferential, component form (identical for both structures).
Vec6 codifferential(const QTable& q, double t);

/// Ricci* by contraction of rbar against the AHS structure; returns
/// (table, scalar*, sbar - scalar*).
std::tuple<Mat6, double, double> ricci_star(const Riem6& rbar, double sbar);

/// Builds every field. Requires t > 0 (NonPositiveT) and a validated input;
/// positively oriented inputs are converted by swapping frame legs 3 and 4.
TwistorPointData build(const AlgebraicCurvature& c, double t);

/// Worst |definition - closed| over the Nijenhuis tables of `data`; throws
/// ClosedFormMismatch above `tol` when `verify` is set.
double nijenhuis_closed_form_gap(const TwistorPointData& data, bool verify, double tol);

}  // namespace twistor4
