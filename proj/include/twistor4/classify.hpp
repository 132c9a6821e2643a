#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistor4/curvature.hpp"
#include "twistor4/twistor_space.hpp"

// Almost Hermitian class membership for the two twistor structures, the
// first-order residuals (general linear condition, the two quadratic
// conditions, scalar-curvature gaps), and the frame-scanning engine that
// realizes "for every orthonormal frame" quantifiers numerically.

namespace twistor4 {

/// Coefficients (a1..a8) of the general first-order linear condition.
struct LinearCondition {
  std::array<double, 8> a{};
  bool nonzero() const {
    for (double v : a)
      if (v != 0.0) return true;
    return false;
  }
};

struct ClassificationReport {
  Structure structure = Structure::AHS;
  double t = 1.0;
  double tol = 1e-8;
  // max residual of the defining component equation of each class
  double k = 0.0, ak = 0.0, nk = 0.0, qk = 0.0, qqk = 0.0, sk = 0.0;
  bool in_k = false, in_ak = false, in_nk = false, in_qk = false, in_qqk = false,
       in_sk = false;
};

ClassificationReport gray_hervella(const TwistorPointData& data, Structure s,
                                   double tol);

/// max over (p,q,t) of the 8-term combination of the covariant derivative.
double linear_residual(const TwistorPointData& data, const LinearCondition& cond,
                       Structure s);

/// max over (p,q) of |sum_t (J^t_pq + J^t_qp)(J^t_pp - J^t_qq)|.
double quadratic_einstein_residual(const TwistorPointData& data);

/// max over (p,q,t) of |(J^t_qp + J^t_pq) N^t_pq| (no summation).
double nijenhuis_quadratic_residual(const TwistorPointData& data);

/// (sj + |nabla J|^2 / 2, |nabla J|^2 - sj), signs preserved.
std::pair<double, double> scalar_gaps(const TwistorPointData& data);

struct ScanConfig {
  int n = 1000;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  double t = 1.0;
  Structure structure = Structure::AHS;
  int threads = 1;
  LinearCondition linear;  // only read by the "linear" check
};

struct ScanReport {
  std::string check;
  int n_samples = 0;
  std::uint64_t seed = 0;
  double t = 1.0;
  Structure structure = Structure::AHS;
  double worst_residual = 0.0;
  std::string worst_frame_label;  // structured name or "sample-<i>"
  Mat4 worst_frame = identity<4>();
  std::vector<std::pair<std::string, double>> structured_residuals;
};

/// The frame changes used in the finitely-many-rotations arguments:
/// identity, the displayed permutation-type and Givens-type SO(3) pairs.
const std::vector<std::pair<std::string, FrameRotation>>& structured_frames();

/// Known residual names: k, ak, nk, qk, qqk, sk, nijenhuis-max,
/// quadratic-einstein, nijenhuis-quadratic, linear.
/// Throws UnknownCheckName.
ScanReport frame_scan(const AlgebraicCurvature& c, const std::string& check,
                      const ScanConfig& cfg);

/// Residual of a named check on already-built twistor data.
double evaluate_check(const TwistorPointData& data, const std::string& check,
                      const ScanConfig& cfg);

struct TheoremVerdict {
  std::string theorem;
  std::string input_fingerprint;
  std::string verdict;  // PASS | FAIL | FLAGGED
  std::vector<std::pair<std::string, double>> residuals;
  int frames_checked = 0;
  double t = 1.0;
  std::vector<std::string> notes;
};

/// Known ids: T5.2-integrability, T5.4-muskarov-J, T5.6-muskarov-JJ,
/// T1.1-linear, T1.2-quadratic, T1.3-nij-quadratic, T1.4-gaps.
/// Pass t <= 0 to let T1.4 pick t = sqrt(12/S) (elsewhere t defaults to 1).
/// Throws UnknownTheoremId.
TheoremVerdict theorem_check(const std::string& id, const AlgebraicCurvature& c,
                             double t, const ScanConfig& cfg);

}  // namespace twistor4
