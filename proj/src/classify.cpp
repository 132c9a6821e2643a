#include "twistor4/classify.hpp"

#include <cmath>
#include <thread>

#include "twistor4/errors.hpp"
#include "twistor4/rng.hpp"

namespace twistor4 {

namespace {

const Tens3& table_of(const TwistorPointData& d, Structure s) {
  return s == Structure::AHS ? d.nabla_j : d.nabla_jj;
}

const Tens3& nijenhuis_of(const TwistorPointData& d, Structure s) {
  return s == Structure::AHS ? d.nj : d.njj;
}

// Residual floor above which a scanned value counts as a genuine nonzero
// witness (all fixture-scale quantities are O(1)).
constexpr double kNonzeroFloor = 1e-6;

}  // namespace

ClassificationReport gray_hervella(const TwistorPointData& data, Structure s,
                                   double tol) {
  const Tens3& jt = table_of(data, s);
  const Mat6 jm = structure_matrix(s);

  ClassificationReport rep;
  rep.structure = s;
  rep.t = data.t;
  rep.tol = tol;

  for (int q = 0; q < 6; ++q)
    for (int p = 0; p < 6; ++p)
      for (int t = 0; t < 6; ++t) {
        const double base = jt(q, p, t);
        rep.k = std::max(rep.k, std::fabs(base));
        rep.ak = std::max(rep.ak, std::fabs(base + jt(p, t, q) + jt(t, q, p)));
        rep.nk = std::max(rep.nk, std::fabs(base + jt(q, t, p)));
        double quasi = base;
        double qq2 = base + jt(q, t, p);
        for (int r = 0; r < 6; ++r)
          for (int w = 0; w < 6; ++w) {
            quasi += jm[t][r] * jm[p][w] * jt(q, w, r);
            qq2 += jm[t][r] * jm[p][w] * jt(q, w, r) +
                   jm[p][r] * jm[t][w] * jt(q, w, r);
          }
        rep.qk = std::max(rep.qk, std::fabs(quasi));
        rep.qqk = std::max(rep.qqk, std::fabs(qq2));
      }
  for (int q = 0; q < 6; ++q) {
    double s1 = 0.0;
    for (int p = 0; p < 6; ++p) s1 += jt(q, p, p);
    rep.sk = std::max(rep.sk, std::fabs(s1));
  }

  rep.in_k = rep.k <= tol;
  rep.in_ak = rep.ak <= tol;
  rep.in_nk = rep.nk <= tol;
  rep.in_qk = rep.qk <= tol;
  rep.in_qqk = rep.qqk <= tol;
  rep.in_sk = rep.sk <= tol;
  return rep;
}

double linear_residual(const TwistorPointData& data, const LinearCondition& cond,
                       Structure s) {
  const Tens3& jt = table_of(data, s);
  const Mat6 jm = structure_matrix(s);
  const auto& a = cond.a;

  double worst = 0.0;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      for (int t = 0; t < 6; ++t) {
        double v = a[0] * jt(t, q, p) + a[1] * jt(t, p, q);
        for (int r = 0; r < 6; ++r) {
          v += a[2] * jm[p][r] * jt(t, q, r) + a[3] * jm[q][r] * jt(t, p, r) +
               a[6] * jm[q][r] * jt(t, r, p) + a[7] * jm[p][r] * jt(t, r, q);
          for (int w = 0; w < 6; ++w)
            v += a[4] * jm[p][r] * jm[q][w] * jt(t, w, r) +
                 a[5] * jm[q][r] * jm[p][w] * jt(t, w, r);
        }
        worst = std::max(worst, std::fabs(v));
      }
  return worst;
}

double quadratic_einstein_residual(const TwistorPointData& data) {
  const Tens3& jt = data.nabla_j;
  double worst = 0.0;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      double s = 0.0;
      for (int t = 0; t < 6; ++t)
        s += (jt(t, p, q) + jt(t, q, p)) * (jt(t, p, p) - jt(t, q, q));
      worst = std::max(worst, std::fabs(s));
    }
  return worst;
}

double nijenhuis_quadratic_residual(const TwistorPointData& data) {
  const Tens3& jt = data.nabla_j;
  const Tens3& n = data.nj;
  double worst = 0.0;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      for (int t = 0; t < 6; ++t)
        worst = std::max(worst, std::fabs((jt(t, q, p) + jt(t, p, q)) * n(t, p, q)));
  return worst;
}

std::pair<double, double> scalar_gaps(const TwistorPointData& data) {
  return {data.sj + 0.5 * data.norm2_nabla_j, data.norm2_nabla_j - data.sj};
}

namespace {

Mat3 m3(std::initializer_list<double> v) {
  Mat3 m{};
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = *it++;
  return m;
}

}  // namespace

const std::vector<std::pair<std::string, FrameRotation>>& structured_frames() {
  static const std::vector<std::pair<std::string, FrameRotation>> frames = [] {
    const double s = 0.70710678118654752440084436210485;
    const Mat3 id3 = identity<3>();
    const Mat3 pa = m3({0, 0, -1, 0, 1, 0, 1, 0, 0});
    const Mat3 pb = m3({1, 0, 0, 0, 0, -1, 0, 1, 0});
    const Mat3 pc = m3({0, -1, 0, 1, 0, 0, 0, 0, 1});
    const Mat3 pct = transpose(pc);
    const Mat3 pd = m3({0, 0, 1, 0, 1, 0, -1, 0, 0});
    const Mat3 g23 = m3({1, 0, 0, 0, s, -s, 0, s, s});
    const Mat3 g12 = m3({s, -s, 0, s, s, 0, 0, 0, 1});
    const Mat3 g13 = m3({s, 0, -s, 0, 1, 0, s, 0, s});

    std::vector<std::pair<std::string, FrameRotation>> out;
    out.emplace_back("identity", induced_so3_pair(identity<4>()));
    out.emplace_back("plus-perm-a", so4_from_so3_pair(pa, id3));
    out.emplace_back("plus-perm-b", so4_from_so3_pair(pb, id3));
    out.emplace_back("plus-perm-c", so4_from_so3_pair(pc, id3));
    out.emplace_back("plus-perm-d", so4_from_so3_pair(pd, id3));
    out.emplace_back("plus-givens-23", so4_from_so3_pair(g23, id3));
    out.emplace_back("plus-givens-12", so4_from_so3_pair(g12, id3));
    out.emplace_back("plus-givens-13", so4_from_so3_pair(g13, id3));
    out.emplace_back("both-perm-c", so4_from_so3_pair(pc, pc));
    out.emplace_back("both-perm-ct", so4_from_so3_pair(pct, pct));
    out.emplace_back("minus-perm-d", so4_from_so3_pair(id3, pd));
    out.emplace_back("minus-perm-a", so4_from_so3_pair(id3, pa));
    out.emplace_back("both-givens-23", so4_from_so3_pair(g23, g23));
    return out;
  }();
  return frames;
}

double evaluate_check(const TwistorPointData& data, const std::string& check,
                      const ScanConfig& cfg) {
  if (check == "k" || check == "ak" || check == "nk" || check == "qk" ||
      check == "qqk" || check == "sk") {
    const ClassificationReport rep = gray_hervella(data, cfg.structure, cfg.tol);
    if (check == "k") return rep.k;
    if (check == "ak") return rep.ak;
    if (check == "nk") return rep.nk;
    if (check == "qk") return rep.qk;
    if (check == "qqk") return rep.qqk;
    return rep.sk;
  }
  if (check == "nijenhuis-max") return nijenhuis_of(data, cfg.structure).max_abs();
  if (check == "quadratic-einstein") return quadratic_einstein_residual(data);
  if (check == "nijenhuis-quadratic") return nijenhuis_quadratic_residual(data);
  if (check == "linear") return linear_residual(data, cfg.linear, cfg.structure);
  throw UnknownCheckName("unknown residual name: " + check);
}

namespace {

void scan_range(const AlgebraicCurvature& c, const std::string& check,
                const ScanConfig& cfg, int begin, int end, std::vector<double>& out) {
  for (int i = begin; i < end; ++i) {
    const FrameRotation r = sample_rotation(SplitMix64::mix(cfg.seed, static_cast<std::uint64_t>(i)));
    const TwistorPointData data = build(rotate_curvature(c, r), cfg.t);
    out[static_cast<std::size_t>(i)] = evaluate_check(data, check, cfg);
  }
}

}  // namespace

ScanReport frame_scan(const AlgebraicCurvature& c, const std::string& check,
                      const ScanConfig& cfg) {
  validate_or_throw(c);

  ScanReport rep;
  rep.check = check;
  rep.n_samples = cfg.n;
  rep.seed = cfg.seed;
  rep.t = cfg.t;
  rep.structure = cfg.structure;
  rep.worst_residual = -1.0;

  for (const auto& [name, rot] : structured_frames()) {
    const TwistorPointData data = build(rotate_curvature(c, rot), cfg.t);
    const double res = evaluate_check(data, check, cfg);
    rep.structured_residuals.emplace_back(name, res);
    if (res > rep.worst_residual) {
      rep.worst_residual = res;
      rep.worst_frame_label = name;
      rep.worst_frame = rot.matrix;
    }
  }

  std::vector<double> sampled(static_cast<std::size_t>(std::max(cfg.n, 0)));
  const int threads = std::max(1, cfg.threads);
  if (threads == 1 || cfg.n < 2 * threads) {
    scan_range(c, check, cfg, 0, cfg.n, sampled);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (cfg.n + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const int b = w * chunk;
      const int e = std::min(cfg.n, b + chunk);
      if (b >= e) break;
      pool.emplace_back([&, b, e] { scan_range(c, check, cfg, b, e, sampled); });
    }
    for (auto& th : pool) th.join();
  }
  // Sequential reduction in index order: identical result at any thread count.
  for (int i = 0; i < cfg.n; ++i) {
    if (sampled[static_cast<std::size_t>(i)] > rep.worst_residual) {
      rep.worst_residual = sampled[static_cast<std::size_t>(i)];
      rep.worst_frame_label = "sample-" + std::to_string(i);
      rep.worst_frame =
          sample_rotation(SplitMix64::mix(cfg.seed, static_cast<std::uint64_t>(i))).matrix;
    }
  }
  if (rep.worst_residual < 0.0) rep.worst_residual = 0.0;
  return rep;
}

namespace {

struct Direction {
  bool expect_zero;      // theorem predicts the residual vanishes on all frames
  double worst;
  bool holds(double tol) const {
    return expect_zero ? worst <= tol : worst > kNonzeroFloor;
  }
};

void note_scan(TheoremVerdict& v, const std::string& label, const ScanReport& rep) {
  v.residuals.emplace_back(label, rep.worst_residual);
}

int frames_per_scan(const ScanConfig& cfg) {
  return cfg.n + static_cast<int>(structured_frames().size());
}

std::vector<LinearCondition> sampled_conditions(std::uint64_t seed, int count) {
  std::vector<LinearCondition> conds;
  for (int i = 0; i < 8; ++i) {
    LinearCondition c;
    c.a[static_cast<std::size_t>(i)] = 1.0;
    conds.push_back(c);
  }
  // The integrability combination and the nearly-Kaehler one.
  LinearCondition nij;
  nij.a = {0, 0, -1, 1, 0, 0, -1, 1};
  conds.push_back(nij);
  LinearCondition nk;
  nk.a = {1, 1, 0, 0, 0, 0, 0, 0};
  conds.push_back(nk);
  SplitMix64 gen(SplitMix64::mix(seed, 0x11c0));
  for (int i = 0; i < count; ++i) {
    LinearCondition c;
    double norm2 = 0.0;
    for (auto& x : c.a) {
      x = gen.next_gaussian();
      norm2 += x * x;
    }
    for (auto& x : c.a) x /= std::sqrt(norm2);
    conds.push_back(c);
  }
  return conds;
}

}  // namespace

TheoremVerdict theorem_check(const std::string& id, const AlgebraicCurvature& c,
                             double t, const ScanConfig& config) {
  validate_or_throw(c);
  ScanConfig cfg = config;
  const Predicates pred = predicates(c, cfg.tol);

  if (t > 0.0) {
    cfg.t = t;
  } else if (id == "T1.4-gaps" && pred.scalar > 0.0) {
    cfg.t = std::sqrt(12.0 / pred.scalar);
  } else {
    cfg.t = 1.0;
  }

  TheoremVerdict v;
  v.theorem = id;
  v.input_fingerprint = fingerprint(c);
  v.t = cfg.t;
  v.residuals.emplace_back("einstein", pred.einstein_residual);
  v.residuals.emplace_back("self-dual", pred.self_dual_residual);
  v.residuals.emplace_back("scalar", pred.scalar);

  const double s_needed_tol = cfg.tol * std::max(1.0, std::fabs(pred.scalar));
  auto scalar_is = [&](double target) {
    return std::fabs(pred.scalar - target) <= s_needed_tol;
  };
  const double tt = cfg.t * cfg.t;

  bool pass = true;

  if (id == "T5.2-integrability") {
    cfg.structure = Structure::AHS;
    const ScanReport rep = frame_scan(c, "nijenhuis-max", cfg);
    note_scan(v, "nijenhuis-max", rep);
    v.frames_checked = frames_per_scan(cfg);
    pass = Direction{pred.self_dual, rep.worst_residual}.holds(cfg.tol);
    v.notes.push_back(pred.self_dual
                          ? "self-dual input: N_J must vanish at every frame"
                          : "non-self-dual input: N_J must be nonzero at some frame");
  } else if (id == "T5.4-muskarov-J") {
    cfg.structure = Structure::AHS;
    const bool m_side = pred.einstein && pred.self_dual && scalar_is(12.0 / tt);
    if (m_side) {
      const ScanReport rep = frame_scan(c, "k", cfg);
      note_scan(v, "k", rep);
      pass = rep.worst_residual <= cfg.tol;
      v.notes.push_back("Einstein, self-dual, S = 12/t^2: twistor space must be Kaehler");
    } else {
      const ScanReport rep = frame_scan(c, "qqk", cfg);
      note_scan(v, "qqk", rep);
      pass = rep.worst_residual > kNonzeroFloor;
      v.notes.push_back("hypotheses fail: even the weakest class must be violated somewhere");
    }
    const ScanReport sk = frame_scan(c, "sk", cfg);
    note_scan(v, "sk", sk);
    pass = pass && Direction{pred.self_dual, sk.worst_residual}.holds(cfg.tol);
    v.frames_checked = 2 * frames_per_scan(cfg);
  } else if (id == "T5.6-muskarov-JJ") {
    cfg.structure = Structure::ES;
    const bool esd = pred.einstein && pred.self_dual;
    const struct {
      const char* check;
      bool expect_zero;
    } branches[] = {
        {"ak", esd && scalar_is(-12.0 / tt)},
        {"nk", esd && scalar_is(6.0 / tt)},
        {"qk", esd},
        {"sk", pred.self_dual},
    };
    for (const auto& br : branches) {
      const ScanReport rep = frame_scan(c, br.check, cfg);
      note_scan(v, br.check, rep);
      pass = pass && Direction{br.expect_zero, rep.worst_residual}.holds(cfg.tol);
    }
    v.frames_checked = 4 * frames_per_scan(cfg);
  } else if (id == "T1.1-linear") {
    if (pred.self_dual) {
      v.notes.push_back("self-dual input: the implication places no constraint");
      v.frames_checked = 0;
    } else {
      // Contrapositive: no nonzero coefficient vector may annihilate nabla J
      // at every frame. Each frame is built once and reused.
      const auto conds = sampled_conditions(cfg.seed, 16);
      std::vector<double> worst(conds.size() * 2, 0.0);
      auto absorb = [&](const TwistorPointData& data) {
        for (std::size_t k = 0; k < conds.size(); ++k) {
          worst[2 * k] = std::max(worst[2 * k],
                                  linear_residual(data, conds[k], Structure::AHS));
          worst[2 * k + 1] = std::max(
              worst[2 * k + 1], linear_residual(data, conds[k], Structure::ES));
        }
      };
      for (const auto& [name, rot] : structured_frames())
        absorb(build(rotate_curvature(c, rot), cfg.t));
      for (int i = 0; i < cfg.n; ++i) {
        const FrameRotation r =
            sample_rotation(SplitMix64::mix(cfg.seed, static_cast<std::uint64_t>(i)));
        absorb(build(rotate_curvature(c, r), cfg.t));
      }
      double min_worst = worst.empty() ? 0.0 : worst[0];
      for (double w : worst) min_worst = std::min(min_worst, w);
      v.residuals.emplace_back("min-over-conditions", min_worst);
      pass = min_worst > kNonzeroFloor;
      v.frames_checked = frames_per_scan(cfg);
      v.notes.push_back("non-self-dual input: every sampled condition must fail at some frame");
    }
  } else if (id == "T1.2-quadratic") {
    cfg.structure = Structure::AHS;
    const ScanReport rep = frame_scan(c, "quadratic-einstein", cfg);
    note_scan(v, "quadratic-einstein", rep);
    v.frames_checked = frames_per_scan(cfg);
    pass = Direction{pred.einstein, rep.worst_residual}.holds(cfg.tol);
    v.notes.push_back(pred.einstein ? "Einstein input: condition must hold at every frame"
                                    : "non-Einstein input: condition must fail at some frame");
  } else if (id == "T1.3-nij-quadratic") {
    cfg.structure = Structure::AHS;
    const ScanReport rep = frame_scan(c, "nijenhuis-quadratic", cfg);
    note_scan(v, "nijenhuis-quadratic", rep);
    v.frames_checked = frames_per_scan(cfg);
    if (pred.einstein) {
      pass = rep.worst_residual <= cfg.tol;
      v.notes.push_back("Einstein input: product must vanish at every frame");
    } else if (!pred.self_dual) {
      pass = rep.worst_residual > kNonzeroFloor;
      v.notes.push_back("non-Einstein, non-self-dual: product must be nonzero at some frame");
    } else {
      v.notes.push_back("self-dual non-Einstein input: converse direction not applicable");
    }
  } else if (id == "T1.4-gaps") {
    const TwistorPointData data = build(c, cfg.t);
    const auto [lo, hi] = scalar_gaps(data);
    v.residuals.emplace_back("gap-low", lo);
    v.residuals.emplace_back("gap-high", hi);
    v.residuals.emplace_back("norm2-nabla-j", data.norm2_nabla_j);
    v.residuals.emplace_back("sj", data.sj);
    v.frames_checked = 1;
    const double gtol = cfg.tol * std::max(1.0, data.norm2_nabla_j);
    bool flagged = false;
    if (!(pred.einstein && pred.scalar > 0.0)) {
      flagged = true;
      v.notes.push_back("hypotheses (Einstein, positive scalar) not met; gaps reported only");
    } else if (lo < -gtol || hi < -gtol) {
      flagged = true;
      v.notes.push_back("a gap is negative: measured values disagree with the stated bound");
    } else if (pred.self_dual && std::min(std::fabs(lo), std::fabs(hi)) > gtol) {
      flagged = true;
      v.notes.push_back("self-dual input but neither equality case holds");
    } else if (!pred.self_dual && (lo <= gtol || hi <= gtol)) {
      flagged = true;
      v.notes.push_back("non-self-dual input but an equality case holds");
    }
    v.verdict = flagged ? "FLAGGED" : "PASS";
    return v;
  } else {
    throw UnknownTheoremId("unknown theorem id: " + id);
  }

  v.verdict = pass ? "PASS" : "FAIL";
  return v;
}

}  // namespace twistor4
