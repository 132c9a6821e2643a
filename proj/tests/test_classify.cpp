#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "twistor4/classify.hpp"
#include "twistor4/errors.hpp"
#include "twistor4/json_io.hpp"
#include "twistor4/rng.hpp"
#include "twistor4/zoo.hpp"

using namespace twistor4;

namespace {

ScanConfig small_scan(int n = 50, std::uint64_t seed = 3) {
  ScanConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  return cfg;
}

void check_chain(const ClassificationReport& r) {
  if (r.in_k) {
    CHECK(r.in_ak);
    CHECK(r.in_nk);
  }
  if (r.in_ak || r.in_nk) CHECK(r.in_qk);
  if (r.in_qk) CHECK(r.in_qqk);
  if (r.in_qqk) CHECK(r.in_sk);
}

}  // namespace

TEST_CASE("class membership of the fixtures") {
  {
    const TwistorPointData d = build(space_form(1.0).curvature, 1.0);
    const ClassificationReport r = gray_hervella(d, Structure::AHS, 1e-8);
    CHECK(r.in_k);
    CHECK(r.k == 0.0);
    CHECK(r.in_sk);
    check_chain(r);
  }
  {
    // nearly Kaehler case of the ES structure: scalar curvature 6/t^2
    const TwistorPointData d = build(space_form(0.5).curvature, 1.0);
    const ClassificationReport r = gray_hervella(d, Structure::ES, 1e-8);
    CHECK(r.in_nk);
    CHECK_FALSE(r.in_k);
    CHECK(r.k >= 0.4);
    check_chain(r);
  }
  {
    // almost Kaehler case of the ES structure: scalar curvature -12/t^2
    const TwistorPointData d = build(space_form(-1.0).curvature, 1.0);
    const ClassificationReport r = gray_hervella(d, Structure::ES, 1e-8);
    CHECK(r.in_ak);
    CHECK_FALSE(r.in_k);
    check_chain(r);
  }
  {
    // self-dual but not Einstein: semi-Kaehler only
    const TwistorPointData d = build(zoo_by_name("pure-ricci")->curvature, 1.0);
    const ClassificationReport r = gray_hervella(d, Structure::AHS, 1e-8);
    CHECK(r.in_sk);
    CHECK_FALSE(r.in_k);
    CHECK(r.k > 0.1);
    check_chain(r);
  }
}

TEST_CASE("class inclusion chain holds on random inputs") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const TwistorPointData d = build(random_curvature(s).curvature, 1.0);
    check_chain(gray_hervella(d, Structure::AHS, 1e-8));
    check_chain(gray_hervella(d, Structure::ES, 1e-8));
  }
}

TEST_CASE("semi-Kaehler residual ties to the off-diagonal A entries") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const AlgebraicCurvature c = random_curvature(s).curvature;
    for (double t : {0.8, 1.0, 1.5}) {
      const TwistorPointData d = build(c, t);
      const CurvatureBlocks b = decompose_blocks(c);
      const double expect =
          2.0 * t * std::max(std::fabs(b.a[0][1]), std::fabs(b.a[0][2]));
      CHECK(gray_hervella(d, Structure::AHS, 1e-8).sk ==
            doctest::Approx(expect).epsilon(1e-10));
      CHECK(gray_hervella(d, Structure::ES, 1e-8).sk ==
            doctest::Approx(expect).epsilon(1e-10));
    }
  }
}

TEST_CASE("linear residual: special coefficient vectors") {
  {
    const TwistorPointData d = build(space_form(1.0).curvature, 1.0);
    LinearCondition any;
    any.a = {0.3, -1.0, 0.5, 0.0, 2.0, 0.0, 1.0, -0.7};
    CHECK(linear_residual(d, any, Structure::AHS) == 0.0);
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const TwistorPointData d = build(random_curvature(s).curvature, 1.1);
    // a1 alone reproduces the K residual
    LinearCondition k_cond;
    k_cond.a[0] = 1.0;
    CHECK(linear_residual(d, k_cond, Structure::AHS) ==
          doctest::Approx(d.nabla_j.max_abs()).epsilon(1e-12));
    // the integrability combination reproduces the Nijenhuis maximum
    LinearCondition nij;
    nij.a = {0, 0, -1, 1, 0, 0, -1, 1};
    CHECK(linear_residual(d, nij, Structure::AHS) ==
          doctest::Approx(d.nj.max_abs()).epsilon(1e-10));
    CHECK(linear_residual(d, nij, Structure::ES) ==
          doctest::Approx(d.njj.max_abs()).epsilon(1e-10));
  }
  {
    // the product fixture rotated so its A block is diag(0,1,0)
    const Mat3 pc{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}};
    const FrameRotation r = so4_from_so3_pair(pc, identity<3>());
    const TwistorPointData d =
        build(rotate_curvature(product_spheres(1.0, 1.0).curvature, r), 1.0);
    LinearCondition nij;
    nij.a = {0, 0, -1, 1, 0, 0, -1, 1};
    CHECK(linear_residual(d, nij, Structure::AHS) >= 2.0 - 1e-9);
  }
}

TEST_CASE("quadratic Einstein residual") {
  CHECK(quadratic_einstein_residual(build(space_form(1.0).curvature, 1.0)) == 0.0);
  CHECK(quadratic_einstein_residual(build(zoo_by_name("pure-ricci")->curvature, 1.0)) ==
        doctest::Approx(0.5));
  const ScanReport rep =
      frame_scan(product_spheres(1.0, 1.0).curvature, "quadratic-einstein",
                 small_scan(100, 17));
  CHECK(rep.worst_residual <= 1e-9);
}

TEST_CASE("quadratic Nijenhuis residual") {
  // Einstein inputs kill it at every frame.
  const ScanReport rep = frame_scan(product_spheres(1.0, 1.0).curvature,
                                    "nijenhuis-quadratic", small_scan(100, 23));
  CHECK(rep.worst_residual <= 1e-9);

  // For the witness the standard frame realizes 2 t^2 |B_32| |A_22 - A_33|,
  // twice the printed product (its factors are N^5_13 = 2t(A_33 - A_22) and
  // J^5_{3,1} + J^5_{1,3} = -t B_32).
  for (double t : {1.0, 1.3}) {
    const TwistorPointData d = build(nij_quadratic_witness(0.3).curvature, t);
    CHECK(nijenhuis_quadratic_residual(d) ==
          doctest::Approx(2.0 * t * t * 0.3).epsilon(1e-12));
  }
}

TEST_CASE("scalar gaps of the fixtures") {
  {
    const auto [lo, hi] = scalar_gaps(build(space_form(1.0).curvature, 1.0));
    CHECK(lo == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(hi == doctest::Approx(0.0).epsilon(1e-13));
  }
  {
    const auto [lo, hi] = scalar_gaps(build(space_form(0.0).curvature, 1.0));
    CHECK(lo == doctest::Approx(4.0));
    CHECK(hi == doctest::Approx(8.0));
  }
  {
    const auto [lo, hi] =
        scalar_gaps(build(product_spheres(1.0, 1.0).curvature, std::sqrt(3.0)));
    CHECK(lo == doctest::Approx(-20.0 / 3.0));
    CHECK(hi == doctest::Approx(32.0 / 3.0));
  }
}

TEST_CASE("frame scan: structured frames, determinism, thread independence") {
  const AlgebraicCurvature pr = zoo_by_name("pure-ricci")->curvature;
  const ScanReport rep = frame_scan(pr, "quadratic-einstein", small_scan(100, 5));
  CHECK(rep.worst_residual >= 0.5 - 1e-9);
  CHECK(rep.structured_residuals.front().first == "identity");
  CHECK(rep.structured_residuals.front().second == doctest::Approx(0.5));

  const ScanReport again = frame_scan(pr, "quadratic-einstein", small_scan(100, 5));
  CHECK(scan_report_json(rep).dump() == scan_report_json(again).dump());

  ScanConfig threaded = small_scan(100, 5);
  threaded.threads = 4;
  const ScanReport parallel = frame_scan(pr, "quadratic-einstein", threaded);
  CHECK(scan_report_json(rep).dump() == scan_report_json(parallel).dump());

  for (const auto& check : {"k", "nijenhuis-max", "quadratic-einstein"}) {
    const ScanReport zero = frame_scan(space_form(1.0).curvature, check, small_scan(60, 9));
    CHECK(zero.worst_residual <= 1e-12);
  }

  CHECK_THROWS_AS(frame_scan(pr, "no-such-check", small_scan(1, 1)), UnknownCheckName);
}

TEST_CASE("theorem verdicts on the fixtures") {
  const ScanConfig cfg = small_scan(60, 19);

  CHECK(theorem_check("T5.4-muskarov-J", space_form(1.0).curvature, 1.0, cfg).verdict ==
        "PASS");
  CHECK(theorem_check("T5.4-muskarov-J", product_spheres(1.0, 1.0).curvature, 1.0, cfg)
            .verdict == "PASS");  // converse branch
  CHECK(theorem_check("T5.2-integrability", product_spheres(1.0, 1.0).curvature, 1.0,
                      cfg).verdict == "PASS");
  CHECK(theorem_check("T5.2-integrability", space_form(1.0).curvature, 1.0, cfg)
            .verdict == "PASS");
  CHECK(theorem_check("T5.6-muskarov-JJ", space_form(-1.0).curvature, 1.0, cfg)
            .verdict == "PASS");
  CHECK(theorem_check("T5.6-muskarov-JJ", space_form(0.5).curvature, 1.0, cfg)
            .verdict == "PASS");
  CHECK(theorem_check("T1.1-linear", product_spheres(1.0, 1.0).curvature, 1.0,
                      small_scan(25, 4)).verdict == "PASS");
  CHECK(theorem_check("T1.2-quadratic", product_spheres(1.0, 1.0).curvature, 1.0, cfg)
            .verdict == "PASS");
  CHECK(theorem_check("T1.2-quadratic", zoo_by_name("pure-ricci")->curvature, 1.0, cfg)
            .verdict == "PASS");  // converse witness
  CHECK(theorem_check("T1.3-nij-quadratic", space_form(1.0).curvature, 1.0, cfg)
            .verdict == "PASS");
  CHECK(theorem_check("T1.3-nij-quadratic", nij_quadratic_witness().curvature, 1.0, cfg)
            .verdict == "PASS");  // converse witness

  const TheoremVerdict t14 =
      theorem_check("T1.4-gaps", product_spheres(1.0, 1.0).curvature, 0.0, cfg);
  CHECK(t14.verdict == "FLAGGED");
  CHECK(t14.t == doctest::Approx(std::sqrt(3.0)));
  double lo = 0.0, hi = 0.0;
  for (const auto& [name, v] : t14.residuals) {
    if (name == "gap-low") lo = v;
    if (name == "gap-high") hi = v;
  }
  CHECK(lo == doctest::Approx(-20.0 / 3.0));
  CHECK(hi == doctest::Approx(32.0 / 3.0));

  CHECK(theorem_check("T1.4-gaps", space_form(1.0).curvature, 1.0, cfg).verdict ==
        "PASS");

  CHECK_THROWS_AS(theorem_check("T9.9-unknown", space_form(1.0).curvature, 1.0, cfg),
                  UnknownTheoremId);
}

TEST_CASE("no theorem ever fails on a valid geometric fixture") {
  // Every implemented statement is a theorem, so on honest inputs the only
  // admissible verdicts are PASS and FLAGGED.
  const ScanConfig cfg = small_scan(25, 17);
  const char* theorems[] = {"T5.2-integrability", "T5.4-muskarov-J",
                            "T5.6-muskarov-JJ",   "T1.1-linear",
                            "T1.2-quadratic",     "T1.3-nij-quadratic",
                            "T1.4-gaps"};
  for (const auto& name : zoo_names())
    for (double t : {0.5, 1.0, 2.0})
      for (const char* th : theorems) {
        CAPTURE(name);
        CAPTURE(t);
        CAPTURE(th);
        const TheoremVerdict v =
            theorem_check(th, zoo_by_name(name)->curvature, t, cfg);
        CHECK(v.verdict != "FAIL");
      }
}

TEST_CASE("verdicts are deterministic given the configuration") {
  const ScanConfig cfg = small_scan(40, 77);
  const TheoremVerdict a =
      theorem_check("T1.2-quadratic", product_spheres(1.0, 1.0).curvature, 1.0, cfg);
  const TheoremVerdict b =
      theorem_check("T1.2-quadratic", product_spheres(1.0, 1.0).curvature, 1.0, cfg);
  CHECK(verdict_to_json(a).dump() == verdict_to_json(b).dump());
}
