#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "twistor4/errors.hpp"
#include "twistor4/json_io.hpp"
#include "twistor4/zoo.hpp"

using namespace twistor4;
using nlohmann::json;

namespace {

double max_table_diff(const AlgebraicCurvature& a, const AlgebraicCurvature& b) {
  double worst = 0.0;
  for (int i = 0; i < 256; ++i)
    worst = std::max(worst, std::fabs(a.riem.raw()[i] - b.riem.raw()[i]));
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          for (int e = 0; e < 4; ++e)
            worst = std::max(worst, std::fabs(a.driem(p, q, r, s, e) -
                                              b.driem(p, q, r, s, e)));
  return worst;
}

}  // namespace

TEST_CASE("dump and reload every fixture") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    const AlgebraicCurvature c = zoo_by_name(name)->curvature;
    const AlgebraicCurvature back = curvature_from_json(curvature_to_json(c));
    CHECK(max_table_diff(c, back) == 0.0);
    CHECK(back.orientation == c.orientation);
  }
}

TEST_CASE("a single listed component is completed by symmetry") {
  const json doc = {{"orientation", "negative"},
                    {"components", json::array({json::array({1, 2, 1, 2, 3.5})})}};
  const AlgebraicCurvature c = curvature_from_json(doc);
  CHECK(c.riem(0, 1, 0, 1) == 3.5);
  CHECK(c.riem(1, 0, 0, 1) == -3.5);
  CHECK(c.riem(0, 1, 1, 0) == -3.5);
  CHECK(c.riem(1, 0, 1, 0) == 3.5);
  CHECK(c.riem(0, 1, 2, 3) == 0.0);
  CHECK(validate(c).ok());
}

TEST_CASE("pair-exchange images may be listed when they agree") {
  const json doc = {{"orientation", "negative"},
                    {"components", json::array({json::array({1, 2, 1, 3, 2.0}),
                                                json::array({1, 3, 1, 2, 2.0})})}};
  CHECK_NOTHROW(curvature_from_json(doc));
}

TEST_CASE("conflicting listed components are rejected") {
  const json doc = {{"orientation", "negative"},
                    {"components", json::array({json::array({1, 2, 1, 2, 1.0}),
                                                json::array({2, 1, 1, 2, 1.0})})}};
  CHECK_THROWS_AS(curvature_from_json(doc), InputError);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(curvature_from_json(json::array()), InputError);
  CHECK_THROWS_AS(curvature_from_json(json{{"orientation", "sideways"},
                                           {"components", json::array()}}),
                  InputError);
  CHECK_THROWS_AS(curvature_from_json(json{{"orientation", "negative"}}), InputError);
  CHECK_THROWS_AS(
      curvature_from_json(json{{"orientation", "negative"},
                               {"components", json::array({json::array({0, 2, 1, 2, 1.0})})}}),
      InputError);
  CHECK_THROWS_AS(
      curvature_from_json(json{{"orientation", "negative"},
                               {"components", json::array({json::array({1, 2, 1, 2})})}}),
      InputError);
  // a repeated pair index forces the value to vanish
  CHECK_THROWS_AS(
      curvature_from_json(json{{"orientation", "negative"},
                               {"components", json::array({json::array({1, 1, 1, 2, 1.0})})}}),
      InputError);
  CHECK_NOTHROW(
      curvature_from_json(json{{"orientation", "negative"},
                               {"components", json::array({json::array({1, 1, 1, 2, 0.0})})}}));
}

TEST_CASE("derivative components round-trip") {
  AlgebraicCurvature c = product_spheres(1.0, 1.0).curvature;
  c.has_derivatives = true;
  // a symmetric-by-construction derivative table
  const Riem4 w = space_form(1.0).curvature.riem;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c.driem.at(a, b, i, j, 2) = 0.25 * w(a, b, i, j);

  const json doc = curvature_to_json(c);
  CHECK(doc.contains("dcomponents"));
  const AlgebraicCurvature back = curvature_from_json(doc);
  CHECK(back.has_derivatives);
  CHECK(max_table_diff(c, back) == 0.0);
}

TEST_CASE("the orientation field is honored") {
  json doc = curvature_to_json(complex_space_form(1.0).curvature);
  CHECK(doc["orientation"] == "positive");
  const AlgebraicCurvature c = curvature_from_json(doc);
  CHECK(c.orientation == Orientation::positive);
}

TEST_CASE("report serialization carries formula tags and 1-based indices") {
  const TwistorPointData d = build(space_form(1.0).curvature, 1.0);
  const json rep = twistor_report_json(d);
  CHECK(rep["sbar"]["value"] == 12.0);
  CHECK(rep["sbar"]["paper_ref"] == "eq:scaltwist");
  // the fiber-plane entry is listed with indices 5,6,5,6
  bool found = false;
  for (const auto& e : rep["rbar"]["entries"])
    if (e[0] == 5 && e[1] == 6 && e[2] == 5 && e[3] == 6 && e[4] == 1.0) found = true;
  CHECK(found);
}

TEST_CASE("format_double is stable") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-20.0 / 3.0) == format_double(-20.0 / 3.0));
}
