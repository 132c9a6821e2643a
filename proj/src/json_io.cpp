#include "twistor4/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "twistor4/errors.hpp"

namespace twistor4 {

namespace {

using nlohmann::json;

void set_orbit(Riem4& r, std::array<bool, 256>& seen, int a, int b, int c, int d,
               double v) {
  // All eight images under the two antisymmetries and the pair exchange.
  const std::array<std::array<int, 4>, 8> images = {{
      {a, b, c, d}, {b, a, c, d}, {a, b, d, c}, {b, a, d, c},
      {c, d, a, b}, {d, c, a, b}, {c, d, b, a}, {d, c, b, a},
  }};
  const std::array<double, 8> signs = {1, -1, -1, 1, 1, -1, -1, 1};
  for (int k = 0; k < 8; ++k) {
    const auto& ix = images[static_cast<std::size_t>(k)];
    const double val = signs[static_cast<std::size_t>(k)] * v;
    const std::size_t flat = static_cast<std::size_t>(
        ((ix[0] * 4 + ix[1]) * 4 + ix[2]) * 4 + ix[3]);
    if (seen[flat] && std::fabs(r.raw()[flat] - val) > 1e-12 * std::max(1.0, std::fabs(val)))
      throw InputError("component (" + std::to_string(ix[0] + 1) + "," +
                       std::to_string(ix[1] + 1) + "," + std::to_string(ix[2] + 1) +
                       "," + std::to_string(ix[3] + 1) +
                       ") conflicts with an earlier listed value through a symmetry");
    r.raw()[flat] = val;
    seen[flat] = true;
  }
}

int index_1based(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + ": index is not an integer");
  const int i = v.get<int>();
  if (i < 1 || i > 4) throw InputError(std::string(what) + ": index out of range 1..4");
  return i - 1;
}

}  // namespace

AlgebraicCurvature curvature_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("curvature document must be a JSON object");
  AlgebraicCurvature c;

  const std::string orient = j.value("orientation", std::string("negative"));
  if (orient == "negative")
    c.orientation = Orientation::negative;
  else if (orient == "positive")
    c.orientation = Orientation::positive;
  else
    throw InputError("orientation must be \"positive\" or \"negative\"");

  if (!j.contains("components") || !j["components"].is_array())
    throw InputError("missing \"components\" array");

  std::array<bool, 256> seen{};
  for (const auto& row : j["components"]) {
    if (!row.is_array() || row.size() != 5)
      throw InputError("each component must be [a, b, c, d, value]");
    const int a = index_1based(row[0], "components");
    const int b = index_1based(row[1], "components");
    const int cc = index_1based(row[2], "components");
    const int d = index_1based(row[3], "components");
    if (!row[4].is_number()) throw InputError("component value is not a number");
    if (a == b || cc == d) {
      if (row[4].get<double>() != 0.0)
        throw InputError("component with a repeated pair index must vanish");
      continue;
    }
    set_orbit(c.riem, seen, a, b, cc, d, row[4].get<double>());
  }

  if (j.contains("dcomponents")) {
    if (!j["dcomponents"].is_array()) throw InputError("\"dcomponents\" must be an array");
    for (const auto& row : j["dcomponents"]) {
      if (!row.is_array() || row.size() != 6)
        throw InputError("each dcomponent must be [a, b, c, d, e, value]");
      const int a = index_1based(row[0], "dcomponents");
      const int b = index_1based(row[1], "dcomponents");
      const int cc = index_1based(row[2], "dcomponents");
      const int d = index_1based(row[3], "dcomponents");
      const int e = index_1based(row[4], "dcomponents");
      if (!row[5].is_number()) throw InputError("dcomponent value is not a number");
      const double v = row[5].get<double>();
      if (a == b || cc == d) {
        if (v != 0.0) throw InputError("dcomponent with a repeated pair index must vanish");
        continue;
      }
      c.has_derivatives = true;
      const std::array<std::array<int, 4>, 8> images = {{
          {a, b, cc, d}, {b, a, cc, d}, {a, b, d, cc}, {b, a, d, cc},
          {cc, d, a, b}, {d, cc, a, b}, {cc, d, b, a}, {d, cc, b, a},
      }};
      const std::array<double, 8> signs = {1, -1, -1, 1, 1, -1, -1, 1};
      for (int k = 0; k < 8; ++k) {
        const auto& ix = images[static_cast<std::size_t>(k)];
        c.driem.at(ix[0], ix[1], ix[2], ix[3], e) =
            signs[static_cast<std::size_t>(k)] * v;
      }
    }
  }
  return c;
}

AlgebraicCurvature load_curvature(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return curvature_from_json(j);
}

nlohmann::json curvature_to_json(const AlgebraicCurvature& c) {
  json comps = json::array();
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int cc = 0; cc < 4; ++cc)
        for (int d = cc + 1; d < 4; ++d) {
          if (4 * a + b > 4 * cc + d) continue;  // one side of the pair exchange
          const double v = c.riem(a, b, cc, d);
          if (v != 0.0) comps.push_back({a + 1, b + 1, cc + 1, d + 1, v});
        }
  json out;
  out["orientation"] = to_string(c.orientation);
  out["components"] = comps;
  if (c.has_derivatives) {
    json dcomps = json::array();
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          for (int d = cc + 1; d < 4; ++d) {
            if (4 * a + b > 4 * cc + d) continue;
            for (int e = 0; e < 4; ++e) {
              const double v = c.driem(a, b, cc, d, e);
              if (v != 0.0) dcomps.push_back({a + 1, b + 1, cc + 1, d + 1, e + 1, v});
            }
          }
    out["dcomponents"] = dcomps;
  }
  return out;
}

namespace {

json mat_json(const Mat3& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back({r[0], r[1], r[2]});
  return rows;
}

json mat_json(const Mat4& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back({r[0], r[1], r[2], r[3]});
  return rows;
}

json mat_json(const Mat6& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back({r[0], r[1], r[2], r[3], r[4], r[5]});
  return rows;
}

json sparse_tens3(const Tens3& t) {
  json entries = json::array();
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      for (int r = 0; r < 6; ++r)
        if (t(p, q, r) != 0.0) entries.push_back({p + 1, q + 1, r + 1, t(p, q, r)});
  return entries;
}

json sparse_riem6(const Riem6& r) {
  json entries = json::array();
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q)
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
          if (6 * p + q > 6 * a + b) continue;
          if (r(p, q, a, b) != 0.0)
            entries.push_back({p + 1, q + 1, a + 1, b + 1, r(p, q, a, b)});
        }
  return entries;
}

json coeffs_json(const ThreeFormCoeffs& c) {
  json entries = json::array();
  for (const auto& [key, v] : c)
    entries.push_back({key[0] + 1, key[1] + 1, key[2] + 1, v});
  return entries;
}

}  // namespace

nlohmann::json blocks_to_json(const CurvatureBlocks& b) {
  json out;
  out["A"] = mat_json(b.a);
  out["B"] = mat_json(b.b);
  out["C"] = mat_json(b.c);
  out["S"] = b.s;
  json ric = json::array();
  for (int i = 0; i < 4; ++i)
    ric.push_back({b.ric(i, 0), b.ric(i, 1), b.ric(i, 2), b.ric(i, 3)});
  out["Ric"] = ric;
  out["paper_ref"] = "eq:matrdeco";
  return out;
}

nlohmann::json predicates_to_json(const Predicates& p) {
  json out;
  out["einstein"] = p.einstein;
  out["self_dual"] = p.self_dual;
  out["anti_self_dual"] = p.anti_self_dual;
  out["residuals"] = {{"einstein", p.einstein_residual},
                      {"self_dual", p.self_dual_residual},
                      {"anti_self_dual", p.anti_self_dual_residual}};
  out["scalar"] = p.scalar;
  out["paper_ref"] = "thm:cond4mani";
  return out;
}

nlohmann::json twistor_report_json(const TwistorPointData& d) {
  json out;
  out["t"] = d.t;
  out["converted_orientation"] = d.converted_orientation;
  out["rbar"] = {{"entries", sparse_riem6(d.rbar)}, {"paper_ref", "eq:riemtwist"}};
  out["ricbar"] = {{"matrix", mat_json(d.ricbar)}, {"paper_ref", "eq:ricctwist"}};
  out["sbar"] = {{"value", d.sbar}, {"paper_ref", "eq:scaltwist"}};
  out["nabla_j"] = {{"entries", sparse_tens3(d.nabla_j)}, {"paper_ref", "eq:nablajplus"}};
  out["nabla_jj"] = {{"entries", sparse_tens3(d.nabla_jj)}, {"paper_ref", "eq:nablajmin"}};
  out["norm2_nabla_j"] = {{"value", d.norm2_nabla_j}, {"paper_ref", "eq:absnablaj"}};
  out["norm2_nabla_jj"] = {{"value", d.norm2_nabla_jj}, {"paper_ref", "eq:absnablaj"}};
  out["nijenhuis_j"] = {{"entries", sparse_tens3(d.nj)}, {"paper_ref", "eq:nijenComp"}};
  out["nijenhuis_jj"] = {{"entries", sparse_tens3(d.njj)}, {"paper_ref", "eq:nijenComp"}};
  out["domega_plus"] = {{"entries", coeffs_json(d.domega_plus)},
                        {"paper_ref", "eq:kahtwistplus"}};
  out["domega_minus"] = {{"entries", coeffs_json(d.domega_minus)},
                         {"paper_ref", "eq:kahtwistmin"}};
  out["delta_omega_plus"] = {{"vector", d.delta_omega_plus},
                             {"paper_ref", "eq:codifftwist"}};
  out["delta_omega_minus"] = {{"vector", d.delta_omega_minus},
                              {"paper_ref", "eq:codifftwist"}};
  out["ricstar"] = {{"matrix", mat_json(d.ricstar)}, {"paper_ref", "eq:riccistar"}};
  out["sstar"] = {{"value", d.sstar}, {"paper_ref", "eq:scalstar"}};
  out["sj"] = {{"value", d.sj}, {"paper_ref", "eq:scalstar"}};

  json diffs = json::array();
  for (const auto& fd : d.diffs)
    diffs.push_back({{"paper_ref", fd.tag},
                     {"oracle", fd.reference},
                     {"printed", fd.printed},
                     {"delta", fd.delta}});
  out["closed_form_diffs"] = diffs;
  return out;
}

nlohmann::json classification_to_json(const ClassificationReport& r) {
  json out;
  out["structure"] = to_string(r.structure);
  out["t"] = r.t;
  out["tol"] = r.tol;
  out["residuals"] = {{"K", r.k},   {"AK", r.ak},   {"NK", r.nk},
                      {"QK", r.qk}, {"QQK", r.qqk}, {"SK", r.sk}};
  out["memberships"] = {{"K", r.in_k},   {"AK", r.in_ak},   {"NK", r.in_nk},
                        {"QK", r.in_qk}, {"QQK", r.in_qqk}, {"SK", r.in_sk}};
  out["paper_ref"] = "sec:3-class-conditions";
  return out;
}

nlohmann::json scan_report_json(const ScanReport& r) {
  json out;
  out["check"] = r.check;
  out["n_samples"] = r.n_samples;
  out["seed"] = r.seed;
  out["t"] = r.t;
  out["structure"] = to_string(r.structure);
  out["worst_residual"] = r.worst_residual;
  out["worst_frame_label"] = r.worst_frame_label;
  out["worst_frame"] = mat_json(r.worst_frame);
  json structured = json::array();
  for (const auto& [name, res] : r.structured_residuals)
    structured.push_back({{"frame", name}, {"residual", res}});
  out["structured_residuals"] = structured;
  return out;
}

nlohmann::json verdict_to_json(const TheoremVerdict& v) {
  json out;
  out["theorem"] = v.theorem;
  out["input_fingerprint"] = v.input_fingerprint;
  out["verdict"] = v.verdict;
  out["t"] = v.t;
  json res;
  for (const auto& [name, value] : v.residuals) res[name] = value;
  out["residuals"] = res;
  out["frames_checked"] = v.frames_checked;
  out["notes"] = v.notes;
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace twistor4
