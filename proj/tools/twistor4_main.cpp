// Command-line front end: ingest curvature JSON (or a named fixture), run the
// block decomposition, the full fiber-point report, class membership, frame
// scans and theorem verdicts. Reports are deterministic for a fixed seed.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistor4/classify.hpp"
#include "twistor4/errors.hpp"
#include "twistor4/json_io.hpp"
#include "twistor4/zoo.hpp"

namespace {

using nlohmann::json;
using namespace twistor4;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string zoo;
  double t = 0.0;  // 0: unset; commands default to 1 except the T1.4 rule
  std::string structure = "ahs";
  int n = 1000;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::string format = "json";
  std::string orientation;
  int threads = 1;
  std::vector<double> coeffs;  // a1..a8 for the "linear" check
};

void add_common(CLI::App* cmd, Options& o, bool needs_input) {
  if (needs_input) {
    cmd->add_option("--input", o.input, "curvature JSON file");
    cmd->add_option("--zoo", o.zoo, "named fixture (see `zoo list`)");
  }
  cmd->add_option("--t", o.t, "fiber-scale parameter (> 0)");
  cmd->add_option("--structure", o.structure, "ahs | es")
      ->check(CLI::IsMember({"ahs", "es"}));
  cmd->add_option("--n", o.n, "number of sampled frames")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", o.seed, "scan seed");
  cmd->add_option("--tol", o.tol, "membership tolerance");
  cmd->add_option("--format", o.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--orientation", o.orientation, "override input orientation")
      ->check(CLI::IsMember({"positive", "negative"}));
  cmd->add_option("--threads", o.threads, "scan worker threads")
      ->check(CLI::PositiveNumber);
}

AlgebraicCurvature load_input(const Options& o) {
  if (o.input.empty() == o.zoo.empty())
    throw InputError("exactly one of --input and --zoo is required");
  AlgebraicCurvature c;
  if (!o.zoo.empty()) {
    auto entry = zoo_by_name(o.zoo);
    if (!entry) throw InputError("unknown fixture name: " + o.zoo);
    c = entry->curvature;
  } else {
    c = load_curvature(o.input);
  }
  if (o.orientation == "positive") c.orientation = Orientation::positive;
  if (o.orientation == "negative") c.orientation = Orientation::negative;
  const ValidationReport rep = validate(c);
  if (!rep.ok()) {
    const auto& e = rep.errors.front();
    throw InputError("invalid curvature table: " + e.identity + " residual " +
                     format_double(e.residual));
  }
  return c;
}

double effective_t(const Options& o) { return o.t > 0.0 ? o.t : 1.0; }

Structure parse_structure(const Options& o) {
  return o.structure == "es" ? Structure::ES : Structure::AHS;
}

ScanConfig scan_config(const Options& o) {
  ScanConfig cfg;
  cfg.n = o.n;
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  cfg.t = effective_t(o);
  cfg.structure = parse_structure(o);
  cfg.threads = o.threads;
  if (!o.coeffs.empty()) {
    if (o.coeffs.size() != 8)
      throw InputError("--coeffs needs exactly 8 values (a1..a8)");
    for (int i = 0; i < 8; ++i) cfg.linear.a[static_cast<std::size_t>(i)] = o.coeffs[static_cast<std::size_t>(i)];
  }
  return cfg;
}

using Row = std::array<std::string, 4>;  // quantity, index, value, paper_ref

void print_csv(const std::vector<Row>& rows) {
  std::cout << "quantity,index,value,paper_ref\n";
  for (const auto& r : rows)
    std::cout << r[0] << ",\"" << r[1] << "\"," << r[2] << "," << r[3] << "\n";
}

std::string idx2(int i, int j) {
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

void rows_from_mat3(std::vector<Row>& rows, const std::string& name, const Mat3& m,
                    const std::string& ref) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      rows.push_back({name, idx2(i, j), format_double(m[i][j]), ref});
}

void emit(const json& report, const Options& o, const std::vector<Row>& csv_rows,
          const std::vector<std::string>& text_lines) {
  if (o.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (o.format == "csv") {
    print_csv(csv_rows);
  } else {
    for (const auto& line : text_lines) std::cout << line << "\n";
  }
}

int cmd_decompose(const Options& o) {
  const AlgebraicCurvature c = load_input(o);
  const CurvatureBlocks blocks = decompose_blocks(c);
  const Predicates pred = predicates(c, o.tol);
  const auto [wplus, wminus] = weyl_split(c);

  json report;
  report["input_fingerprint"] = fingerprint(c);
  report["orientation"] = to_string(c.orientation);
  report["blocks"] = blocks_to_json(blocks);
  report["predicates"] = predicates_to_json(pred);
  auto weyl_entries = [](const Riem4& w) {
    json entries = json::array();
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          for (int d = cc + 1; d < 4; ++d) {
            if (4 * a + b > 4 * cc + d) continue;
            if (w(a, b, cc, d) != 0.0)
              entries.push_back({a + 1, b + 1, cc + 1, d + 1, w(a, b, cc, d)});
          }
    return entries;
  };
  report["weyl_plus"] = {{"entries", weyl_entries(wplus)},
                         {"max", wplus.max_abs()},
                         {"paper_ref", "eq:riemdeccomp"}};
  report["weyl_minus"] = {{"entries", weyl_entries(wminus)},
                          {"max", wminus.max_abs()},
                          {"paper_ref", "eq:riemdeccomp"}};

  std::vector<Row> rows;
  rows_from_mat3(rows, "A", blocks.a, "eq:matrdeco");
  rows_from_mat3(rows, "B", blocks.b, "eq:matrdeco");
  rows_from_mat3(rows, "C", blocks.c, "eq:matrdeco");
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      rows.push_back({"Ric", idx2(i, j), format_double(blocks.ric(i, j)), "sec:2"});
  rows.push_back({"S", "", format_double(blocks.s), "sec:2"});
  rows.push_back({"einstein", "", pred.einstein ? "1" : "0", "thm:cond4mani"});
  rows.push_back({"self_dual", "", pred.self_dual ? "1" : "0", "thm:cond4mani"});
  rows.push_back(
      {"anti_self_dual", "", pred.anti_self_dual ? "1" : "0", "thm:cond4mani"});
  rows.push_back({"einstein_residual", "", format_double(pred.einstein_residual),
                  "thm:cond4mani"});

  std::vector<std::string> text;
  text.push_back("orientation: " + std::string(to_string(c.orientation)));
  text.push_back("S = " + format_double(blocks.s));
  for (int i = 0; i < 3; ++i)
    text.push_back("A[" + std::to_string(i + 1) + "] = " +
                   format_double(blocks.a[i][0]) + " " + format_double(blocks.a[i][1]) +
                   " " + format_double(blocks.a[i][2]));
  for (int i = 0; i < 3; ++i)
    text.push_back("B[" + std::to_string(i + 1) + "] = " +
                   format_double(blocks.b[i][0]) + " " + format_double(blocks.b[i][1]) +
                   " " + format_double(blocks.b[i][2]));
  for (int i = 0; i < 3; ++i)
    text.push_back("C[" + std::to_string(i + 1) + "] = " +
                   format_double(blocks.c[i][0]) + " " + format_double(blocks.c[i][1]) +
                   " " + format_double(blocks.c[i][2]));
  text.push_back(std::string("einstein: ") + (pred.einstein ? "true" : "false") +
                 " (residual " + format_double(pred.einstein_residual) + ")");
  text.push_back(std::string("self_dual: ") + (pred.self_dual ? "true" : "false") +
                 " (residual " + format_double(pred.self_dual_residual) + ")");
  text.push_back(std::string("anti_self_dual: ") +
                 (pred.anti_self_dual ? "true" : "false") + " (residual " +
                 format_double(pred.anti_self_dual_residual) + ")");

  emit(report, o, rows, text);
  return kExitOk;
}

int cmd_twistor(const Options& o) {
  const AlgebraicCurvature c = load_input(o);
  const TwistorPointData d = build(c, effective_t(o));

  json report = twistor_report_json(d);
  report["input_fingerprint"] = fingerprint(c);

  std::vector<Row> rows;
  rows.push_back({"sbar", "", format_double(d.sbar), "eq:scaltwist"});
  rows.push_back({"sstar", "", format_double(d.sstar), "eq:scalstar"});
  rows.push_back({"sj", "", format_double(d.sj), "eq:scalstar"});
  rows.push_back(
      {"norm2_nabla_j", "", format_double(d.norm2_nabla_j), "eq:absnablaj"});
  rows.push_back(
      {"norm2_nabla_jj", "", format_double(d.norm2_nabla_jj), "eq:absnablaj"});
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q)
      if (d.ricbar[p][q] != 0.0)
        rows.push_back(
            {"ricbar", idx2(p, q), format_double(d.ricbar[p][q]), "eq:ricctwist"});
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      for (int r = 0; r < 6; ++r)
        if (d.nabla_j(p, q, r) != 0.0)
          rows.push_back({"nabla_j",
                          std::to_string(p + 1) + "," + std::to_string(q + 1) + "," +
                              std::to_string(r + 1),
                          format_double(d.nabla_j(p, q, r)), "eq:nablajplus"});
  for (const auto& fd : d.diffs)
    rows.push_back({"closed_form_delta", fd.tag, format_double(fd.delta), fd.tag});

  std::vector<std::string> text;
  text.push_back("t = " + format_double(d.t));
  text.push_back("sbar = " + format_double(d.sbar));
  text.push_back("sstar = " + format_double(d.sstar));
  text.push_back("sj = " + format_double(d.sj));
  text.push_back("|nabla J|^2 = " + format_double(d.norm2_nabla_j));
  text.push_back("closed-form cross-checks (tag: oracle printed delta):");
  for (const auto& fd : d.diffs)
    text.push_back("  " + fd.tag + ": " + format_double(fd.reference) + " " +
                   format_double(fd.printed) + " " + format_double(fd.delta));

  emit(report, o, rows, text);
  return kExitOk;
}

int cmd_classify(const Options& o) {
  const AlgebraicCurvature c = load_input(o);
  const TwistorPointData d = build(c, effective_t(o));
  const ClassificationReport rep = gray_hervella(d, parse_structure(o), o.tol);

  json report = classification_to_json(rep);
  report["input_fingerprint"] = fingerprint(c);

  std::vector<Row> rows;
  const std::pair<const char*, double> res[] = {{"K", rep.k},   {"AK", rep.ak},
                                                {"NK", rep.nk}, {"QK", rep.qk},
                                                {"QQK", rep.qqk}, {"SK", rep.sk}};
  const std::pair<const char*, bool> mem[] = {{"K", rep.in_k},   {"AK", rep.in_ak},
                                              {"NK", rep.in_nk}, {"QK", rep.in_qk},
                                              {"QQK", rep.in_qqk}, {"SK", rep.in_sk}};
  for (const auto& [name, v] : res)
    rows.push_back({std::string("residual_") + name, "", format_double(v),
                    "sec:3-class-conditions"});
  for (const auto& [name, v] : mem)
    rows.push_back({std::string("member_") + name, "", v ? "1" : "0",
                    "sec:3-class-conditions"});

  std::vector<std::string> text;
  text.push_back(std::string("structure: ") + to_string(rep.structure));
  for (const auto& [name, v] : res)
    text.push_back(std::string(name) + ": residual " + format_double(v));
  for (const auto& [name, v] : mem)
    text.push_back(std::string(name) + ": " + (v ? "member" : "non-member"));

  emit(report, o, rows, text);
  return kExitOk;
}

int cmd_scan(const Options& o, const std::string& check) {
  const AlgebraicCurvature c = load_input(o);
  const ScanConfig cfg = scan_config(o);
  if (check == "linear" && !cfg.linear.nonzero())
    throw InputError("the linear check needs --coeffs a1,...,a8 with some a_j != 0");
  const ScanReport rep = frame_scan(c, check, cfg);

  json report = scan_report_json(rep);
  report["input_fingerprint"] = fingerprint(c);

  std::vector<Row> rows;
  rows.push_back({"worst_residual", "", format_double(rep.worst_residual), rep.check});
  for (const auto& [name, v] : rep.structured_residuals)
    rows.push_back({"structured_residual", name, format_double(v), rep.check});

  std::vector<std::string> text;
  text.push_back("check: " + rep.check);
  text.push_back("worst residual: " + format_double(rep.worst_residual) + " at " +
                 rep.worst_frame_label);

  emit(report, o, rows, text);
  return kExitOk;
}

int cmd_verify(const Options& o, const std::string& theorem) {
  const AlgebraicCurvature c = load_input(o);
  const TheoremVerdict v = theorem_check(theorem, c, o.t, scan_config(o));

  json report = verdict_to_json(v);

  std::vector<Row> rows;
  rows.push_back({"verdict", "", v.verdict, v.theorem});
  for (const auto& [name, value] : v.residuals)
    rows.push_back({"residual", name, format_double(value), v.theorem});
  rows.push_back({"frames_checked", "", std::to_string(v.frames_checked), v.theorem});

  std::vector<std::string> text;
  text.push_back(v.theorem + ": " + v.verdict);
  for (const auto& [name, value] : v.residuals)
    text.push_back("  " + name + " = " + format_double(value));
  for (const auto& note : v.notes) text.push_back("  note: " + note);

  emit(report, o, rows, text);
  return v.verdict == "FAIL" ? kExitFail : kExitOk;
}

int cmd_zoo(const Options& o, bool list, const std::string& dump_name) {
  if (list) {
    if (o.format == "json") {
      std::cout << json(zoo_names()).dump(2) << "\n";
    } else {
      for (const auto& n : zoo_names()) std::cout << n << "\n";
    }
    return kExitOk;
  }
  auto entry = zoo_by_name(dump_name);
  if (!entry) throw InputError("unknown fixture name: " + dump_name);
  std::cout << curvature_to_json(entry->curvature).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pointwise curvature reports for twistor spaces of four-manifolds"};
  app.require_subcommand(1);

  Options o;
  std::string scan_check;
  std::string verify_theorem;
  std::string dump_name;

  auto* decompose = app.add_subcommand("decompose", "blocks, Weyl split, predicates");
  add_common(decompose, o, true);

  auto* twistor = app.add_subcommand("twistor", "full fiber-point report");
  add_common(twistor, o, true);

  auto* classify = app.add_subcommand("classify", "almost Hermitian class membership");
  add_common(classify, o, true);

  auto* scan = app.add_subcommand("scan", "worst residual over sampled frames");
  scan->add_option("check", scan_check,
                   "k|ak|nk|qk|qqk|sk|nijenhuis-max|quadratic-einstein|"
                   "nijenhuis-quadratic|linear")
      ->required();
  scan->add_option("--coeffs", o.coeffs, "a1..a8 for the linear check")
      ->delimiter(',')
      ->expected(8);
  add_common(scan, o, true);

  auto* verify = app.add_subcommand("verify", "theorem verdict");
  verify->add_option("theorem", verify_theorem, "theorem id")->required();
  add_common(verify, o, true);

  auto* zoo = app.add_subcommand("zoo", "fixture registry");
  auto* zoo_list = zoo->add_subcommand("list", "list fixture names");
  add_common(zoo_list, o, false);
  auto* zoo_dump = zoo->add_subcommand("dump", "dump a fixture as curvature JSON");
  zoo_dump->add_option("name", dump_name, "fixture name")->required();
  zoo->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (decompose->parsed()) return cmd_decompose(o);
    if (twistor->parsed()) return cmd_twistor(o);
    if (classify->parsed()) return cmd_classify(o);
    if (scan->parsed()) return cmd_scan(o, scan_check);
    if (verify->parsed()) return cmd_verify(o, verify_theorem);
    if (zoo->parsed()) return cmd_zoo(o, zoo_list->parsed(), dump_name);
  } catch (const UnknownTheoremId& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnknownCheckName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
