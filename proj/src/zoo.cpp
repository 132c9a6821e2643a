#include "twistor4/zoo.hpp"

#include <cmath>

#include "twistor4/errors.hpp"
#include "twistor4/rng.hpp"

namespace twistor4 {

namespace {

KnownProperties derive_known(const AlgebraicCurvature& c) {
  KnownProperties k;
  const CurvatureBlocks blocks = decompose_blocks(c);
  const Predicates p = predicates(c, 1e-10);
  k.einstein = p.einstein;
  k.self_dual = p.self_dual;
  k.anti_self_dual = p.anti_self_dual;
  k.scalar = blocks.s;
  k.a = blocks.a;
  k.b = blocks.b;
  k.c = blocks.c;
  return k;
}

ZooEntry finish(std::string name, AlgebraicCurvature c) {
  ZooEntry e;
  e.name = std::move(name);
  e.curvature = std::move(c);
  e.known = derive_known(e.curvature);
  return e;
}

void set_with_symmetries(Riem4& r, int a, int b, int c, int d, double v) {
  r.at(a, b, c, d) = v;
  r.at(b, a, c, d) = -v;
  r.at(a, b, d, c) = -v;
  r.at(b, a, d, c) = v;
  r.at(c, d, a, b) = v;
  r.at(d, c, a, b) = -v;
  r.at(c, d, b, a) = -v;
  r.at(d, c, b, a) = v;
}

}  // namespace

ZooEntry space_form(double k) {
  AlgebraicCurvature c;
  c.orientation = Orientation::negative;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          c.riem.at(a, b, i, j) =
              k * ((a == i && b == j ? 1.0 : 0.0) - (a == j && b == i ? 1.0 : 0.0));
  return finish(k == 0.0 ? "flat" : "space-form", std::move(c));
}

ZooEntry product_spheres(double r1, double r2) {
  if (r1 <= 0.0 || r2 <= 0.0) throw InputError("sphere radii must be positive");
  AlgebraicCurvature c;
  c.orientation = Orientation::negative;
  set_with_symmetries(c.riem, 0, 1, 0, 1, 1.0 / (r1 * r1));
  set_with_symmetries(c.riem, 2, 3, 2, 3, 1.0 / (r2 * r2));
  return finish("product-spheres", std::move(c));
}

ZooEntry complex_space_form(double hol) {
  // j_ab = g(J e_a, e_b) for J: e1 -> e2, e3 -> e4.
  Mat4 j{};
  j[0][1] = 1.0; j[1][0] = -1.0;
  j[2][3] = 1.0; j[3][2] = -1.0;
  auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };

  AlgebraicCurvature c;
  c.orientation = Orientation::positive;  // Kaehler orientation
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          c.riem.at(a, b, p, q) =
              0.25 * hol *
              (d(a, p) * d(b, q) - d(a, q) * d(b, p) + j[a][p] * j[b][q] -
               j[a][q] * j[b][p] + 2.0 * j[a][b] * j[p][q]);
  return finish("complex-space-form", std::move(c));
}

ZooEntry pure_ricci(const Sym2& ric0) {
  if (std::fabs(ric0.trace()) > 1e-10)
    throw NotTraceless("pure_ricci requires a traceless tensor, trace = " +
                       std::to_string(ric0.trace()));
  AlgebraicCurvature c;
  c.orientation = Orientation::negative;
  const auto kn = kulkarni_nomizu(ric0, Sym2::identity());
  auto& raw = c.riem.raw();
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = 0.5 * kn[i];
  return finish("pure-ricci", std::move(c));
}

ZooEntry random_curvature(std::uint64_t seed) {
  SplitMix64 gen(SplitMix64::mix(seed, 0x7a6fULL));
  Mat3 a{}, b{}, c{};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) a[i][j] = a[j][i] = gen.next_symmetric();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) c[i][j] = c[j][i] = gen.next_symmetric();
  // First Bianchi needs tr C = tr A.
  c[2][2] += trace(a) - trace(c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = gen.next_symmetric();

  AlgebraicCurvature out;
  out.orientation = Orientation::negative;
  out.riem = curvature_from_blocks(a, b, c);
  return finish("random-" + std::to_string(seed), std::move(out));
}

ZooEntry make_einstein(const ZooEntry& e) {
  const CurvatureBlocks blocks = decompose_blocks(e.curvature);
  AlgebraicCurvature out;
  out.orientation = e.curvature.orientation;
  out.riem = curvature_from_blocks(blocks.a, Mat3{}, blocks.c);
  return finish(e.name + "-einstein", std::move(out));
}

ZooEntry make_self_dual(const ZooEntry& e) {
  const CurvatureBlocks blocks = decompose_blocks(e.curvature);
  const double s12 = blocks.s / 12.0;
  Mat3 scalar_block{};
  for (int i = 0; i < 3; ++i) scalar_block[i][i] = s12;
  AlgebraicCurvature out;
  out.orientation = e.curvature.orientation;
  if (e.curvature.orientation == Orientation::negative)
    out.riem = curvature_from_blocks(scalar_block, blocks.b, blocks.c);
  else
    out.riem = curvature_from_blocks(blocks.a, blocks.b, scalar_block);
  return finish(e.name + "-self-dual", std::move(out));
}

ZooEntry nij_quadratic_witness(double b32) {
  Mat3 a{}, b{}, c{};
  a[1][1] = 1.0;          // A = diag(0, 1, 0), so A_22 - A_33 = 1 (1-based)
  b[2][1] = b32;          // only B_32
  c[0][0] = 1.0;          // tr C = tr A
  AlgebraicCurvature out;
  out.orientation = Orientation::negative;
  out.riem = curvature_from_blocks(a, b, c);
  return finish("nij-quadratic-witness", std::move(out));
}

namespace {

Sym2 standard_pure_ricci_input() {
  Sym2 r = Sym2::diag(1.0, -1.0, 1.0, -1.0);
  r.set(1, 2, 1.0);  // (2,3) entry, 1-based
  return r;
}

}  // namespace

std::vector<std::string> zoo_names() {
  return {"flat",
          "s4",
          "hyperbolic",
          "space-form-0.5",
          "product-spheres-1-1",
          "product-spheres-1-2",
          "cp2",
          "pure-ricci",
          "nij-quadratic-witness"};
}

std::optional<ZooEntry> zoo_by_name(const std::string& name) {
  std::optional<ZooEntry> e;
  if (name == "flat") e = space_form(0.0);
  else if (name == "s4") e = space_form(1.0);
  else if (name == "hyperbolic") e = space_form(-1.0);
  else if (name == "space-form-0.5") e = space_form(0.5);
  else if (name == "product-spheres-1-1") e = product_spheres(1.0, 1.0);
  else if (name == "product-spheres-1-2") e = product_spheres(1.0, 2.0);
  else if (name == "cp2") e = complex_space_form(1.0);
  else if (name == "pure-ricci") e = pure_ricci(standard_pure_ricci_input());
  else if (name == "nij-quadratic-witness") e = nij_quadratic_witness();
  if (e) e->name = name;
  return e;
}

}  // namespace twistor4
