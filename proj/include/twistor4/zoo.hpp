#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistor4/curvature.hpp"

// Curvature fixtures shared by tests, the verification suite and the CLI.
// All constructors produce locally symmetric data (driem exactly zero).

namespace twistor4 {

struct KnownProperties {
  bool einstein = false;
  bool self_dual = false;
  bool anti_self_dual = false;
  double scalar = 0.0;
  Mat3 a{}, b{}, c{};
};

struct ZooEntry {
  std::string name;
  AlgebraicCurvature curvature;
  KnownProperties known;
};

/// Constant sectional curvature k: R_abcd = k (d_ac d_bd - d_ad d_bc).
ZooEntry space_form(double k);

/// S^2(r1) x S^2(r2): R_1212 = 1/r1^2, R_3434 = 1/r2^2. Einstein iff r1 = r2.
ZooEntry product_spheres(double r1, double r2);

/// Constant holomorphic sectional curvature c for the standard complex
/// structure e1 -> e2, e3 -> e4; Einstein with scalar 6c, Kaehler orientation
/// carried as positive.
ZooEntry complex_space_form(double c);

/// Riem = (1/2) ric0 (.) g for traceless ric0; Weyl-free, scalar-free.
/// Throws NotTraceless.
ZooEntry pure_ricci(const Sym2& ric0);

/// Seeded random valid curvature built from random blocks (trace-matched).
ZooEntry random_curvature(std::uint64_t seed);

/// Same blocks with B := 0.
ZooEntry make_einstein(const ZooEntry& e);

/// Same blocks with the self-duality-testing block replaced by (S/12) I.
ZooEntry make_self_dual(const ZooEntry& e);

/// Non-Einstein witness with A = diag(0,1,0) and only B_32 nonzero; exhibits
/// the quadratic Nijenhuis product at the standard frame.
ZooEntry nij_quadratic_witness(double b32 = 0.3);

/// Fixed registry used by the CLI (name -> entry).
std::vector<std::string> zoo_names();
std::optional<ZooEntry> zoo_by_name(const std::string& name);

}  // namespace twistor4
