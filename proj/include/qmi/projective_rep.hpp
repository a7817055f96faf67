#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmi/cocycle.hpp"
#include "qmi/level_ring.hpp"

namespace qmi {

// Finite-level data of a projective Galois representation: r(s) in
// (O/NO)^x, the isogeny degrees deg(s) and the cyclotomic character chi(s) mod N.
struct ProjectiveRepData {
  FiniteGroupTable group;
  std::vector<TorsionPoint> r;
  std::vector<Rational> deg;
  std::vector<std::int64_t> chi;
};

struct LiftChoice {
  // When set, used as the Q^x lift of the scalar defect (checked against it).
  std::optional<Cocycle2> candidate;
};

struct CocycleDefect {
  // r(s) r(t) r(st)^-1
  std::vector<std::vector<TorsionPoint>> values;
  // Scalar residues when every value lies in Z/N.
  std::optional<std::vector<std::vector<std::int64_t>>> scalars;
  // Q^x lift: the candidate if it reduces correctly, otherwise the symmetric
  // residue lift when it is a cocycle.
  std::optional<Cocycle2> lifted;
};

// Throws Error("NotAUnit") if some r(s) is not a unit and Error("NotCentral")
// if some defect value is not central in O/NO.
CocycleDefect cocycle_defect(const LevelRing& ring, const ProjectiveRepData& rep, const LiftChoice& lift = {});

// nrd(r(s)) == deg(s) chi(s) mod N; throws Error("DegNotReducible").
std::vector<bool> norm_compat_check(const LevelRing& ring, const ProjectiveRepData& rep);

struct DetCheckRow {
  std::int64_t lhs = 0;  // nrd(r(s)) alpha(s)^-2
  std::int64_t rhs = 0;  // chi(s) deg(s) alpha(s)^-2
  bool ok = false;
};

// Determinant formula with the alpha twist made explicit; throws
// Error("AlphaNotReducible") and Error("DegNotReducible").
std::vector<DetCheckRow> det_formula_check(const LevelRing& ring, const ProjectiveRepData& rep, const Cochain1& alpha);

}  // namespace qmi
