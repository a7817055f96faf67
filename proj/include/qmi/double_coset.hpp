#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmi/level_ring.hpp"

namespace qmi {

// Description of a subgroup of (O/NO)^x.
struct SubgroupSpec {
  enum class Kind { Trivial, Scalars, All, Generated, CM };
  Kind kind = Kind::Trivial;
  std::vector<TorsionPoint> generators;  // Generated
  TorsionPoint cm_element;               // CM: units of the form u + v x

  static SubgroupSpec trivial() { return {}; }
  static SubgroupSpec scalars() { return {Kind::Scalars, {}, {}}; }
  static SubgroupSpec all() { return {Kind::All, {}, {}}; }
  static SubgroupSpec generated(std::vector<TorsionPoint> gens) { return {Kind::Generated, std::move(gens), {}}; }
  static SubgroupSpec cm(TorsionPoint x) { return {Kind::CM, {}, x}; }
};

// Generators of the subgroup; throws Error("NotAUnit") for non-unit generators.
std::vector<TorsionPoint> subgroup_generators(const LevelRing& ring, const SubgroupSpec& spec,
                                              const std::vector<TorsionPoint>& units);
// Encoded indices of all elements of the generated subgroup, sorted.
std::vector<std::int64_t> subgroup_elements(const LevelRing& ring, const std::vector<TorsionPoint>& generators);

// Gamma \ (O/NO)^x / H.
class DoubleCosetSpace {
 public:
  DoubleCosetSpace(const LevelRing& ring, const SubgroupSpec& gamma, const SubgroupSpec& endo,
                   std::int64_t max_level = 12);

  std::int64_t level() const { return n_; }
  // Lexicographically least member of each double coset, sorted.
  const std::vector<TorsionPoint>& representatives() const { return reps_; }
  const std::vector<std::size_t>& orbit_sizes() const { return sizes_; }
  std::size_t unit_count() const { return unit_count_; }
  // Index of the double coset containing the unit g; throws Error("NotAUnit").
  std::size_t coset_of(const TorsionPoint& g) const;
  const std::vector<TorsionPoint>& endo_generators() const { return h_gens_; }
  const std::vector<std::int64_t>& endo_elements() const { return h_elems_; }

 private:
  const LevelRing* ring_;
  std::int64_t n_;
  std::vector<TorsionPoint> reps_;
  std::vector<std::size_t> sizes_;
  std::size_t unit_count_ = 0;
  std::vector<std::int32_t> coset_index_;  // by encoded point, -1 for non-units
  std::vector<TorsionPoint> h_gens_;
  std::vector<std::int64_t> h_elems_;
};

// Permutation [b] -> [b rho] of the representatives. Throws
// Error("NotInNormalizer") unless rho^-1 H rho is contained in H.
std::vector<std::size_t> galois_act(const LevelRing& ring, const DoubleCosetSpace& space, const TorsionPoint& rho);

}  // namespace qmi
