#pragma once

#include <cstdint>

#include "qmi/level_ring.hpp"

namespace qmi {

// Moduli change between an order O and an overorder O_0 at level N:
//   lambda:      b + O   -> b + O_0          on (1/N)O/O
//   lambda_vee:  b + O_0 -> [O_0:O] b + O    on (1/N)O_0/O_0
// Points are coordinates in the respective ring bases.
class ModuliChange {
 public:
  // Throws Error("NotContained") unless O is contained in O_0.
  ModuliChange(const LevelRing& small, const LevelRing& big);

  const Integer& index() const { return index_; }
  TorsionPoint lambda(const TorsionPoint& x) const;
  TorsionPoint lambda_vee(const TorsionPoint& y) const;
  // Kernel of lambda on (1/N)O/O; generators are elements of (1/N)O.
  KernelModule kernel() const;

 private:
  const LevelRing* small_;
  const LevelRing* big_;
  Integer index_;
  IntMatrix c_;      // O basis in O_0 coordinates
  IntMatrix c_vee_;  // [O_0:O] * c_^-1
};

}  // namespace qmi
