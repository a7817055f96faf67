#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qmi/order.hpp"

namespace qmi {

// Element of O/NO (or of O^#/NO^# for the dual side of the Weil pairing),
// as residues in [0, N) with respect to the chosen basis.
struct TorsionPoint {
  std::int64_t level = 1;
  std::array<std::int64_t, 4> c{};

  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
  friend auto operator<=>(const TorsionPoint&, const TorsionPoint&) = default;
};

// The finite ring O/NO, identified with (1/N)O/O via x -> x/N. Structure
// constants are cached at construction; the object is immutable afterwards.
class LevelRing {
 public:
  // Throws Error("InvalidLevel") unless 1 <= N <= 2^20.
  LevelRing(Order order, std::int64_t level);

  const Order& order() const { return order_; }
  std::int64_t level() const { return n_; }
  // N^4
  std::int64_t size() const { return n_ * n_ * n_ * n_; }

  TorsionPoint point(std::array<std::int64_t, 4> coords) const;
  TorsionPoint zero() const { return point({0, 0, 0, 0}); }
  TorsionPoint one() const { return point({1, 0, 0, 0}); }
  TorsionPoint scalar(std::int64_t s) const { return point({s, 0, 0, 0}); }
  // Reduction of an element of O; throws Error("NotInOrder").
  TorsionPoint reduce(const QuatElement& x) const;
  // Representative in O with coordinates in [0, N).
  QuatElement lift(const TorsionPoint& x) const;

  // Lexicographic index ((c0*N + c1)*N + c2)*N + c3 and its inverse.
  std::int64_t encode(const TorsionPoint& x) const;
  TorsionPoint decode(std::int64_t index) const;

  // All of these throw Error("LevelMismatch") on points of another level.
  TorsionPoint add(const TorsionPoint& x, const TorsionPoint& y) const;
  TorsionPoint sub(const TorsionPoint& x, const TorsionPoint& y) const;
  TorsionPoint neg(const TorsionPoint& x) const;
  TorsionPoint mul(const TorsionPoint& x, const TorsionPoint& y) const;
  TorsionPoint scale(std::int64_t s, const TorsionPoint& x) const;
  TorsionPoint conj(const TorsionPoint& x) const;
  std::int64_t nrd(const TorsionPoint& x) const;
  std::int64_t trd(const TorsionPoint& x) const;
  bool is_unit(const TorsionPoint& x) const;
  // conj(x) * nrd(x)^-1; throws Error("NotAUnit").
  TorsionPoint unit_inverse(const TorsionPoint& x) const;
  bool is_central(const TorsionPoint& x) const;

  // Dual side: points of O^#/NO^# in the basis dual_basis().
  const std::array<QuatElement, 4>& dual_basis() const { return dual_basis_; }
  TorsionPoint reduce_dual(const QuatElement& y) const;
  // y * g for y in O^#/NO^#, g in O/NO.
  TorsionPoint dual_mul(const TorsionPoint& y, const TorsionPoint& g) const;
  // Embedding O -> O^# on residues.
  TorsionPoint to_dual(const TorsionPoint& x) const;

  // Weil pairing value k, standing for k/N in (1/N)Z/Z:
  // k = Tr(x * conj(y)) mod N for lifts x in O, y in O^#, i.e. the trace
  // pairing of x/N in (1/N)O/O with y in O^#/NO^#.
  std::int64_t weil_pairing(const TorsionPoint& x, const TorsionPoint& y) const;
  // w(x g, y g) == nrd(g) w(x, y).
  bool pairing_norm_equivariance(const TorsionPoint& x, const TorsionPoint& y, const TorsionPoint& g) const;

 private:
  void check(const TorsionPoint& x) const;

  Order order_;
  std::int64_t n_;
  // e_r e_s = sum_t mul_[r][s][t] e_t
  std::array<std::array<std::array<std::int64_t, 4>, 4>, 4> mul_{};
  // conj(e_r) = sum_t conj_[r][t] e_t
  std::array<std::array<std::int64_t, 4>, 4> conj_{};
  // nrd(sum x_r e_r) = sum_{r <= s} nrd_[r][s] x_r x_s
  std::array<std::array<std::int64_t, 4>, 4> nrd_{};
  std::array<std::int64_t, 4> trd_{};
  std::array<QuatElement, 4> dual_basis_;
  // f_s e_r = sum_t dual_mul_[s][r][t] f_t
  std::array<std::array<std::array<std::int64_t, 4>, 4>, 4> dual_mul_{};
  // e_r = sum_t embed_[r][t] f_t
  std::array<std::array<std::int64_t, 4>, 4> embed_{};
  // Tr(e_r conj(f_s))
  std::array<std::array<std::int64_t, 4>, 4> pairing_{};
};

// Units of O/NO in lexicographic order. The scan over N^4 points may be
// split across threads (QMI_THREADS caps the count); the result does not
// depend on the split. Throws Error("LevelTooLarge") when N > max_level.
std::vector<TorsionPoint> enumerate_units(const LevelRing& ring, std::int64_t max_level = 12);

// Number of worker threads: QMI_THREADS if set and positive, else hardware concurrency.
unsigned worker_threads();

// A 4x4 residue matrix; row r holds the coefficients of phi_r on the order basis.
using FunctionalQuadruple = std::array<std::array<std::int64_t, 4>, 4>;

std::array<std::int64_t, 4> apply_functionals(const LevelRing& ring, const FunctionalQuadruple& phi,
                                              const TorsionPoint& p);

struct BasisLemmaResult {
  std::array<TorsionPoint, 4> e;  // e[0] == 1
  TorsionPoint p;                 // phi(p) = (1, 0, 0, 0)
};

// Constructive basis lemma mod N: find P with phi(P) = (1,0,0,0) and e_j with
// phi_i(e_j P) = delta_ij. Throws Error("SingularFunctionals") when phi is not
// invertible mod N and Error("NotEquivariant") when it is not a map of left
// O-modules.
BasisLemmaResult basis_from_functionals(const LevelRing& ring, const FunctionalQuadruple& phi);

// Checks on every P in O/NO that P -> sum_i phi_i(P) e_i is a bijective
// left-O-linear map.
bool reconstruction_identity(const LevelRing& ring, const FunctionalQuadruple& phi, const BasisLemmaResult& basis);

// Functionals P -> coordinates(P * g).
FunctionalQuadruple twisted_functionals(const LevelRing& ring, const TorsionPoint& g);

}  // namespace qmi
