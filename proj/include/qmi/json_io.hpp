#pragma once

#include <json.hpp>

#include "qmi/cm.hpp"
#include "qmi/cocycle.hpp"
#include "qmi/double_coset.hpp"
#include "qmi/level_ring.hpp"
#include "qmi/order.hpp"

namespace qmi {

using Json = nlohmann::ordered_json;

// Readers accept what the writers emit; integers are also accepted as JSON
// numbers. Malformed input throws Error("ParseError").

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);
std::int64_t small_from_json(const Json& j);

Json element_to_json(const QuatElement& x);
QuatElement element_from_json(const Json& j);

Json algebra_to_json(const QuatAlgebra& alg);
QuatAlgebra algebra_from_json(const Json& j);

Json lattice_to_json(const Lattice4& lattice);
Lattice4 lattice_from_json(const Json& j);

// {"algebra", "den", "rows", "basis"}. The reader takes "basis" (ring basis
// starting with 1) or "den"/"rows", or {"fixture": name}.
Json order_to_json(const Order& order);
Order order_from_json(const Json& j);

Json point_to_json(const TorsionPoint& p);
TorsionPoint point_from_json(const LevelRing& ring, const Json& j);

Json coset_space_to_json(const DoubleCosetSpace& space);

Json rational_unit_to_json(const RationalUnit& u);
// Also accepts a rational string such as "-3/4".
RationalUnit rational_unit_from_json(const Json& j);

Json unit_matrix_to_json(const UnitMatrix& m);
UnitMatrix unit_matrix_from_json(const Json& j);

Json group_to_json(const FiniteGroupTable& g);
FiniteGroupTable group_from_json(const Json& j);

Json cochain_to_json(const Cochain1& alpha);
Cochain1 cochain_from_json(const FiniteGroupTable& g, const Json& j);

Json kernel_to_json(const KernelModule& km);
Json embedding_to_json(const CMEmbedding& emb);
CMEmbedding embedding_from_json(const Json& j);
Json obstruction_to_json(const ObstructionReport& report);

}  // namespace qmi
