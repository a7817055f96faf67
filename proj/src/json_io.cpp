#include "qmi/json_io.hpp"

#include "qmi/error.hpp"
#include "qmi/fixtures.hpp"

namespace qmi {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error("ParseError", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || (n != 0 && j.size() != n)) fail(std::string("expected an array for ") + what);
  return j;
}

}  // namespace

Json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  fail("expected a rational string");
}

Integer integer_from_json(const Json& j) {
  Rational r = rational_from_json(j);
  if (r.get_den() != 1) fail("expected an integer, got " + to_string(r));
  return r.get_num();
}

std::int64_t small_from_json(const Json& j) {
  Integer v = integer_from_json(j);
  if (!v.fits_slong_p()) fail("integer out of range");
  return v.get_si();
}

Json element_to_json(const QuatElement& x) {
  Json out = Json::array();
  for (const auto& c : x.c) out.push_back(rational_to_json(c));
  return out;
}

QuatElement element_from_json(const Json& j) {
  array_of(j, 4, "a quaternion");
  return QuatElement(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
                     rational_from_json(j[3]));
}

Json algebra_to_json(const QuatAlgebra& alg) { return Json{{"a", to_string(alg.a())}, {"b", to_string(alg.b())}}; }

QuatAlgebra algebra_from_json(const Json& j) {
  return QuatAlgebra(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")));
}

Json lattice_to_json(const Lattice4& lattice) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back(to_string(lattice.hnf()(r, c)));
    rows.push_back(row);
  }
  return Json{{"den", to_string(lattice.denominator())}, {"rows", rows}};
}

Lattice4 lattice_from_json(const Json& j) {
  const Integer den = integer_from_json(field(j, "den"));
  if (den <= 0) fail("lattice denominator must be positive");
  const Json& rows = array_of(field(j, "rows"), 0, "lattice rows");
  std::vector<QuatElement> gens;
  for (const auto& row : rows) {
    array_of(row, 4, "a lattice row");
    QuatElement e;
    for (std::size_t c = 0; c < 4; ++c) e[c] = make_rational(integer_from_json(row[c]), den);
    gens.push_back(e);
  }
  return Lattice4::from_generators(gens);
}

Json order_to_json(const Order& order) {
  Json out = {{"algebra", algebra_to_json(order.algebra())}};
  Json lat = lattice_to_json(order.lattice());
  out["den"] = lat["den"];
  out["rows"] = lat["rows"];
  Json basis = Json::array();
  for (const auto& e : order.basis()) basis.push_back(element_to_json(e));
  out["basis"] = basis;
  return out;
}

Order order_from_json(const Json& j) {
  if (j.is_object() && j.contains("fixture")) return fixture_order(j.at("fixture").get<std::string>());
  QuatAlgebra alg = algebra_from_json(field(j, "algebra"));
  if (j.contains("basis")) {
    std::vector<QuatElement> gens;
    for (const auto& e : array_of(j.at("basis"), 0, "order basis")) gens.push_back(element_from_json(e));
    return Order(alg, gens);
  }
  Lattice4 lat = lattice_from_json(j);
  auto b = lat.basis();
  return Order(alg, std::vector<QuatElement>(b.begin(), b.end()));
}

Json point_to_json(const TorsionPoint& p) {
  Json out = Json::array();
  for (auto c : p.c) out.push_back(std::to_string(c));
  return out;
}

TorsionPoint point_from_json(const LevelRing& ring, const Json& j) {
  array_of(j, 4, "a torsion point");
  return ring.point({small_from_json(j[0]), small_from_json(j[1]), small_from_json(j[2]), small_from_json(j[3])});
}

Json coset_space_to_json(const DoubleCosetSpace& space) {
  Json reps = Json::array();
  for (const auto& r : space.representatives()) reps.push_back(point_to_json(r));
  Json sizes = Json::array();
  for (auto s : space.orbit_sizes()) sizes.push_back(std::to_string(s));
  return Json{{"N", std::to_string(space.level())}, {"reps", reps}, {"sizes", sizes}};
}

Json rational_unit_to_json(const RationalUnit& u) {
  Json exp = Json::object();
  for (const auto& [p, e] : u.exponents()) exp[to_string(p)] = e;
  return Json{{"sign", u.sign()}, {"exp", exp}};
}

RationalUnit rational_unit_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return RationalUnit::from_rational(rational_from_json(j));
  const Json& sign = field(j, "sign");
  int s = 1;
  if (sign.is_number_integer())
    s = sign.get<int>();
  else
    s = static_cast<int>(small_from_json(sign));
  if (s != 1 && s != -1) fail("sign must be 1 or -1");
  std::map<Integer, long> exp;
  if (j.contains("exp")) {
    if (!j.at("exp").is_object()) fail("exp must be an object");
    for (const auto& [key, value] : j.at("exp").items()) exp[parse_integer(key)] = small_from_json(value);
  }
  return RationalUnit(s, std::move(exp));
}

Json unit_matrix_to_json(const UnitMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_unit_to_json(v));
    out.push_back(r);
  }
  return out;
}

UnitMatrix unit_matrix_from_json(const Json& j) {
  UnitMatrix out;
  for (const auto& row : array_of(j, 0, "a cocycle")) {
    std::vector<RationalUnit> r;
    for (const auto& v : array_of(row, 0, "a cocycle row")) r.push_back(rational_unit_from_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

Json group_to_json(const FiniteGroupTable& g) {
  Json out = Json::array();
  for (const auto& row : g.table()) out.push_back(row);
  return out;
}

FiniteGroupTable group_from_json(const Json& j) {
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : array_of(j, 0, "a group table")) {
    std::vector<std::size_t> r;
    for (const auto& v : array_of(row, 0, "a group table row")) {
      const auto x = small_from_json(v);
      if (x < 0) fail("negative group index");
      r.push_back(static_cast<std::size_t>(x));
    }
    table.push_back(std::move(r));
  }
  return FiniteGroupTable(std::move(table));
}

Json cochain_to_json(const Cochain1& alpha) {
  Json out = Json::array();
  for (const auto& v : alpha.values) out.push_back(rational_unit_to_json(v));
  return out;
}

Cochain1 cochain_from_json(const FiniteGroupTable& g, const Json& j) {
  Cochain1 alpha{g, {}};
  for (const auto& v : array_of(j, g.size(), "a cochain")) alpha.values.push_back(rational_unit_from_json(v));
  return alpha;
}

Json kernel_to_json(const KernelModule& km) {
  Json divisors = Json::array();
  for (const auto& d : km.elementary_divisors) divisors.push_back(to_string(d));
  Json gens = Json::array();
  for (const auto& g : km.generators) gens.push_back(element_to_json(g));
  return Json{{"divisors", divisors}, {"order", to_string(km.order())}, {"generators", gens}};
}

Json embedding_to_json(const CMEmbedding& emb) { return Json{{"d", to_string(emb.d)}, {"x", element_to_json(emb.x)}}; }

CMEmbedding embedding_from_json(const Json& j) {
  return CMEmbedding{integer_from_json(field(j, "d")), element_from_json(field(j, "x"))};
}

Json obstruction_to_json(const ObstructionReport& report) {
  Json primes = Json::array();
  for (const auto& p : report.primes) {
    Json divisors = Json::array();
    for (const auto& d : p.elementary_divisors) divisors.push_back(to_string(d));
    Json entry = {{"prime", to_string(p.prime)}, {"divisors", divisors}, {"solvable", p.solvable}};
    if (!p.solvable) {
      entry["failing_index"] = std::to_string(p.failing_index);
      entry["modulus"] = to_string(p.modulus);
      entry["residue"] = to_string(p.residue);
    }
    primes.push_back(entry);
  }
  Json witness = Json::array();
  for (const auto& [s, t] : report.sign_witness) witness.push_back(Json::array({s, t}));
  return Json{{"primes", primes}, {"sign_solvable", report.sign_solvable}, {"sign_witness", witness}};
}

}  // namespace qmi
