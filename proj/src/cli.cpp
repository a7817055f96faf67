#include "qmi/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qmi/acceptance.hpp"
#include "qmi/cm.hpp"
#include "qmi/error.hpp"
#include "qmi/fixtures.hpp"
#include "qmi/hilbert.hpp"
#include "qmi/json_io.hpp"
#include "qmi/moduli.hpp"
#include "qmi/projective_rep.hpp"

namespace qmi {

namespace {

[[noreturn]] void usage(const std::string& detail) { throw Error("UsageError", detail); }

// Flag values and the optional --json-in document. A named input is taken
// from its flag when given, otherwise from the document's field of that name.
struct Inputs {
  std::string json_in;
  std::int64_t max_level = 12;
  long search_bound = 10;
  std::map<std::string, std::string> flags;
  bool corrupt_fixture = false;
  Json doc;

  void load() {
    if (json_in.empty()) return;
    std::stringstream buffer;
    if (json_in == "-") {
      buffer << std::cin.rdbuf();
    } else {
      std::ifstream in(json_in);
      if (!in) usage("cannot open " + json_in);
      buffer << in.rdbuf();
    }
    try {
      doc = Json::parse(buffer.str());
    } catch (const Json::exception& e) {
      throw Error("ParseError", std::string("--json-in: ") + e.what());
    }
    if (!doc.is_object()) throw Error("ParseError", "--json-in must hold a JSON object");
  }

  std::optional<Json> find(const std::string& name) const {
    auto it = flags.find(name);
    if (it != flags.end() && !it->second.empty()) {
      const std::string& v = it->second;
      if (v.front() == '[' || v.front() == '{' || v.front() == '"') {
        try {
          return Json::parse(v);
        } catch (const Json::exception& e) {
          throw Error("ParseError", "--" + name + ": " + e.what());
        }
      }
      return Json(v);
    }
    if (doc.is_object() && doc.contains(name)) return doc.at(name);
    return std::nullopt;
  }

  Json need(const std::string& name) const {
    auto v = find(name);
    if (!v) usage("missing input '" + name + "'");
    return *v;
  }

  QuatAlgebra algebra() const {
    if (auto a = find("a")) return QuatAlgebra(rational_from_json(*a), rational_from_json(need("b")));
    if (auto alg = find("algebra")) return algebra_from_json(*alg);
    if (find("fixture") || find("order")) return order().algebra();
    usage("missing algebra (-a/-b)");
  }

  Order order() const {
    if (auto f = find("fixture")) return fixture_order(f->get<std::string>());
    if (auto o = find("order")) return order_from_json(*o);
    usage("missing order (--fixture or an 'order' object)");
  }

  std::int64_t level() const {
    const std::int64_t n = small_from_json(need("N"));
    if (n < 1) usage("-N must be positive");
    return n;
  }
};

void add(CLI::App* cmd, Inputs& in, const std::string& flag, const std::string& key, const std::string& help) {
  cmd->add_option(flag, in.flags[key], help);
}

FiniteGroupTable group_from_input(const Inputs& in) {
  auto g = in.find("group");
  if (!g) return FiniteGroupTable::cyclic(2);
  if (g->is_string()) {
    const std::string name = g->get<std::string>();
    if (name.starts_with("cyclic:")) {
      const long n = std::stol(name.substr(7));
      if (n < 1) usage("cyclic group order must be positive");
      return FiniteGroupTable::cyclic(static_cast<std::size_t>(n));
    }
    if (name == "klein")
      return FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(2));
    if (name == "s3") return FiniteGroupTable::symmetric3();
    if (name == "d4") return FiniteGroupTable::dihedral4();
    if (name == "q8") return FiniteGroupTable::quaternion8();
    usage("unknown group '" + name + "'");
  }
  return group_from_json(*g);
}

Cocycle2 cocycle_from_input(const Inputs& in, const FiniteGroupTable& g, const std::string& key) {
  auto c = in.find(key);
  if (!c || (c->is_string() && c->get<std::string>() == "trivial")) return Cocycle2::trivial(g);
  if (c->is_string() && c->get<std::string>() == "sign") {
    if (g.size() == 2) return sign_cocycle_z2();
    if (g.size() == 4) return quaternion_sign_cocycle();
    usage("the sign cocycle is defined on cyclic:2 and klein");
  }
  return Cocycle2(g, unit_matrix_from_json(*c));
}

SubgroupSpec subgroup_from_input(const Inputs& in, const LevelRing& ring, const std::string& key) {
  auto v = in.find(key);
  if (!v) return SubgroupSpec::trivial();
  if (v->is_string()) {
    const std::string s = v->get<std::string>();
    if (s == "trivial") return SubgroupSpec::trivial();
    if (s == "scalars") return SubgroupSpec::scalars();
    if (s == "all") return SubgroupSpec::all();
    usage("unknown subgroup '" + s + "'");
  }
  if (v->is_object() && v->contains("cm")) return SubgroupSpec::cm(ring.reduce(element_from_json(v->at("cm"))));
  std::vector<TorsionPoint> gens;
  for (const auto& p : *v) gens.push_back(point_from_json(ring, p));
  return SubgroupSpec::generated(std::move(gens));
}

ProjectiveRepData rep_from_input(const Inputs& in, const LevelRing& ring) {
  ProjectiveRepData rep{group_from_input(in), {}, {}, {}};
  for (const auto& p : in.need("r")) rep.r.push_back(point_from_json(ring, p));
  if (auto deg = in.find("deg"))
    for (const auto& d : *deg) rep.deg.push_back(rational_from_json(d));
  else
    rep.deg.assign(rep.r.size(), 1);
  if (auto chi = in.find("chi"))
    for (const auto& x : *chi) rep.chi.push_back(small_from_json(x));
  else
    for (const auto& p : rep.r) rep.chi.push_back(ring.nrd(p));
  return rep;
}

LeftIdeal ideal_from_input(const Inputs& in, const Order& order) {
  if (auto s = in.find("scale")) return scalar_ideal(order, rational_from_json(*s));
  if (auto g = in.find("generator")) return principal_left_ideal(order, element_from_json(*g));
  if (auto l = in.find("ideal")) return LeftIdeal(order, lattice_from_json(*l));
  usage("missing ideal (--scale, --generator or an 'ideal' lattice)");
}

Json bool_table(const std::vector<bool>& v) {
  Json out = Json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

Json pairing_value(std::int64_t k, std::int64_t n) { return to_string(make_rational(k, n)); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Inputs in;
  CLI::App app{"Exact quaternion order, torsion and cohomology toolkit", "qmi"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--json-in", in.json_in, "Read inputs from a JSON object (file path or '-')");
  app.add_option("--max-level", in.max_level, "Largest level N for exhaustive scans")->capture_default_str();
  app.add_option("--search-bound", in.search_bound, "Search bound for CM embeddings")->capture_default_str();

  std::function<Json()> action;
  std::function<int()> text_action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Json()> fn) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  // algebra
  CLI::App* algebra = group("algebra", "Quaternion algebra arithmetic");
  for (auto* cmd : {
           leaf(algebra, "info", "Discriminant and ramified places",
                [&] {
                  const auto d = algebra_discriminant(in.algebra());
                  Json places = Json::array();
                  for (const auto& p : d.ramified) places.push_back(p.label());
                  return Json{{"disc", to_string(d.disc)}, {"ramified", places}};
                }),
           leaf(algebra, "hilbert", "Hilbert symbol at a place",
                [&] {
                  const QuatAlgebra alg = in.algebra();
                  const std::string place = in.need("place").get<std::string>();
                  const Place p = place == "inf" ? Place::infinity() : Place::at(parse_integer(place));
                  return Json{{"symbol", std::to_string(hilbert_symbol(alg.a(), alg.b(), p))}};
                }),
           leaf(algebra, "mul", "Product x*y",
                [&] {
                  const QuatAlgebra alg = in.algebra();
                  return Json{{"product", element_to_json(alg.mul(element_from_json(in.need("x")),
                                                                  element_from_json(in.need("y"))))}};
                }),
           leaf(algebra, "norm", "Reduced norm and trace of x",
                [&] {
                  const QuatAlgebra alg = in.algebra();
                  const QuatElement x = element_from_json(in.need("x"));
                  return Json{{"norm", to_string(alg.norm(x))}, {"trace", to_string(reduced_trace(x))}};
                }),
           leaf(algebra, "inverse", "Inverse of x",
                [&] {
                  const QuatAlgebra alg = in.algebra();
                  return Json{{"inverse", element_to_json(alg.inverse(element_from_json(in.need("x"))))}};
                }),
       }) {
    add(cmd, in, "-a", "a", "Parameter a (i^2 = a)");
    add(cmd, in, "-b", "b", "Parameter b (j^2 = b)");
    add(cmd, in, "--place", "place", "Prime or 'inf'");
    add(cmd, in, "-x,--x", "x", "Element as a JSON 4-array");
    add(cmd, in, "-y,--y", "y", "Element as a JSON 4-array");
  }

  // order
  CLI::App* order = group("order", "Orders in quaternion algebras");
  for (auto* cmd : {
           leaf(order, "check", "Is the lattice an order?",
                [&] {
                  if (in.find("fixture")) {
                    const Order o = in.order();
                    return Json{{"is_order", true}, {"order", order_to_json(o)}};
                  }
                  const Json spec = in.need("order");
                  const QuatAlgebra alg = algebra_from_json(spec.at("algebra"));
                  Lattice4 lat = spec.contains("basis") ? [&] {
                    std::vector<QuatElement> gens;
                    for (const auto& e : spec.at("basis")) gens.push_back(element_from_json(e));
                    return Lattice4::from_generators(gens);
                  }()
                                                        : lattice_from_json(spec);
                  return Json{{"is_order", is_order(lat, alg)}};
                }),
           leaf(order, "disc", "Reduced discriminant d(O)",
                [&] { return Json{{"disc", to_string(reduced_discriminant(in.order()))}}; }),
           leaf(order, "level", "Eichler level d(O)/disc(B)",
                [&] { return Json{{"level", to_string(eichler_level(in.order()))}}; }),
           leaf(order, "dual", "Sharp dual O^#",
                [&] {
                  const Order o = in.order();
                  const LeftIdeal dual(o, sharp_dual(o.lattice(), o.algebra()));
                  Json j = lattice_to_json(dual.lattice());
                  j["nrd"] = to_string(nrd_ideal(dual));
                  return j;
                }),
       }) {
    add(cmd, in, "--fixture", "fixture", "Named order");
  }

  // ideal
  CLI::App* ideal = group("ideal", "Left ideals of an order");
  for (auto* cmd : {
           leaf(ideal, "nrd", "Reduced norm of the ideal",
                [&] { return Json{{"nrd", to_string(nrd_ideal(ideal_from_input(in, in.order())))}}; }),
           leaf(ideal, "degree", "Isogeny degree Norm(I)^-1",
                [&] { return Json{{"degree", to_string(isogeny_degree(ideal_from_input(in, in.order())))}}; }),
           leaf(ideal, "kernel", "I/O in invariant-factor form",
                [&] {
                  const Order o = in.order();
                  return kernel_to_json(kernel_module(o, ideal_from_input(in, o)));
                }),
           leaf(ideal, "dual-check", "Is I contained in Norm(I) O?",
                [&] { return Json{{"ok", dual_inclusion_check(ideal_from_input(in, in.order()))}}; }),
       }) {
    add(cmd, in, "--fixture", "fixture", "Named order");
    add(cmd, in, "--scale", "scale", "I = s O for a rational s");
    add(cmd, in, "--generator", "generator", "I = O g for g as a JSON 4-array");
  }

  // torsion
  CLI::App* torsion = group("torsion", "The finite ring O/NO");
  for (auto* cmd : {
           leaf(torsion, "pairing-table", "Weil pairing values k/N on O/NO x O^#/NO^#",
                [&] {
                  const LevelRing ring(in.order(), in.level());
                  if (ring.size() > 625) throw Error("TooLarge", "pairing tables are limited to N <= 5");
                  Json rows = Json::array();
                  for (std::int64_t i = 0; i < ring.size(); ++i) {
                    Json row = Json::array();
                    for (std::int64_t k = 0; k < ring.size(); ++k)
                      row.push_back(pairing_value(ring.weil_pairing(ring.decode(i), ring.decode(k)), ring.level()));
                    rows.push_back(row);
                  }
                  Json dual = Json::array();
                  for (const auto& f : ring.dual_basis()) dual.push_back(element_to_json(f));
                  return Json{{"N", std::to_string(ring.level())}, {"dual_basis", dual}, {"table", rows}};
                }),
           leaf(torsion, "units", "Units of O/NO",
                [&] {
                  const LevelRing ring(in.order(), in.level());
                  const auto units = enumerate_units(ring, in.max_level);
                  Json list = Json::array();
                  for (const auto& u : units) list.push_back(point_to_json(u));
                  return Json{{"N", std::to_string(ring.level())}, {"count", std::to_string(units.size())}, {"units", list}};
                }),
           leaf(torsion, "basis", "Basis lemma for a functional quadruple",
                [&] {
                  const LevelRing ring(in.order(), in.level());
                  FunctionalQuadruple phi{};
                  const Json m = in.need("phi");
                  for (std::size_t r = 0; r < 4; ++r)
                    for (std::size_t c = 0; c < 4; ++c) phi[r][c] = small_from_json(m.at(r).at(c));
                  const auto res = basis_from_functionals(ring, phi);
                  Json e = Json::array();
                  for (const auto& p : res.e) e.push_back(point_to_json(p));
                  return Json{{"e", e}, {"P", point_to_json(res.p)}, {"reconstruction", reconstruction_identity(ring, phi, res)}};
                }),
           leaf(torsion, "defect", "Cocycle defect r(s)r(t)r(st)^-1 of projective data",
                [&] {
                  const LevelRing ring(in.order(), in.level());
                  const ProjectiveRepData rep = rep_from_input(in, ring);
                  const CocycleDefect d = cocycle_defect(ring, rep);
                  Json values = Json::array();
                  for (const auto& row : d.values) {
                    Json r = Json::array();
                    for (const auto& p : row) r.push_back(point_to_json(p));
                    values.push_back(r);
                  }
                  Json outj = {{"central", true}, {"values", values}};
                  if (d.lifted) outj["cocycle"] = unit_matrix_to_json(d.lifted->values());
                  return outj;
                }),
           leaf(torsion, "norm-check", "nrd(r(s)) == deg(s) chi(s) mod N",
                [&] {
                  const LevelRing ring(in.order(), in.level());
                  return Json{{"ok", bool_table(norm_compat_check(ring, rep_from_input(in, ring)))}};
                }),
       }) {
    add(cmd, in, "--fixture", "fixture", "Named order");
    add(cmd, in, "-N", "N", "Level");
    add(cmd, in, "--phi", "phi", "4x4 functional matrix (JSON)");
    add(cmd, in, "--group", "group", "cyclic:n, klein, s3, d4, q8 or a JSON table");
    add(cmd, in, "--r", "r", "Values r(s) as a JSON list of points");
  }

  // cosets
  CLI::App* cosets = group("cosets", "Double cosets Gamma \\ (O/NO)^x / H");
  for (auto* cmd : {
           leaf(cosets, "enumerate", "Coset representatives",
                [&] {
                  const LevelRing ring(in.order(), in.level());
                  const DoubleCosetSpace space(ring, subgroup_from_input(in, ring, "gamma"),
                                               subgroup_from_input(in, ring, "endo"), in.max_level);
                  return coset_space_to_json(space);
                }),
           leaf(cosets, "act", "Permutation [b] -> [b rho]",
                [&] {
                  const LevelRing ring(in.order(), in.level());
                  const DoubleCosetSpace space(ring, subgroup_from_input(in, ring, "gamma"),
                                               subgroup_from_input(in, ring, "endo"), in.max_level);
                  const auto perm = galois_act(ring, space, point_from_json(ring, in.need("rho")));
                  Json p = Json::array();
                  for (auto v : perm) p.push_back(v);
                  Json j = coset_space_to_json(space);
                  j["perm"] = p;
                  return j;
                }),
       }) {
    add(cmd, in, "--fixture", "fixture", "Named order");
    add(cmd, in, "-N", "N", "Level");
    add(cmd, in, "--gamma", "gamma", "trivial, scalars, all, {\"cm\": x} or a JSON list of points");
    add(cmd, in, "--endo", "endo", "trivial, scalars, all, {\"cm\": x} or a JSON list of points");
    add(cmd, in, "--rho", "rho", "Unit as a JSON point");
  }

  // moduli
  CLI::App* moduli = group("moduli", "Moduli change between O and an overorder O_0");
  auto moduli_change = [&](const std::function<Json(const LevelRing&, const LevelRing&, const ModuliChange&)>& fn) {
    return [&in, fn] {
      const std::int64_t n = small_from_json(in.need("N"));
      const LevelRing small(fixture_order(in.need("small").get<std::string>()), n);
      const LevelRing big(fixture_order(in.need("big").get<std::string>()), n);
      const ModuliChange mc(small, big);
      Json j = fn(small, big, mc);
      j["index"] = to_string(mc.index());
      return j;
    };
  };
  for (auto* cmd : {
           leaf(moduli, "lambda", "b + O -> b + O_0",
                moduli_change([&](const LevelRing& s, const LevelRing&, const ModuliChange& mc) {
                  return Json{{"point", point_to_json(mc.lambda(point_from_json(s, in.need("point"))))}};
                })),
           leaf(moduli, "lambda-vee", "b + O_0 -> [O_0:O] b + O",
                moduli_change([&](const LevelRing&, const LevelRing& b, const ModuliChange& mc) {
                  return Json{{"point", point_to_json(mc.lambda_vee(point_from_json(b, in.need("point"))))}};
                })),
           leaf(moduli, "kernel", "Kernel of lambda on (1/N)O/O",
                moduli_change([&](const LevelRing&, const LevelRing&, const ModuliChange& mc) {
                  return kernel_to_json(mc.kernel());
                })),
       }) {
    add(cmd, in, "--small", "small", "Fixture name of O");
    add(cmd, in, "--big", "big", "Fixture name of O_0");
    add(cmd, in, "-N", "N", "Level");
    add(cmd, in, "--point", "point", "Point as a JSON 4-array of residues");
  }

  // cm
  CLI::App* cm = group("cm", "CM embeddings");
  auto embedding = [&]() -> CMEmbedding {
    const QuatAlgebra alg = in.algebra();
    if (auto x = in.find("x")) {
      const QuatElement e = element_from_json(*x);
      CMEmbedding emb{alg.norm(e).get_num(), e};
      if (alg.norm(e).get_den() != 1) throw Error("InvalidEmbedding", "Norm(x) must be an integer");
      validate_embedding(alg, emb);
      return emb;
    }
    return find_imaginary_embedding(alg, integer_from_json(in.need("d")), in.search_bound);
  };
  for (auto* cmd : {
           leaf(cm, "embed", "Find x with x^2 = -d",
                [&] {
                  const QuatAlgebra alg = in.algebra();
                  long bound = in.search_bound;
                  if (auto b = in.find("bound")) bound = small_from_json(*b);
                  return embedding_to_json(find_imaginary_embedding(alg, integer_from_json(in.need("d")), bound));
                }),
           leaf(cm, "j", "Trace-zero j anticommuting with x",
                [&] {
                  const QuatAlgebra alg = in.algebra();
                  const CMEmbedding emb = embedding();
                  const QuatElement j = anticommutant(alg, emb.x);
                  return Json{{"x", element_to_json(emb.x)},
                              {"j", element_to_json(j)},
                              {"j2", to_string(alg.mul(j, j)[0])}};
                }),
           leaf(cm, "normalizer", "Level-N classification of units into K, jK and neither",
                [&] {
                  const Order o = in.order();
                  const LevelRing ring(o, in.level());
                  const CMEmbedding emb = embedding();
                  const auto part = normalizer_split(ring, enumerate_units(ring, in.max_level), ring.reduce(emb.x));
                  auto list = [](const std::vector<TorsionPoint>& v) {
                    Json a = Json::array();
                    for (const auto& p : v) a.push_back(point_to_json(p));
                    return a;
                  };
                  return Json{{"x", element_to_json(emb.x)},
                              {"K", list(part.k_part)},
                              {"jK", list(part.jk_part)},
                              {"neither", list(part.neither)}};
                }),
       }) {
    add(cmd, in, "-a", "a", "Parameter a");
    add(cmd, in, "-b", "b", "Parameter b");
    add(cmd, in, "-d", "d", "K = Q(sqrt(-d))");
    add(cmd, in, "--bound", "bound", "Search bound");
    add(cmd, in, "-x,--x", "x", "Embedding element as a JSON 4-array");
    add(cmd, in, "--fixture", "fixture", "Named order");
    add(cmd, in, "-N", "N", "Level");
  }
  {
    CLI::App* cmd = leaf(cm, "optimal-order", "Discriminant of O cap Q(x)", [&] {
      const Order o = in.order();
      const CMEmbedding emb = embedding();
      const auto info = optimal_embedding_order(o, emb);
      return Json{{"x", element_to_json(emb.x)},
                  {"discriminant", to_string(info.discriminant)},
                  {"field_discriminant", to_string(info.field_discriminant)},
                  {"conductor", to_string(info.conductor)},
                  {"basis", Json::array({element_to_json(info.basis[0]), element_to_json(info.basis[1])})}};
    });
    add(cmd, in, "--fixture", "fixture", "Named order");
    add(cmd, in, "-d", "d", "K = Q(sqrt(-d))");
    add(cmd, in, "-x,--x", "x", "Embedding element as a JSON 4-array");
  }

  // cocycle
  CLI::App* cocycle = group("cocycle", "Q^x-valued 2-cocycles on finite groups");
  for (auto* cmd : {
           leaf(cocycle, "verify", "Check the 2-cocycle identity",
                [&] {
                  const FiniteGroupTable g = group_from_input(in);
                  auto c = in.find("cocycle");
                  if (!c || c->is_string()) return Json{{"ok", verify_cocycle(g, cocycle_from_input(in, g, "cocycle").values())}};
                  return Json{{"ok", verify_cocycle(g, unit_matrix_from_json(*c))}};
                }),
           leaf(cocycle, "coboundary", "d alpha",
                [&] {
                  const FiniteGroupTable g = group_from_input(in);
                  return Json{{"cocycle", unit_matrix_to_json(coboundary(cochain_from_json(g, in.need("alpha"))).values())}};
                }),
           leaf(cocycle, "split", "Find alpha with d alpha = c, or an obstruction",
                [&] {
                  const FiniteGroupTable g = group_from_input(in);
                  const SplitResult r = split_cocycle(cocycle_from_input(in, g, "cocycle"));
                  Json j = {{"split", r.alpha.has_value()}};
                  if (r.alpha) {
                    j["alpha"] = cochain_to_json(*r.alpha);
                    Json values = Json::array();
                    for (const auto& v : r.alpha->values) values.push_back(to_string(v));
                    j["values"] = values;
                  }
                  j["obstruction"] = obstruction_to_json(r.report);
                  return j;
                }),
           leaf(cocycle, "class-eq", "Are two cocycles cohomologous?",
                [&] {
                  const FiniteGroupTable g = group_from_input(in);
                  return Json{{"equal", cohomology_class_equal(cocycle_from_input(in, g, "cocycle"),
                                                               cocycle_from_input(in, g, "cocycle2"))}};
                }),
           leaf(cocycle, "twisted-mul", "(b,s)(b',t) = (c(s,t) b b', st)",
                [&] {
                  const FiniteGroupTable g = group_from_input(in);
                  const Cocycle2 c = cocycle_from_input(in, g, "cocycle");
                  const QuatAlgebra alg = in.algebra();
                  auto read = [&](const std::string& key) {
                    const Json v = in.need(key);
                    const auto s = small_from_json(v.at("sigma"));
                    if (s < 0 || static_cast<std::size_t>(s) >= g.size()) usage("group index out of range");
                    return TwistedElement{element_from_json(v.at("b")), static_cast<std::size_t>(s)};
                  };
                  const TwistedElement r = twisted_mult(alg, g, c.values(), read("lhs"), read("rhs"));
                  return Json{{"b", element_to_json(r.b)}, {"sigma", r.sigma}};
                }),
           leaf(cocycle, "det-check", "Determinant formula per group element",
                [&] {
                  const LevelRing ring(in.order(), in.level());
                  const ProjectiveRepData rep = rep_from_input(in, ring);
                  Cochain1 alpha{rep.group, std::vector<RationalUnit>(rep.group.size())};
                  if (auto a = in.find("alpha")) alpha = cochain_from_json(rep.group, *a);
                  Json rows = Json::array();
                  for (const auto& row : det_formula_check(ring, rep, alpha))
                    rows.push_back(Json{{"lhs", std::to_string(row.lhs)}, {"rhs", std::to_string(row.rhs)}, {"ok", row.ok}});
                  return Json{{"rows", rows}};
                }),
       }) {
    add(cmd, in, "--group", "group", "cyclic:n, klein, s3, d4, q8 or a JSON table");
    add(cmd, in, "--cocycle", "cocycle", "trivial, sign or a JSON matrix of units");
    add(cmd, in, "--cocycle2", "cocycle2", "Second cocycle");
    add(cmd, in, "--alpha", "alpha", "1-cochain as a JSON list of units");
    add(cmd, in, "-a", "a", "Parameter a");
    add(cmd, in, "-b", "b", "Parameter b");
    add(cmd, in, "--lhs", "lhs", "{\"b\": [...], \"sigma\": s}");
    add(cmd, in, "--rhs", "rhs", "{\"b\": [...], \"sigma\": s}");
    add(cmd, in, "--fixture", "fixture", "Named order");
    add(cmd, in, "-N", "N", "Level");
    add(cmd, in, "--r", "r", "Values r(s) as a JSON list of points");
  }

  // selftest
  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_flag("--corrupt-fixture", in.corrupt_fixture, "Replace the split maximal fixture (negative control)");
  selftest->callback([&] {
    text_action = [&] {
      AcceptanceOptions opts;
      opts.max_level = in.max_level;
      opts.corrupt_fixture = in.corrupt_fixture;
      const auto results = run_acceptance(opts);
      double total = 0;
      for (const auto& r : results) {
        out << format_result(r) << "\n";
        total += r.seconds;
      }
      const bool ok = all_passed(results) && total < 60.0;
      out << (ok ? "PASS" : "FAIL") << "  total " << total << "s\n";
      return ok ? 0 : 1;
    };
  });

  auto report = [&err](const std::string& code, const std::string& detail) {
    err << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
  };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report("UsageError", e.what());
    return 2;
  }
  try {
    in.load();
    if (text_action) return text_action();
    if (!action) usage("no command given");
    out << action().dump() << "\n";
    return 0;
  } catch (const Error& e) {
    const std::string what = e.what();
    const auto pos = what.find(": ");
    report(e.code(), pos == std::string::npos ? what : what.substr(pos + 2));
    return e.code() == "UsageError" || e.code() == "ParseError" ? 2 : 1;
  } catch (const Json::exception& e) {
    report("ParseError", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    report("UsageError", e.what());
    return 2;
  }
}

}  // namespace qmi
