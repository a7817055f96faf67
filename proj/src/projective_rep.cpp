#include "qmi/projective_rep.hpp"

#include "qmi/error.hpp"

namespace qmi {

namespace {

void check_shape(const ProjectiveRepData& rep) {
  const std::size_t n = rep.group.size();
  if (rep.r.size() != n || rep.deg.size() != n || rep.chi.size() != n)
    throw Error("SizeMismatch", "representation data does not match the group order");
}

std::int64_t reduce_or_throw(const Rational& x, std::int64_t n, const char* code) {
  auto v = reduce_mod(x, n);
  if (!v) throw Error(code, to_string(x) + " is not reducible mod " + std::to_string(n));
  return *v;
}

}  // namespace

CocycleDefect cocycle_defect(const LevelRing& ring, const ProjectiveRepData& rep, const LiftChoice& lift) {
  check_shape(rep);
  const auto& g = rep.group;
  const std::size_t n = g.size();
  const std::int64_t level = ring.level();
  std::vector<TorsionPoint> inv;
  for (const auto& x : rep.r) inv.push_back(ring.unit_inverse(x));

  CocycleDefect out;
  out.values.assign(n, std::vector<TorsionPoint>(n));
  bool scalar = true;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      TorsionPoint d = ring.mul(ring.mul(rep.r[s], rep.r[t]), inv[g.mul(s, t)]);
      if (!ring.is_central(d)) throw Error("NotCentral", "defect value is not central");
      scalar = scalar && d.c[1] == 0 && d.c[2] == 0 && d.c[3] == 0;
      out.values[s][t] = d;
    }
  if (!scalar) return out;

  std::vector<std::vector<std::int64_t>> res(n, std::vector<std::int64_t>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) res[s][t] = out.values[s][t].c[0];
  out.scalars = res;

  if (lift.candidate) {
    const auto& c = *lift.candidate;
    if (!(c.group() == g)) throw Error("GroupMismatch", "candidate cocycle lives on another group");
    // The candidate is normalised; compare after normalising the residues by their (1,1) entry.
    const std::int64_t e = res[g.identity()][g.identity()];
    auto e_inv = inverse_mod(e, level);
    bool match = e_inv.has_value();
    for (std::size_t s = 0; s < n && match; ++s)
      for (std::size_t t = 0; t < n && match; ++t) {
        auto v = reduce_mod(c(s, t).to_rational(), level);
        match = v && *v == mul_mod(res[s][t], *e_inv, level);
      }
    if (match) out.lifted = c;
    return out;
  }
  UnitMatrix values(n, std::vector<RationalUnit>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      std::int64_t v = res[s][t];
      if (2 * v > level) v -= level;
      if (v == 0) return out;
      values[s][t] = RationalUnit::from_rational(Rational(static_cast<long>(v)));
    }
  if (verify_cocycle(g, values)) out.lifted = Cocycle2(g, std::move(values));
  return out;
}

std::vector<bool> norm_compat_check(const LevelRing& ring, const ProjectiveRepData& rep) {
  check_shape(rep);
  const std::int64_t n = ring.level();
  std::vector<bool> out;
  for (std::size_t s = 0; s < rep.group.size(); ++s) {
    const std::int64_t deg = reduce_or_throw(rep.deg[s], n, "DegNotReducible");
    out.push_back(ring.nrd(rep.r[s]) == mul_mod(deg, mod_floor(rep.chi[s], n), n));
  }
  return out;
}

std::vector<DetCheckRow> det_formula_check(const LevelRing& ring, const ProjectiveRepData& rep, const Cochain1& alpha) {
  check_shape(rep);
  const std::int64_t n = ring.level();
  if (alpha.values.size() != rep.group.size()) throw Error("SizeMismatch", "cochain length differs from the group order");
  std::vector<DetCheckRow> out;
  for (std::size_t s = 0; s < rep.group.size(); ++s) {
    const Rational a = alpha.values[s].to_rational();
    const std::int64_t a_res = reduce_or_throw(1 / (a * a), n, "AlphaNotReducible");
    if (!is_unit_mod(a_res, n)) throw Error("AlphaNotReducible", to_string(a) + " is not a unit mod " + std::to_string(n));
    const std::int64_t deg = reduce_or_throw(rep.deg[s], n, "DegNotReducible");
    DetCheckRow row;
    row.lhs = mul_mod(ring.nrd(rep.r[s]), a_res, n);
    row.rhs = mul_mod(mul_mod(mod_floor(rep.chi[s], n), deg, n), a_res, n);
    row.ok = row.lhs == row.rhs;
    out.push_back(row);
  }
  return out;
}

}  // namespace qmi
