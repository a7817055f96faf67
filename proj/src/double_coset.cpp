#include "qmi/double_coset.hpp"

#include <algorithm>

#include "qmi/error.hpp"

namespace qmi {

std::vector<TorsionPoint> subgroup_generators(const LevelRing& ring, const SubgroupSpec& spec,
                                              const std::vector<TorsionPoint>& units) {
  const std::int64_t n = ring.level();
  std::vector<TorsionPoint> gens;
  switch (spec.kind) {
    case SubgroupSpec::Kind::Trivial:
      break;
    case SubgroupSpec::Kind::Scalars:
      for (std::int64_t s = 1; s < std::max<std::int64_t>(n, 2); ++s)
        if (is_unit_mod(s, n)) gens.push_back(ring.scalar(s));
      break;
    case SubgroupSpec::Kind::All:
      gens = units;
      break;
    case SubgroupSpec::Kind::Generated:
      for (const auto& g : spec.generators) {
        if (!ring.is_unit(g)) throw Error("NotAUnit", "subgroup generator is not a unit");
        gens.push_back(g);
      }
      break;
    case SubgroupSpec::Kind::CM:
      for (std::int64_t u = 0; u < n; ++u)
        for (std::int64_t v = 0; v < n; ++v) {
          TorsionPoint g = ring.add(ring.scalar(u), ring.scale(v, spec.cm_element));
          if (ring.is_unit(g)) gens.push_back(g);
        }
      break;
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::vector<std::int64_t> subgroup_elements(const LevelRing& ring, const std::vector<TorsionPoint>& generators) {
  std::vector<char> seen(static_cast<std::size_t>(ring.size()), 0);
  std::vector<TorsionPoint> queue = {ring.one()};
  seen[static_cast<std::size_t>(ring.encode(ring.one()))] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators) {
      TorsionPoint p = ring.mul(queue[head], g);
      auto& flag = seen[static_cast<std::size_t>(ring.encode(p))];
      if (!flag) {
        flag = 1;
        queue.push_back(p);
      }
    }
  }
  std::vector<std::int64_t> out;
  for (const auto& p : queue) out.push_back(ring.encode(p));
  std::sort(out.begin(), out.end());
  return out;
}

DoubleCosetSpace::DoubleCosetSpace(const LevelRing& ring, const SubgroupSpec& gamma, const SubgroupSpec& endo,
                                   std::int64_t max_level)
    : ring_(&ring), n_(ring.level()) {
  const auto units = enumerate_units(ring, max_level);
  unit_count_ = units.size();
  coset_index_.assign(static_cast<std::size_t>(ring.size()), -1);
  h_gens_ = subgroup_generators(ring, endo, units);
  h_elems_ = subgroup_elements(ring, h_gens_);

  if (gamma.kind == SubgroupSpec::Kind::All) {
    // A single orbit; units are already in lexicographic order.
    for (const auto& u : units) coset_index_[static_cast<std::size_t>(ring.encode(u))] = 0;
    reps_.push_back(units.front());
    sizes_.push_back(units.size());
    return;
  }
  const auto g_gens = subgroup_generators(ring, gamma, units);
  std::vector<TorsionPoint> h_list;
  for (auto code : h_elems_) h_list.push_back(ring.decode(code));
  const auto g_elems = subgroup_elements(ring, g_gens);
  std::vector<TorsionPoint> g_list;
  for (auto code : g_elems) g_list.push_back(ring.decode(code));

  // Units are visited in lexicographic order, so the first unit of each new
  // orbit is its least member.
  for (const auto& u : units) {
    const auto start = static_cast<std::size_t>(ring.encode(u));
    if (coset_index_[start] >= 0) continue;
    const auto index = static_cast<std::int32_t>(reps_.size());
    std::size_t size = 0;
    for (const auto& g : g_list) {
      TorsionPoint gu = ring.mul(g, u);
      for (const auto& h : h_list) {
        auto& slot = coset_index_[static_cast<std::size_t>(ring.encode(ring.mul(gu, h)))];
        if (slot < 0) {
          slot = index;
          ++size;
        }
      }
    }
    reps_.push_back(u);
    sizes_.push_back(size);
  }
}

std::size_t DoubleCosetSpace::coset_of(const TorsionPoint& g) const {
  const auto code = ring_->encode(g);
  const std::int32_t idx = coset_index_[static_cast<std::size_t>(code)];
  if (idx < 0) throw Error("NotAUnit", "point is not a unit");
  return static_cast<std::size_t>(idx);
}

std::vector<std::size_t> galois_act(const LevelRing& ring, const DoubleCosetSpace& space, const TorsionPoint& rho) {
  if (!ring.is_unit(rho)) throw Error("NotAUnit", "rho is not a unit");
  const TorsionPoint rho_inv = ring.unit_inverse(rho);
  const auto& h = space.endo_elements();
  for (const auto& g : space.endo_generators()) {
    const auto code = ring.encode(ring.mul(ring.mul(rho_inv, g), rho));
    if (!std::binary_search(h.begin(), h.end(), code))
      throw Error("NotInNormalizer", "rho does not normalise the endomorphism subgroup");
  }
  std::vector<std::size_t> perm;
  perm.reserve(space.representatives().size());
  for (const auto& rep : space.representatives()) perm.push_back(space.coset_of(ring.mul(rep, rho)));
  return perm;
}

}  // namespace qmi
