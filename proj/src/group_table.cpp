#include "qmi/group_table.hpp"

#include <map>

#include "qmi/error.hpp"
#include "qmi/quaternion.hpp"

namespace qmi {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error("InvalidGroup", "empty table");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error("InvalidGroup", "table is not square");
    for (auto v : row)
      if (v >= n) throw Error("InvalidGroup", "entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error("InvalidGroup", "no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw Error("InvalidGroup", "not associative");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  for (auto v : inverse_)
    if (v == n) throw Error("InvalidGroup", "missing inverse");
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h) {
  const std::size_t m = h.size();
  const std::size_t n = g.size() * m;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::from_permutations(const std::vector<std::vector<std::size_t>>& generators) {
  if (generators.empty()) return cyclic(1);
  const std::size_t m = generators[0].size();
  using Perm = std::vector<std::size_t>;
  auto compose = [](const Perm& p, const Perm& q) {  // (p*q)(x) = p(q(x))
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
    return r;
  };
  Perm id(m);
  for (std::size_t x = 0; x < m; ++x) id[x] = x;
  std::vector<Perm> elems = {id};
  std::map<Perm, std::size_t> index = {{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      if (g.size() != m) throw Error("InvalidGroup", "permutations of different degrees");
      Perm p = compose(elems[head], g);
      if (index.emplace(p, elems.size()).second) elems.push_back(p);
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::symmetric3() { return from_permutations({{1, 0, 2}, {1, 2, 0}}); }

FiniteGroupTable FiniteGroupTable::dihedral4() { return from_permutations({{1, 2, 3, 0}, {3, 2, 1, 0}}); }

FiniteGroupTable FiniteGroupTable::quaternion8() {
  const QuatAlgebra alg(-1, -1);
  std::vector<QuatElement> elems;
  for (std::size_t pos = 0; pos < 4; ++pos)
    for (int sign : {1, -1}) {
      QuatElement e;
      e[pos] = sign;
      elems.push_back(e);
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      QuatElement p = alg.mul(elems[a], elems[b]);
      for (std::size_t c = 0; c < n; ++c)
        if (elems[c] == p) t[a][b] = c;
    }
  return FiniteGroupTable(std::move(t));
}

}  // namespace qmi
