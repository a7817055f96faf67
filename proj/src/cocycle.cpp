#include "qmi/cocycle.hpp"

#include <set>

#include "qmi/error.hpp"
#include "qmi/matrix.hpp"

namespace qmi {

bool verify_cocycle(const FiniteGroupTable& group, const UnitMatrix& values) {
  const std::size_t n = group.size();
  if (values.size() != n) return false;
  for (const auto& row : values)
    if (row.size() != n) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (values[b][c] * values[a][group.mul(b, c)] != values[a][b] * values[group.mul(a, b)][c]) return false;
      }
  return true;
}

Cocycle2::Cocycle2(FiniteGroupTable group, UnitMatrix values) : group_(std::move(group)), values_(std::move(values)) {
  if (!verify_cocycle(group_, values_)) throw Error("NotACocycle", "the 2-cocycle identity fails");
  const std::size_t e = group_.identity();
  const RationalUnit scale = values_[e][e].inverse();
  if (!scale.is_one())
    for (auto& row : values_)
      for (auto& v : row) v = v * scale;
}

Cocycle2 Cocycle2::trivial(const FiniteGroupTable& group) {
  return Cocycle2(group, UnitMatrix(group.size(), std::vector<RationalUnit>(group.size())));
}

Cocycle2 operator*(const Cocycle2& x, const Cocycle2& y) {
  if (!(x.group_ == y.group_)) throw Error("GroupMismatch", "cocycles over different groups");
  UnitMatrix v = x.values_;
  for (std::size_t s = 0; s < v.size(); ++s)
    for (std::size_t t = 0; t < v.size(); ++t) v[s][t] = v[s][t] * y.values_[s][t];
  return Cocycle2(x.group_, std::move(v));
}

Cocycle2 Cocycle2::inverse() const {
  UnitMatrix v = values_;
  for (auto& row : v)
    for (auto& u : row) u = u.inverse();
  return Cocycle2(group_, std::move(v));
}

Cocycle2 coboundary(const Cochain1& alpha) {
  const auto& g = alpha.group;
  const std::size_t n = g.size();
  if (alpha.values.size() != n) throw Error("SizeMismatch", "cochain length differs from the group order");
  UnitMatrix v(n, std::vector<RationalUnit>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) v[s][t] = alpha.values[s] * alpha.values[t] / alpha.values[g.mul(s, t)];
  return Cocycle2(g, std::move(v));
}

bool ObstructionReport::solvable() const {
  if (!sign_solvable) return false;
  for (const auto& p : primes)
    if (!p.solvable) return false;
  return true;
}

namespace {

// Solves x_s + x_t - x_st = rhs(s,t) over Z. Returns the solution or fills the obstruction.
std::optional<std::vector<Integer>> solve_prime(const FiniteGroupTable& g, const std::vector<Integer>& rhs,
                                                PrimeObstruction& report) {
  const std::size_t n = g.size();
  IntMatrix a(n * n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t row = s * n + t;
      a(row, s) += 1;
      a(row, t) += 1;
      a(row, g.mul(s, t)) -= 1;
    }
  SmithResult snf = smith_normal_form(a);
  std::vector<Integer> lb(n * n, 0);
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t k = 0; k < n * n; ++k) lb[r] += snf.left(r, k) * rhs[k];
  for (const auto& d : snf.diagonal)
    if (d != 0) report.elementary_divisors.push_back(d);
  std::vector<Integer> z(n, 0);
  for (std::size_t i = 0; i < n * n; ++i) {
    const Integer d = i < snf.diagonal.size() ? snf.diagonal[i] : Integer(0);
    const bool ok = d == 0 ? lb[i] == 0 : mpz_divisible_p(lb[i].get_mpz_t(), d.get_mpz_t()) != 0;
    if (!ok) {
      report.solvable = false;
      report.failing_index = i;
      report.modulus = d;
      report.residue = d == 0 ? lb[i] : Integer(lb[i] % d);
      if (report.residue < 0) report.residue += abs(d);
      return std::nullopt;
    }
    if (i < n && d != 0) z[i] = lb[i] / d;
  }
  std::vector<Integer> x(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) x[r] += snf.right(r, k) * z[k];
  return x;
}

// Solves x_s + x_t + x_st = bit(s,t) over F_2 by elimination, tracking row
// combinations so that an inconsistency comes with its witness.
std::optional<std::vector<int>> solve_signs(const FiniteGroupTable& g, const std::vector<int>& bits,
                                            std::vector<std::pair<std::size_t, std::size_t>>& witness) {
  const std::size_t n = g.size();
  const std::size_t m = n * n;
  std::vector<std::vector<char>> rows(m, std::vector<char>(n, 0));
  std::vector<std::vector<char>> combo(m, std::vector<char>(m, 0));
  std::vector<char> rhs(m);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t r = s * n + t;
      rows[r][s] ^= 1;
      rows[r][t] ^= 1;
      rows[r][g.mul(s, t)] ^= 1;
      combo[r][r] = 1;
      rhs[r] = static_cast<char>(bits[r] & 1);
    }
  std::vector<std::size_t> pivot_row_of(n, m);
  std::size_t next = 0;
  for (std::size_t col = 0; col < n && next < m; ++col) {
    std::size_t p = next;
    while (p < m && !rows[p][col]) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[next]);
    std::swap(combo[p], combo[next]);
    std::swap(rhs[p], rhs[next]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == next || !rows[r][col]) continue;
      for (std::size_t c = 0; c < n; ++c) rows[r][c] ^= rows[next][c];
      for (std::size_t c = 0; c < m; ++c) combo[r][c] ^= combo[next][c];
      rhs[r] ^= rhs[next];
    }
    pivot_row_of[col] = next++;
  }
  for (std::size_t r = next; r < m; ++r) {
    if (!rhs[r]) continue;
    for (std::size_t k = 0; k < m; ++k)
      if (combo[r][k]) witness.emplace_back(k / n, k % n);
    return std::nullopt;
  }
  std::vector<int> x(n, 0);
  for (std::size_t col = 0; col < n; ++col)
    if (pivot_row_of[col] < m) x[col] = rhs[pivot_row_of[col]];
  return x;
}

}  // namespace

SplitResult split_cocycle(const Cocycle2& c) {
  const auto& g = c.group();
  const std::size_t n = g.size();
  SplitResult out;
  std::set<Integer> primes;
  for (const auto& row : c.values())
    for (const auto& v : row)
      for (const auto& [p, e] : v.exponents()) primes.insert(p);

  std::vector<std::map<Integer, long>> exps(n);
  bool ok = true;
  for (const auto& p : primes) {
    std::vector<Integer> rhs(n * n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) rhs[s * n + t] = c(s, t).exponent(p);
    PrimeObstruction report;
    report.prime = p;
    auto x = solve_prime(g, rhs, report);
    out.report.primes.push_back(report);
    if (!x) {
      ok = false;
      continue;
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (!(*x)[s].fits_slong_p()) throw Error("Overflow", "exponent does not fit a machine integer");
      exps[s][p] = (*x)[s].get_si();
    }
  }

  std::vector<int> bits(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) bits[s * n + t] = c(s, t).sign() < 0 ? 1 : 0;
  auto signs = solve_signs(g, bits, out.report.sign_witness);
  out.report.sign_solvable = signs.has_value();
  if (!signs) ok = false;

  if (ok) {
    Cochain1 alpha{g, {}};
    for (std::size_t s = 0; s < n; ++s) alpha.values.emplace_back((*signs)[s] ? -1 : 1, exps[s]);
    out.alpha = std::move(alpha);
  }
  return out;
}

bool cohomology_class_equal(const Cocycle2& c1, const Cocycle2& c2) {
  return split_cocycle(c1 * c2.inverse()).alpha.has_value();
}

TwistedElement twisted_mult(const QuatAlgebra& alg, const FiniteGroupTable& group, const UnitMatrix& c,
                            const TwistedElement& lhs, const TwistedElement& rhs) {
  return {c[lhs.sigma][rhs.sigma].to_rational() * alg.mul(lhs.b, rhs.b), group.mul(lhs.sigma, rhs.sigma)};
}

bool psi_multiplicativity_check(const Cocycle2& c, const Cochain1& alpha) {
  const auto& g = c.group();
  const std::size_t n = g.size();
  if (alpha.values.size() != n) throw Error("SizeMismatch", "cochain length differs from the group order");
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (c(s, t) * alpha.values[g.mul(s, t)] != alpha.values[s] * alpha.values[t]) return false;
  return true;
}

bool is_character(const Cochain1& alpha) {
  const auto& g = alpha.group;
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t t = 0; t < g.size(); ++t)
      if (alpha.values[g.mul(s, t)] != alpha.values[s] * alpha.values[t]) return false;
  return true;
}

Cocycle2 sign_cocycle_z2() {
  UnitMatrix v(2, std::vector<RationalUnit>(2));
  v[1][1] = RationalUnit(-1, {});
  return Cocycle2(FiniteGroupTable::cyclic(2), std::move(v));
}

Cocycle2 quaternion_sign_cocycle() {
  const auto g = FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(2));
  const QuatAlgebra alg(-1, -1);
  const std::vector<QuatElement> lifts = {QuatElement(1, 0, 0, 0), QuatElement(0, 1, 0, 0), QuatElement(0, 0, 1, 0),
                                          QuatElement(0, 0, 0, 1)};
  UnitMatrix v(4, std::vector<RationalUnit>(4));
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t) {
      QuatElement prod = alg.mul(lifts[s], lifts[t]);
      const QuatElement& target = lifts[g.mul(s, t)];
      v[s][t] = RationalUnit(prod == target ? 1 : -1, {});
      if (prod != target && prod != -target) throw Error("InternalError", "quaternion lifts do not close up");
    }
  return Cocycle2(g, std::move(v));
}

}  // namespace qmi
