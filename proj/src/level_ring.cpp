#include "qmi/level_ring.hpp"

#include <cstdlib>
#include <optional>
#include <thread>

#include "qmi/error.hpp"

namespace qmi {

namespace {

std::array<Integer, 4> coords_in(const RatMatrix& basis_inverse, const QuatElement& x, const char* what) {
  std::array<Integer, 4> out;
  for (std::size_t c = 0; c < 4; ++c) {
    Rational v = 0;
    for (std::size_t k = 0; k < 4; ++k) v += x[k] * basis_inverse(k, c);
    if (v.get_den() != 1) throw Error("NotInOrder", to_string(x) + " is not in the " + what);
    out[c] = v.get_num();
  }
  return out;
}

RatMatrix rows_matrix(const std::array<QuatElement, 4>& rows) {
  RatMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  return m;
}

std::int64_t residue(const Rational& x, std::int64_t n) {
  if (x.get_den() != 1) throw Error("NotIntegral", to_string(x) + " is not an integer");
  return mod_floor(x.get_num(), n);
}

// Inverse of a 4x4 matrix mod n, via the integer adjugate.
std::optional<FunctionalQuadruple> inverse_mod_matrix(const FunctionalQuadruple& m, std::int64_t n) {
  IntMatrix a(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) a(r, c) = m[r][c];
  auto det_inv = inverse_mod(mod_floor(determinant(a), n), n);
  if (!det_inv) return std::nullopt;
  FunctionalQuadruple out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      // adj(a)(r, c) = (-1)^(r+c) * minor(c, r)
      IntMatrix minor(3, 3);
      for (std::size_t i = 0, mi = 0; i < 4; ++i) {
        if (i == c) continue;
        for (std::size_t j = 0, mj = 0; j < 4; ++j) {
          if (j == r) continue;
          minor(mi, mj++) = a(i, j);
        }
        ++mi;
      }
      Integer cof = determinant(minor);
      if ((r + c) % 2 == 1) cof = -cof;
      out[r][c] = mul_mod(mod_floor(cof, n), *det_inv, n);
    }
  return out;
}

}  // namespace

LevelRing::LevelRing(Order order, std::int64_t level) : order_(std::move(order)), n_(level) {
  if (level < 1 || level > (1 << 20)) throw Error("InvalidLevel", "level must lie in [1, 2^20]");
  const auto& alg = order_.algebra();
  const auto& e = order_.basis();
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t s = 0; s < 4; ++s) {
      auto prod = order_.coordinates(alg.mul(e[r], e[s]));
      for (std::size_t t = 0; t < 4; ++t) mul_[r][s][t] = mod_floor(prod[t], n_);
    }
    auto cj = order_.coordinates(conjugate(e[r]));
    for (std::size_t t = 0; t < 4; ++t) conj_[r][t] = mod_floor(cj[t], n_);
    trd_[r] = residue(reduced_trace(e[r]), n_);
    nrd_[r][r] = residue(alg.norm(e[r]), n_);
    for (std::size_t s = r + 1; s < 4; ++s) nrd_[r][s] = residue(alg.trace_form(e[r], e[s]), n_);
  }

  Lattice4 dual = sharp_dual(order_.lattice(), alg);
  dual_basis_ = dual == order_.lattice() ? e : dual.basis();
  RatMatrix dual_inv = *inverse(rows_matrix(dual_basis_));
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t r = 0; r < 4; ++r) {
      auto prod = coords_in(dual_inv, alg.mul(dual_basis_[s], e[r]), "dual lattice");
      for (std::size_t t = 0; t < 4; ++t) dual_mul_[s][r][t] = mod_floor(prod[t], n_);
    }
  for (std::size_t r = 0; r < 4; ++r) {
    auto c = coords_in(dual_inv, e[r], "dual lattice");
    for (std::size_t t = 0; t < 4; ++t) embed_[r][t] = mod_floor(c[t], n_);
    for (std::size_t s = 0; s < 4; ++s) pairing_[r][s] = residue(alg.trace_form(e[r], dual_basis_[s]), n_);
  }
}

void LevelRing::check(const TorsionPoint& x) const {
  if (x.level != n_)
    throw Error("LevelMismatch", "point of level " + std::to_string(x.level) + " used at level " + std::to_string(n_));
}

TorsionPoint LevelRing::point(std::array<std::int64_t, 4> coords) const {
  TorsionPoint p{n_, {}};
  for (std::size_t i = 0; i < 4; ++i) p.c[i] = mod_floor(coords[i], n_);
  return p;
}

TorsionPoint LevelRing::reduce(const QuatElement& x) const {
  auto c = order_.coordinates(x);
  TorsionPoint p{n_, {}};
  for (std::size_t i = 0; i < 4; ++i) p.c[i] = mod_floor(c[i], n_);
  return p;
}

QuatElement LevelRing::lift(const TorsionPoint& x) const {
  check(x);
  QuatElement out;
  for (std::size_t r = 0; r < 4; ++r) out = out + Rational(static_cast<long>(x.c[r])) * order_.basis()[r];
  return out;
}

std::int64_t LevelRing::encode(const TorsionPoint& x) const {
  check(x);
  return ((x.c[0] * n_ + x.c[1]) * n_ + x.c[2]) * n_ + x.c[3];
}

TorsionPoint LevelRing::decode(std::int64_t index) const {
  TorsionPoint p{n_, {}};
  for (std::size_t i = 4; i-- > 0;) {
    p.c[i] = index % n_;
    index /= n_;
  }
  return p;
}

TorsionPoint LevelRing::add(const TorsionPoint& x, const TorsionPoint& y) const {
  check(x);
  check(y);
  TorsionPoint p{n_, {}};
  for (std::size_t i = 0; i < 4; ++i) p.c[i] = (x.c[i] + y.c[i]) % n_;
  return p;
}

TorsionPoint LevelRing::sub(const TorsionPoint& x, const TorsionPoint& y) const { return add(x, neg(y)); }

TorsionPoint LevelRing::neg(const TorsionPoint& x) const {
  check(x);
  TorsionPoint p{n_, {}};
  for (std::size_t i = 0; i < 4; ++i) p.c[i] = (n_ - x.c[i]) % n_;
  return p;
}

TorsionPoint LevelRing::mul(const TorsionPoint& x, const TorsionPoint& y) const {
  check(x);
  check(y);
  std::array<std::int64_t, 4> acc{};
  for (std::size_t r = 0; r < 4; ++r) {
    if (x.c[r] == 0) continue;
    for (std::size_t s = 0; s < 4; ++s) {
      if (y.c[s] == 0) continue;
      const std::int64_t xy = x.c[r] * y.c[s] % n_;
      for (std::size_t t = 0; t < 4; ++t) acc[t] = (acc[t] + xy * mul_[r][s][t]) % n_;
    }
  }
  return TorsionPoint{n_, acc};
}

TorsionPoint LevelRing::scale(std::int64_t s, const TorsionPoint& x) const {
  check(x);
  const std::int64_t sm = mod_floor(s, n_);
  TorsionPoint p{n_, {}};
  for (std::size_t i = 0; i < 4; ++i) p.c[i] = sm * x.c[i] % n_;
  return p;
}

TorsionPoint LevelRing::conj(const TorsionPoint& x) const {
  check(x);
  std::array<std::int64_t, 4> acc{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t t = 0; t < 4; ++t) acc[t] = (acc[t] + x.c[r] * conj_[r][t]) % n_;
  return TorsionPoint{n_, acc};
}

std::int64_t LevelRing::nrd(const TorsionPoint& x) const {
  check(x);
  std::int64_t acc = 0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = r; s < 4; ++s) acc = (acc + x.c[r] * x.c[s] % n_ * nrd_[r][s]) % n_;
  return acc;
}

std::int64_t LevelRing::trd(const TorsionPoint& x) const {
  check(x);
  std::int64_t acc = 0;
  for (std::size_t r = 0; r < 4; ++r) acc = (acc + x.c[r] * trd_[r]) % n_;
  return acc;
}

bool LevelRing::is_unit(const TorsionPoint& x) const { return is_unit_mod(nrd(x), n_); }

TorsionPoint LevelRing::unit_inverse(const TorsionPoint& x) const {
  auto inv = inverse_mod(nrd(x), n_);
  if (!inv) throw Error("NotAUnit", "reduced norm is not invertible mod " + std::to_string(n_));
  return scale(*inv, conj(x));
}

bool LevelRing::is_central(const TorsionPoint& x) const {
  for (std::size_t r = 0; r < 4; ++r) {
    TorsionPoint e{n_, {}};
    e.c[r] = 1 % n_;
    if (mul(x, e) != mul(e, x)) return false;
  }
  return true;
}

TorsionPoint LevelRing::reduce_dual(const QuatElement& y) const {
  RatMatrix inv = *inverse(rows_matrix(dual_basis_));
  auto c = coords_in(inv, y, "dual lattice");
  TorsionPoint p{n_, {}};
  for (std::size_t i = 0; i < 4; ++i) p.c[i] = mod_floor(c[i], n_);
  return p;
}

TorsionPoint LevelRing::dual_mul(const TorsionPoint& y, const TorsionPoint& g) const {
  check(y);
  check(g);
  std::array<std::int64_t, 4> acc{};
  for (std::size_t s = 0; s < 4; ++s) {
    if (y.c[s] == 0) continue;
    for (std::size_t r = 0; r < 4; ++r) {
      if (g.c[r] == 0) continue;
      const std::int64_t yg = y.c[s] * g.c[r] % n_;
      for (std::size_t t = 0; t < 4; ++t) acc[t] = (acc[t] + yg * dual_mul_[s][r][t]) % n_;
    }
  }
  return TorsionPoint{n_, acc};
}

TorsionPoint LevelRing::to_dual(const TorsionPoint& x) const {
  check(x);
  std::array<std::int64_t, 4> acc{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t t = 0; t < 4; ++t) acc[t] = (acc[t] + x.c[r] * embed_[r][t]) % n_;
  return TorsionPoint{n_, acc};
}

std::int64_t LevelRing::weil_pairing(const TorsionPoint& x, const TorsionPoint& y) const {
  check(x);
  check(y);
  std::int64_t acc = 0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 4; ++s) acc = (acc + x.c[r] * y.c[s] % n_ * pairing_[r][s]) % n_;
  return acc;
}

bool LevelRing::pairing_norm_equivariance(const TorsionPoint& x, const TorsionPoint& y, const TorsionPoint& g) const {
  const std::int64_t lhs = weil_pairing(mul(x, g), dual_mul(y, g));
  return lhs == mul_mod(nrd(g), weil_pairing(x, y), n_);
}

unsigned worker_threads() {
  if (const char* env = std::getenv("QMI_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<TorsionPoint> enumerate_units(const LevelRing& ring, std::int64_t max_level) {
  if (ring.level() > max_level)
    throw Error("LevelTooLarge",
                "level " + std::to_string(ring.level()) + " exceeds the bound " + std::to_string(max_level));
  const std::int64_t total = ring.size();
  const unsigned threads = total < 4096 ? 1 : std::min<unsigned>(worker_threads(), 16);
  std::vector<std::vector<TorsionPoint>> parts(threads);
  auto scan = [&](unsigned t) {
    const std::int64_t lo = total * t / threads;
    const std::int64_t hi = total * (t + 1) / threads;
    for (std::int64_t i = lo; i < hi; ++i) {
      TorsionPoint p = ring.decode(i);
      if (ring.is_unit(p)) parts[t].push_back(p);
    }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(scan, t);
    for (auto& th : pool) th.join();
  }
  std::vector<TorsionPoint> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::array<std::int64_t, 4> apply_functionals(const LevelRing& ring, const FunctionalQuadruple& phi,
                                              const TorsionPoint& p) {
  const std::int64_t n = ring.level();
  std::array<std::int64_t, 4> out{};
  for (std::size_t r = 0; r < 4; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < 4; ++c) acc = (acc + mod_floor(phi[r][c], n) * p.c[c]) % n;
    out[r] = acc;
  }
  return out;
}

BasisLemmaResult basis_from_functionals(const LevelRing& ring, const FunctionalQuadruple& phi) {
  const std::int64_t n = ring.level();
  auto phi_inv = inverse_mod_matrix(phi, n);
  if (!phi_inv) throw Error("SingularFunctionals", "the functional matrix is not invertible mod " + std::to_string(n));
  auto as_point = [&](const std::array<std::int64_t, 4>& v) { return ring.point(v); };
  auto column = [&](const FunctionalQuadruple& m, std::size_t j) {
    return as_point({m[0][j], m[1][j], m[2][j], m[3][j]});
  };
  // psi(Q) = point with coordinates phi(Q) must satisfy psi(o Q) = o psi(Q).
  for (std::size_t r = 0; r < 4; ++r) {
    TorsionPoint er = ring.point({r == 0, r == 1, r == 2, r == 3});
    for (std::size_t s = 0; s < 4; ++s) {
      TorsionPoint es = ring.point({s == 0, s == 1, s == 2, s == 3});
      TorsionPoint lhs = as_point(apply_functionals(ring, phi, ring.mul(er, es)));
      TorsionPoint rhs = ring.mul(er, as_point(apply_functionals(ring, phi, es)));
      if (lhs != rhs) throw Error("NotEquivariant", "the functionals do not define a map of left O-modules");
    }
  }
  BasisLemmaResult out;
  out.p = column(*phi_inv, 0);
  if (!ring.is_unit(out.p)) throw Error("NotEquivariant", "phi^-1(1) is not a unit");
  const TorsionPoint p_inv = ring.unit_inverse(out.p);
  for (std::size_t j = 0; j < 4; ++j) out.e[j] = ring.mul(column(*phi_inv, j), p_inv);
  return out;
}

bool reconstruction_identity(const LevelRing& ring, const FunctionalQuadruple& phi, const BasisLemmaResult& basis) {
  const std::int64_t total = ring.size();
  auto psi = [&](const TorsionPoint& p) {
    auto v = apply_functionals(ring, phi, p);
    TorsionPoint acc = ring.zero();
    for (std::size_t i = 0; i < 4; ++i) acc = ring.add(acc, ring.scale(v[i], basis.e[i]));
    return acc;
  };
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  for (std::int64_t i = 0; i < total; ++i) {
    TorsionPoint p = ring.decode(i);
    TorsionPoint image = psi(p);
    auto& flag = seen[static_cast<std::size_t>(ring.encode(image))];
    if (flag) return false;
    flag = 1;
    for (std::size_t r = 0; r < 4; ++r) {
      TorsionPoint er = ring.point({r == 0, r == 1, r == 2, r == 3});
      if (psi(ring.mul(er, p)) != ring.mul(er, image)) return false;
    }
  }
  return true;
}

FunctionalQuadruple twisted_functionals(const LevelRing& ring, const TorsionPoint& g) {
  FunctionalQuadruple phi{};
  for (std::size_t c = 0; c < 4; ++c) {
    TorsionPoint ec = ring.point({c == 0, c == 1, c == 2, c == 3});
    TorsionPoint img = ring.mul(ec, g);
    for (std::size_t r = 0; r < 4; ++r) phi[r][c] = img.c[r];
  }
  return phi;
}

}  // namespace qmi
