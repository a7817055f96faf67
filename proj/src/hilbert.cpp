#include "qmi/hilbert.hpp"

#include <algorithm>
#include <set>

#include "qmi/error.hpp"

namespace qmi {

namespace {

int legendre(const Integer& u, const Integer& p) { return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()); }

// (u mod 8) for odd u, in {1,3,5,7}.
unsigned long mod8(const Integer& u) { return static_cast<unsigned long>(mod_floor(u, 8)); }

int hilbert_odd(const Integer& a, const Integer& b, const Integer& p) {
  long alpha = valuation(a, p), beta = valuation(b, p);
  Integer u = a, v = b;
  for (long t = 0; t < alpha; ++t) u /= p;
  for (long t = 0; t < beta; ++t) v /= p;
  int s = 1;
  // (-1)^(alpha*beta*(p-1)/2)
  if ((alpha * beta) % 2 == 1 && mod_floor(p, 4) == 3) s = -s;
  if (beta % 2 == 1) s *= legendre(u, p);
  if (alpha % 2 == 1) s *= legendre(v, p);
  return s;
}

int hilbert_two(const Integer& a, const Integer& b) {
  long alpha = valuation(a, 2), beta = valuation(b, 2);
  Integer u = a, v = b;
  for (long t = 0; t < alpha; ++t) u /= 2;
  for (long t = 0; t < beta; ++t) v /= 2;
  auto eps = [](unsigned long r) { return ((r - 1) / 2) % 2; };
  auto omega = [](unsigned long r) { return ((r * r - 1) / 8) % 2; };
  unsigned long ur = mod8(u), vr = mod8(v);
  unsigned long e = eps(ur) * eps(vr) + static_cast<unsigned long>(alpha % 2) * omega(vr) +
                    static_cast<unsigned long>(beta % 2) * omega(ur);
  return e % 2 == 0 ? 1 : -1;
}

}  // namespace

Place Place::at(Integer p) {
  if (!is_prime(p)) throw Error("InvalidPlace", to_string(p) + " is not prime");
  return {false, std::move(p)};
}

std::string Place::label() const { return infinite ? "inf" : to_string(prime); }

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw Error("InvalidArgument", "Hilbert symbol of zero");
  if (place.infinite) return (a < 0 && b < 0) ? -1 : 1;
  Integer sa = squarefree_part(a), sb = squarefree_part(b);
  if (place.prime == 2) return hilbert_two(sa, sb);
  return hilbert_odd(sa, sb, place.prime);
}

std::vector<Integer> candidate_primes(const Rational& a, const Rational& b) {
  std::set<Integer> primes{Integer(2)};
  for (const Integer& n : {Integer(a.get_num()), Integer(a.get_den()), Integer(b.get_num()), Integer(b.get_den())}) {
    if (abs(n) <= 1) continue;
    for (const auto& pe : factor(n)) primes.insert(pe.first);
  }
  return {primes.begin(), primes.end()};
}

AlgebraDiscriminant algebra_discriminant(const QuatAlgebra& alg) {
  AlgebraDiscriminant out;
  out.disc = 1;
  for (const Integer& p : candidate_primes(alg.a(), alg.b())) {
    Place v{false, p};
    if (hilbert_symbol(alg.a(), alg.b(), v) == -1) {
      out.disc *= p;
      out.ramified.push_back(v);
    }
  }
  out.definite = alg.a() < 0 && alg.b() < 0;
  if (out.definite) out.ramified.push_back(Place::infinity());
  return out;
}

}  // namespace qmi
