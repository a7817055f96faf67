#include "qmi/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "qmi/error.hpp"

namespace qmi {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long seed = 1;; ++seed) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) {
      Integer r = (v * v + seed) % n;
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("ParseError", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw Error("ParseError", "not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw Error("ParseError", "bad denominator in '" + std::string(text) + "'");
  return make_rational(num, Integer(std::string(den_text), 10));
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer exact_sqrt(const Integer& n) {
  if (!is_perfect_square(n)) throw Error("NotASquare", to_string(n) + " is not a perfect square");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_prime(const Integer& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
  if (n == 0) throw Error("InvalidArgument", "cannot factor zero");
  Integer m = abs(n);
  std::map<Integer, unsigned> acc;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      ++acc[Integer(p)];
      m /= p;
    }
  }
  for (unsigned long p = 17; p < 10000 && m > 1; p += 2) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      ++acc[Integer(p)];
      m /= p;
    }
  }
  factor_into(m, acc);
  return {acc.begin(), acc.end()};
}

Integer squarefree_part(const Rational& x) {
  if (x == 0) throw Error("InvalidArgument", "zero has no square class");
  // x and num*den differ by the square den^2.
  Integer m = x.get_num() * x.get_den();
  Integer out = m < 0 ? -1 : 1;
  for (const auto& [p, e] : factor(m)) {
    if (e % 2 == 1) out *= p;
  }
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw Error("InvalidArgument", "valuation of zero");
  long v = 0;
  Integer m = n;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
    m /= p;
    ++v;
  }
  return v;
}

std::int64_t mod_floor(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t mod_floor(const Integer& x, std::int64_t n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), Integer(n).get_mpz_t());
  return r.get_si();
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = mod_floor(a, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, n);
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod_floor(a, n)) * mod_floor(b, n) % n);
}

bool is_unit_mod(std::int64_t a, std::int64_t n) { return inverse_mod(a, n).has_value(); }

std::optional<std::int64_t> reduce_mod(const Rational& x, std::int64_t n) {
  auto inv = inverse_mod(mod_floor(x.get_den(), n), n);
  if (!inv) return std::nullopt;
  return mul_mod(mod_floor(x.get_num(), n), *inv, n);
}

}  // namespace qmi
