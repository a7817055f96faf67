#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmi {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "n" or "n/d" (optional leading '-'); throws Error("ParseError").
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// "n/d", with "/d" omitted when d == 1.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

bool is_perfect_square(const Integer& n);
// Throws Error("NotASquare") unless n is a nonnegative perfect square.
Integer exact_sqrt(const Integer& n);

bool is_prime(const Integer& n);

// Prime factorisation of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

// Signed squarefree integer in the same square class as x (x != 0).
Integer squarefree_part(const Rational& x);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
long valuation(const Integer& n, const Integer& p);

// Residue arithmetic for small moduli.
std::int64_t mod_floor(std::int64_t x, std::int64_t n);
std::int64_t mod_floor(const Integer& x, std::int64_t n);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n);
bool is_unit_mod(std::int64_t a, std::int64_t n);

// Image of x in Z/n; nullopt when the denominator is not coprime to n.
std::optional<std::int64_t> reduce_mod(const Rational& x, std::int64_t n);

}  // namespace qmi
