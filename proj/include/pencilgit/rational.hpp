#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace pencilgit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

Int gcd_int(Int a, Int b);
Int mod_floor(const Int& a, const Int& m);

// inverse of a mod m (m > 1, gcd(a, m) = 1)
Int mod_inverse(const Int& a, const Int& m);

bool is_prime(std::int64_t n);

// exact integer square root if n is a perfect square
std::optional<Int> perfect_sqrt(const Int& n);

// exact rational square root (canonical: non-negative)
std::optional<Rat> rational_sqrt(const Rat& r);

std::string rat_str(const Rat& r);
std::optional<Rat> parse_rat(const std::string& text);

} // namespace pencilgit
