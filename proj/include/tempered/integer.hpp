#ifndef TEMPERED_INTEGER_HPP
#define TEMPERED_INTEGER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace tempered {

// Compositions and scans at ell ~ 10^3 overflow 64 bits in intermediates.
using Int = __int128;

inline Int abs(Int a) { return a < 0 ? -a : a; }

Int gcd(Int a, Int b);

/// Returns (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g.
std::tuple<Int, Int, Int> extended_gcd(Int a, Int b);

/// Floor division, b != 0.
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

/// Least nonnegative residue of a modulo |m|.
Int mod(Int a, Int m);

/// Floor of the square root of n >= 0.
Int isqrt(Int n);
bool is_square(Int n);

bool is_prime(Int n);
std::vector<Int> primes_up_to(Int n);

/// Distinct prime divisors of |n|, ascending.
std::vector<Int> prime_divisors(Int n);

std::string to_string(Int v);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Int parse_int(std::string_view text);

/// Narrows to int64_t; throws std::overflow_error when out of range.
std::int64_t to_i64(Int v);

}  // namespace tempered

#endif
