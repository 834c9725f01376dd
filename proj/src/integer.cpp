#include "tempered/integer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tempered {

Int gcd(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

Int floor_div(Int a, Int b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int mod(Int a, Int m) {
    m = abs(m);
    if (m == 0) throw std::domain_error("modulus zero");
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int isqrt(Int n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n < 2) return n;
    Int x = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool is_square(Int n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<Int> primes_up_to(Int n) {
    std::vector<Int> out;
    if (n < 2) return out;
    auto limit = static_cast<std::size_t>(n);
    std::vector<bool> composite(limit + 1, false);
    for (std::size_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<Int>(i));
        for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::vector<Int> prime_divisors(Int n) {
    n = abs(n);
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string to_string(Int v) {
    if (v == 0) return "0";
    bool negative = v < 0;
    // Work with negative values so INT128_MIN is representable.
    if (!negative) v = -v;
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t end = text.size();
    while (end > pos && text[end - 1] == ' ') --end;
    if (pos == end) throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    Int v = 0;
    for (std::size_t i = pos; i < end; ++i) {
        char ch = text[i];
        if (ch < '0' || ch > '9') throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
        if (v > (std::numeric_limits<Int>::max() - 9) / 10) throw std::overflow_error("integer too large");
        v = v * 10 + (ch - '0');
    }
    return negative ? -v : v;
}

std::int64_t to_i64(Int v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value does not fit in 64 bits: " + to_string(v));
    return static_cast<std::int64_t>(v);
}

}  // namespace tempered
