#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "tempered/integer.hpp"
#include "tempered/matrix.hpp"
#include "tempered/rational.hpp"

using namespace tempered;

TEST_CASE("gcd and extended gcd") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(-12, 18) == 6);
    CHECK(gcd(0, -7) == 7);
    CHECK(gcd(0, 0) == 0);
    for (Int a = -20; a <= 20; ++a)
        for (Int b = -20; b <= 20; ++b) {
            auto [g, x, y] = extended_gcd(a, b);
            CHECK(g == gcd(a, b));
            CHECK(a * x + b * y == g);
        }
}

TEST_CASE("floor, ceil and nonnegative mod") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(mod(-1155, 4) == 1);
    CHECK(mod(-1120, 4) == 0);
    CHECK(mod(13, 6) == 1);
}

TEST_CASE("integer square roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    const Int big = Int(3037000499) * Int(3037000499);
    CHECK(isqrt(big) == 3037000499);
    CHECK(isqrt(big - 1) == 3037000498);
    CHECK(is_square(1156));
    CHECK_FALSE(is_square(1155));
}

TEST_CASE("primes") {
    CHECK(primes_up_to(30) == std::vector<Int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(6437));  // 41 * 157
    CHECK(is_prime(7919));
    CHECK(prime_divisors(1155) == std::vector<Int>{3, 5, 7, 11});
    CHECK(prime_divisors(-1120) == std::vector<Int>{2, 5, 7});
    CHECK(primes_up_to(200).size() == 46);
}

TEST_CASE("integer text round trip") {
    for (Int v : {Int(0), Int(-1155), Int(6435), Int(1) << 100, -(Int(1) << 100)}) CHECK(parse_int(to_string(v)) == v);
    CHECK(parse_int("+17") == 17);
    CHECK_THROWS_AS(parse_int("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
    CHECK_THROWS_AS(to_i64(Int(1) << 70), std::overflow_error);
}

TEST_CASE("rationals stay canonical") {
    const Rational r(2, -4);
    CHECK(r.num() == -1);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(391, 19) * Rational(437, 17) == Rational(23 * 23));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational::parse("391/19") == Rational(391, 19));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK(Rational(6435, 2209).to_double() == doctest::Approx(2.91308).epsilon(1e-5));
}

TEST_CASE("2x2 matrices") {
    const Mat2 m{1, 5, 0, 11};
    CHECK(m.det() == 11);
    CHECK(m * m.adjugate() == Mat2{11, 0, 0, 11});
    CHECK(Vec2{1, 2} * Mat2{1, 2, 3, 4} == Vec2{7, 10});
    // The index-11 sublattice through 2 - w (brute-force oracle).
    CHECK(hermite_normal_form(Mat2{2, -1, -11, 0}) == Mat2{1, 5, 0, 11});
    CHECK(hermite_normal_form(Mat2{0, 1, 7, 0}) == Mat2{7, 0, 0, 1});
    CHECK(in_row_span(Vec2{2, -1}, m));
    CHECK_FALSE(in_row_span(Vec2{1, 0}, m));
    CHECK(to_string(m) == "[[1,5],[0,11]]");
}
