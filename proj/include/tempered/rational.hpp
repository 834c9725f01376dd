#ifndef TEMPERED_RATIONAL_HPP
#define TEMPERED_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include "tempered/integer.hpp"

namespace tempered {

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(Int n) : num_(n) {}  // NOLINT: implicit by intent
    Rational(Int n, Int d);

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return ceil_div(num_, den_); }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n" when integral, otherwise "n/d".
    std::string str() const;
    static Rational parse(std::string_view text);

  private:
    Int num_ = 0;
    Int den_ = 1;
};

Rational abs(const Rational& r);

}  // namespace tempered

#endif
