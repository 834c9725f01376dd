#ifndef TEMPERED_MATRIX_HPP
#define TEMPERED_MATRIX_HPP

#include <compare>
#include <string>

#include "tempered/integer.hpp"

namespace tempered {

/// Row vector of integer coordinates.
struct Vec2 {
    Int x = 0;
    Int y = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
    Vec2 operator-() const { return {-x, -y}; }
};

/// 2x2 integer matrix acting on row vectors; rows are (a, b) and (c, d).
struct Mat2 {
    Int a = 1, b = 0, c = 0, d = 1;

    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend auto operator<=>(const Mat2&, const Mat2&) = default;

    static Mat2 identity() { return {}; }
    static Mat2 from_rows(Vec2 r1, Vec2 r2) { return {r1.x, r1.y, r2.x, r2.y}; }

    Int det() const { return a * d - b * c; }
    Mat2 transpose() const { return {a, c, b, d}; }
    /// Adjugate: this * adjugate() = det() * identity.
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    Vec2 row1() const { return {a, b}; }
    Vec2 row2() const { return {c, d}; }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
};

/// Row vector times matrix.
inline Vec2 operator*(const Vec2& v, const Mat2& m) { return {v.x * m.a + v.y * m.c, v.x * m.b + v.y * m.d}; }

/// Row-style Hermite normal form [[a, b], [0, d]] with a, d > 0 and 0 <= b < d.
/// Requires det != 0.
Mat2 hermite_normal_form(const Mat2& m);

/// True when v lies in the row span of m (det m != 0).
bool in_row_span(const Vec2& v, const Mat2& m);

std::string to_string(const Vec2& v);
std::string to_string(const Mat2& m);

}  // namespace tempered

#endif
