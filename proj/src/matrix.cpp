#include "tempered/matrix.hpp"

#include <stdexcept>

namespace tempered {

Mat2 hermite_normal_form(const Mat2& m) {
    if (m.det() == 0) throw std::invalid_argument("singular matrix has no full-rank HNF");
    // Bring the first column to (g, 0) with a unimodular row operation.
    auto [g, s, t] = extended_gcd(m.a, m.c);
    Vec2 top{s * m.a + t * m.c, s * m.b + t * m.d};
    Vec2 bottom{(m.a / g) * m.c - (m.c / g) * m.a, (m.a / g) * m.d - (m.c / g) * m.b};
    if (top.x < 0) top = -top;
    if (bottom.y < 0) bottom = -bottom;
    top.y = mod(top.y, bottom.y);
    return {top.x, top.y, 0, bottom.y};
}

bool in_row_span(const Vec2& v, const Mat2& m) {
    Int det = m.det();
    if (det == 0) throw std::invalid_argument("membership test against singular matrix");
    Vec2 w = v * m.adjugate();
    return w.x % det == 0 && w.y % det == 0;
}

std::string to_string(const Vec2& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }

std::string to_string(const Mat2& m) {
    return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) + "," + to_string(m.d) + "]]";
}

}  // namespace tempered
