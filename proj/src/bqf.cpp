#include "tempered/bqf.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tempered {

UnimodularMap::UnimodularMap(const Mat2& m) : matrix(m) {
    Int d = m.det();
    if (d != 1 && d != -1) throw std::invalid_argument("unimodular map needs determinant +-1, got " + to_string(m));
}

UnimodularMap UnimodularMap::then(const UnimodularMap& first, const UnimodularMap& second) {
    // A1 = m1 A m1^T, A2 = m2 A1 m2^T = (m2 m1) A (m2 m1)^T.
    return UnimodularMap(second.matrix * first.matrix);
}

UnimodularMap UnimodularMap::inverse() const {
    Mat2 adj = matrix.adjugate();
    if (det() == -1) adj = {-adj.a, -adj.b, -adj.c, -adj.d};
    return UnimodularMap(adj);
}

Int discriminant(const Form& f) { return f.b * f.b - 4 * f.a * f.c; }

bool is_positive_definite(const Form& f) { return f.a > 0 && f.c > 0 && discriminant(f) < 0; }

Int content(const Form& f) { return gcd(gcd(f.a, f.b), f.c); }

bool is_primitive(const Form& f) { return content(f) == 1; }

bool is_reduced(const Form& f) {
    if (abs(f.b) > f.a || f.a > f.c) return false;
    if ((abs(f.b) == f.a || f.a == f.c) && f.b > 0) return false;
    return true;
}

Form transform(const Form& f, const UnimodularMap& m) { return restrict_to(f, m.matrix); }

Form restrict_to(const Form& f, const Mat2& m) {
    const Int p = m.a, q = m.b, r = m.c, s = m.d;
    return {evaluate(f, p, q), 2 * f.a * p * r + f.b * (p * s + q * r) + 2 * f.c * q * s, evaluate(f, r, s)};
}

Reduction reduce(const Form& f) {
    if (!is_positive_definite(f)) throw std::invalid_argument("reduce: form " + to_string(f) + " is not positive definite");
    Form g = f;
    Mat2 acc = Mat2::identity();
    auto apply = [&](const Mat2& step) {
        g = restrict_to(g, step);
        acc = step * acc;
    };
    const Mat2 swap{0, 1, -1, 0};  // (a, b, c) -> (c, -b, a)
    for (;;) {
        // Translate x -> x + k y so that -a <= b < a.
        Int k = -floor_div(g.b + g.a, 2 * g.a);
        if (k != 0) apply({1, 0, k, 1});
        if (g.a > g.c) {
            apply(swap);
            continue;
        }
        if (g.a == g.c && g.b > 0) apply(swap);
        break;
    }
    return {g, UnimodularMap(acc)};
}

Form dual(const Form& f) { return {f.c, -f.b, f.a}; }

Int evaluate(const Form& f, Int x, Int y) { return f.a * x * x + f.b * x * y + f.c * y * y; }

std::optional<Vec2> represents(const Form& f, Int n) {
    if (!is_positive_definite(f)) throw std::invalid_argument("represents: form " + to_string(f) + " is not positive definite");
    if (n <= 0) return std::nullopt;
    const Int abs_d = -discriminant(f);
    // 4a f(x,y) = (2ax + by)^2 + |D| y^2, and symmetrically for x.
    const Int x_max = isqrt(floor_div(4 * f.c * n, abs_d));
    const Int y_max = isqrt(floor_div(4 * f.a * n, abs_d));
    for (Int ax = 0; ax <= x_max; ++ax) {
        for (Int ay = 0; ay <= y_max; ++ay) {
            if (gcd(ax, ay) != 1) continue;
            for (Int sx : {1, -1}) {
                for (Int sy : {1, -1}) {
                    if (evaluate(f, sx * ax, sy * ay) == n) return Vec2{sx * ax, sy * ay};
                }
            }
        }
    }
    return std::nullopt;
}

QuadSurd distinguished_basis(const Form& f) {
    if (!is_positive_definite(f)) throw std::invalid_argument("distinguished_basis: form is not positive definite");
    return {Rational(f.b, 2 * f.a), Rational(1, 2 * f.a), discriminant(f)};
}

std::string to_string(const Form& f) { return "(" + to_csv(f) + ")"; }

std::string to_csv(const Form& f) { return to_string(f.a) + "," + to_string(f.b) + "," + to_string(f.c); }

Form parse_form(std::string_view text) {
    if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    std::vector<Int> parts;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        parts.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) throw std::invalid_argument("form needs three coefficients a,b,c");
    return {parts[0], parts[1], parts[2]};
}

}  // namespace tempered
