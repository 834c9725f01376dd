#ifndef TEMPERED_BQF_HPP
#define TEMPERED_BQF_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "tempered/integer.hpp"
#include "tempered/matrix.hpp"
#include "tempered/rational.hpp"

namespace tempered {

/// Integral binary quadratic form a x^2 + b x y + c y^2.
///
/// Positive definiteness is checked by the operations that need it; primitivity
/// is a query, since restrictions to sublattices are often imprimitive.
struct Form {
    Int a = 0;
    Int b = 0;
    Int c = 0;

    friend bool operator==(const Form&, const Form&) = default;
    friend auto operator<=>(const Form&, const Form&) = default;
};

/// Change of basis for a form. The rows of `matrix` are the new basis vectors
/// written in the old coordinates, so the form matrix becomes M A M^T.
struct UnimodularMap {
    Mat2 matrix;

    UnimodularMap() = default;
    explicit UnimodularMap(const Mat2& m);

    Int det() const { return matrix.det(); }
    bool proper() const { return det() == 1; }

    /// Apply `first`, then `second`.
    static UnimodularMap then(const UnimodularMap& first, const UnimodularMap& second);
    UnimodularMap inverse() const;

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

/// p + q * sqrt(radicand), radicand < 0.
struct QuadSurd {
    Rational rational;
    Rational coefficient;
    Int radicand = 0;

    friend bool operator==(const QuadSurd&, const QuadSurd&) = default;
};

struct Reduction {
    Form form;
    UnimodularMap map;
};

Int discriminant(const Form& f);
bool is_positive_definite(const Form& f);
Int content(const Form& f);
bool is_primitive(const Form& f);

/// |b| <= a <= c, with b <= 0 when |b| = a or a = c.
bool is_reduced(const Form& f);

/// Gauss reduction. The returned map is proper and transform(f, map) == form.
Reduction reduce(const Form& f);

/// (c, -b, a): the dual form up to homothety.
Form dual(const Form& f);

Int evaluate(const Form& f, Int x, Int y);

/// Coprime (x, y) with f(x, y) = n, smallest by (|x|, |y|, x < 0, y < 0).
std::optional<Vec2> represents(const Form& f, Int n);

/// gamma = (b + sqrt(D)) / 2a, the second vector of the distinguished basis {1, gamma}.
QuadSurd distinguished_basis(const Form& f);

Form transform(const Form& f, const UnimodularMap& m);

/// Restriction of f to the lattice spanned by the rows of m (any nonsingular m).
Form restrict_to(const Form& f, const Mat2& m);

/// "(a,b,c)"
std::string to_string(const Form& f);
/// "a,b,c"
std::string to_csv(const Form& f);
/// Accepts "a,b,c" with optional surrounding parentheses.
Form parse_form(std::string_view text);

}  // namespace tempered

#endif
