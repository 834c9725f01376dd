#ifndef TEMPERED_VERIFIER_HPP
#define TEMPERED_VERIFIER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tempered/bqf.hpp"
#include "tempered/eisenstein.hpp"
#include "tempered/matrix.hpp"
#include "tempered/rational.hpp"

namespace tempered {

/// Symmetric rational Gram matrix [[g11, g12], [g12, g22]].
struct Gram {
    Rational g11;
    Rational g12;
    Rational g22;

    static Gram from_form(const Form& f) { return {Rational(f.a), Rational(f.b, 2), Rational(f.c)}; }
    static Gram hexagonal() { return {Rational(1), Rational(-1, 2), Rational(1)}; }
    static Gram square() { return {Rational(1), Rational(0), Rational(1)}; }

    Rational det() const { return g11 * g22 - g12 * g12; }
    bool positive_definite() const { return g11 > 0 && det() > 0; }
    Rational value(const Vec2& v) const;
    Rational inner(const Vec2& v, const Vec2& w) const;
    /// Gram of the lattice spanned by the rows of m: m G m^T.
    Gram restrict_to(const Mat2& m) const;
    Gram scaled(const Rational& k) const { return {g11 * k, g12 * k, g22 * k}; }
    /// (g11, 2 g12, g22) when that is integral.
    std::optional<Form> as_form() const;

    friend bool operator==(const Gram&, const Gram&) = default;
};

/// All v != 0 with value(v) <= bound, one per +-pair (first nonzero coordinate
/// positive), sorted by (value, x, y).
std::vector<Vec2> short_vectors(const Gram& g, const Rational& bound);

/// Canonical sign of a +-pair: x > 0, or x == 0 and y > 0.
Vec2 canonical_sign(const Vec2& v);

/// A lattice L0 = Z^2 with Gram G and an index-ell sublattice M0 spanned by the
/// rows of `sub`.
struct PairLattice {
    Gram gram;
    Mat2 sub;
    Int ell = 0;

    /// Throws std::invalid_argument when G is degenerate or |det sub| != ell.
    void validate() const;
    bool in_sublattice(const Vec2& v) const { return in_row_span(v, sub); }
};

struct Classification {
    bool tempered = false;
    int s = 0;
    int s_prime = 0;
    Rational min_outside;  // minimum over L0 - M0
    Rational min_inside;   // minimum over M0 - {0}
    Rational tau2;         // min_inside / min_outside
    std::vector<Vec2> S;
    std::vector<Vec2> S_prime;
};

Classification classify(const PairLattice& p);

struct RationalitySolution {
    Rational a, b, c, u;
    bool unique = false;
};

/// Solves x^2 a + xy b + y^2 c = 1 over S and x^2 a + xy b + y^2 c - u = 0 over S'.
/// Empty when the system is inconsistent.
std::optional<RationalitySolution> solve_rationality(std::span<const Vec2> S, std::span<const Vec2> S_prime);

/// The pair (M*, L*), Gram adj(H G H^T) and sublattice H^T.
PairLattice dualize(const PairLattice& p);

struct OracleEntry {
    EisSublattice sublattice;
    Classification classification;
};

/// Classification of every index-ell sublattice of the hexagonal lattice.
std::vector<OracleEntry> oracle_eisenstein(Int ell);

std::string to_string(const Gram& g);

}  // namespace tempered

#endif
