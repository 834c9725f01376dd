#ifndef TEMPERED_EISENSTEIN_HPP
#define TEMPERED_EISENSTEIN_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tempered/integer.hpp"
#include "tempered/matrix.hpp"
#include "tempered/rational.hpp"

namespace tempered {

/// x + y w in Z[w], w = exp(2 pi i / 3).
struct EisInt {
    Int x = 0;
    Int y = 0;

    friend bool operator==(const EisInt&, const EisInt&) = default;
    friend auto operator<=>(const EisInt&, const EisInt&) = default;

    Vec2 coords() const { return {x, y}; }
    static EisInt from(const Vec2& v) { return {v.x, v.y}; }
    bool primitive() const { return gcd(x, y) == 1; }
};

Int norm(const EisInt& v);
EisInt operator*(const EisInt& u, const EisInt& v);
EisInt operator+(const EisInt& u, const EisInt& v);
EisInt operator-(const EisInt& u, const EisInt& v);
EisInt conj(const EisInt& v);
EisInt times_omega(const EisInt& v);

/// The six associates u v, u a unit.
std::vector<EisInt> associates(const EisInt& v);
/// Lexicographically least associate; labels a Z/6 orbit.
EisInt orbit_representative(const EisInt& v);

enum class Splitting { ramified, split, inert };
Splitting splitting(Int p);
const char* to_string(Splitting s);

/// Coprime (x, y) with x^2 - xy + y^2 = n, sorted.
std::vector<EisInt> primitive_representations(Int n);

/// Index-ell sublattice of Z[w] in {1, w} coordinates, stored in HNF.
struct EisSublattice {
    Mat2 basis;

    Int index() const { return abs(basis.det()); }
    bool contains(const EisInt& v) const { return in_row_span(v.coords(), basis); }
    /// Closed under multiplication by w.
    bool is_ideal() const;

    friend bool operator==(const EisSublattice&, const EisSublattice&) = default;
    friend auto operator<=>(const EisSublattice&, const EisSublattice&) = default;
};

/// diag(ell, 1), then [[1, k], [0, ell]] for k = 0 .. ell-1.
std::vector<EisSublattice> sublattices(Int ell);

/// The unique index-ell sublattice containing the primitive vector v.
EisSublattice sublattice_containing(const EisInt& v, Int ell);

/// The principal ideal (v), as a sublattice of index norm(v).
EisSublattice principal_ideal(const EisInt& v);

struct ReducedBasis {
    EisInt v;
    EisInt w;
};

/// Minkowski-reduced basis, norm(v) <= norm(w), by exhaustive enumeration.
ReducedBasis reduced_basis(const EisSublattice& m);

/// Shortest vector independent of v in the index-ell sublattice containing v,
/// found as ell*w + t*v. Requires v primitive and norm(v) < ell.
EisInt second_minimal(const EisInt& v, Int ell);

enum class TemperamentKind { three_three, three_one, one_three };
const char* to_string(TemperamentKind k);

struct TemperedRecord {
    TemperamentKind kind = TemperamentKind::three_one;
    int s = 0;
    int s_prime = 0;
    Int ell = 0;
    Rational tau2;
    /// A minimal vector of M in Z[w] (generator of the ideal for 3-and-3).
    EisInt witness;
    EisSublattice sublattice;

    friend bool operator==(const TemperedRecord&, const TemperedRecord&) = default;
};

/// (Z[w], p_ell) for ell = 3 or ell = 1 mod 6.
std::optional<TemperedRecord> three_three(Int ell);

/// 3-and-1 records sorted by tau^2, each confirmed by classify().
std::vector<TemperedRecord> three_one_records(Int ell);
std::vector<Rational> three_one_temperaments(Int ell);

/// Duals of the 3-and-1 records: tau^2 -> ell^2 / tau^2.
std::vector<TemperedRecord> one_three_records(Int ell);
std::vector<Rational> one_three_temperaments(Int ell);

/// Z/6 orbits of primitive vectors whose norms beta satisfy 3 ell <= 4 beta
/// and beta < ell, each flagged live or crossed out.
class OrbitList {
  public:
    struct Orbit {
        EisInt representative;
        bool live = true;
    };

    explicit OrbitList(Int ell);

    const std::map<Int, std::vector<Orbit>>& entries() const { return entries_; }
    bool empty() const;
    /// Live orbit of least norm (ties broken by representative).
    std::optional<std::pair<Int, EisInt>> smallest_live() const;
    /// Crosses out the orbit of v; false when it is not on the list or already crossed out.
    bool cross_out(const EisInt& v);

  private:
    std::map<Int, std::vector<Orbit>> entries_;
};

struct AlgorithmOneStep {
    Int beta;
    EisInt v;
    EisInt w_hat;
};

/// Create List / Compute / Record / Cross Out over [3 ell / 4, ell); returns the
/// recorded steps in order.
std::vector<AlgorithmOneStep> algorithm_one_steps(Int ell);
/// Recorded temperaments tau^2, ascending.
std::vector<Int> algorithm_one(Int ell);

/// |E_ell(n)|: index-ell sublattices containing a primitive representation of
/// n < ell. The closed formula and a scan of all ell + 1 sublattices are both
/// evaluated and must agree.
Int e_count(Int ell, Int n);

std::string to_string(const EisInt& v);

}  // namespace tempered

#endif
