#ifndef TEMPERED_CLASSGROUP_HPP
#define TEMPERED_CLASSGROUP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tempered/bqf.hpp"
#include "tempered/integer.hpp"

namespace tempered {

/// True for D < 0 with D = 0 or 1 mod 4.
bool is_negative_discriminant(Int D);

/// Primitive reduced forms of discriminant D sorted by (a, b).
/// Throws std::invalid_argument("not a discriminant") on a bad residue.
std::vector<Form> reduced_forms(Int D);

/// Dirichlet composition of two primitive forms of the same discriminant,
/// returned reduced.
Form compose_forms(const Form& f, const Form& g);

/// Proper ideal class group of the imaginary quadratic order of discriminant D,
/// one class per reduced form. Immutable once built.
class ClassGroup {
  public:
    explicit ClassGroup(Int discriminant);

    Int discriminant() const { return disc_; }
    std::size_t size() const { return forms_.size(); }
    std::span<const Form> forms() const { return forms_; }
    const Form& form(std::size_t i) const { return forms_.at(i); }

    /// The principal class; always index 0 because its form has a = 1.
    std::size_t identity() const { return 0; }

    std::size_t compose(std::size_t i, std::size_t j) const;
    /// Class of (a, -b, c), re-reduced.
    std::size_t inverse(std::size_t i) const;
    std::size_t order(std::size_t i) const;

    /// Index of reduce(f). Throws for imprimitive forms or a foreign discriminant.
    std::size_t class_of(const Form& f) const;
    std::optional<std::size_t> find_reduced(const Form& reduced) const;

    /// Full table; entry [i][j] = compose(i, j).
    std::vector<std::vector<std::size_t>> composition_table() const;

  private:
    Int disc_;
    std::vector<Form> forms_;
    std::map<std::pair<Int, Int>, std::size_t> index_;
};

/// b = 0, b = -a, or a = c.
std::vector<std::size_t> ambiguous_classes(const ClassGroup& g);
/// Reduced form (a, b, a).
std::vector<std::size_t> well_rounded_classes(const ClassGroup& g);

/// Classes whose reduced form primitively represents the prime p.
std::vector<std::size_t> classes_representing(const ClassGroup& g, Int p);

struct GenusPartition {
    /// Cosets of the subgroup of squares; genera[0] is the principal genus.
    std::vector<std::vector<std::size_t>> genera;
    std::vector<std::size_t> genus_of;

    bool one_class_per_genus() const;
};

GenusPartition genus_partition(const ClassGroup& g);

/// Residues in (Z/|D|Z)^x attained by the forms of a genus, ascending.
std::vector<Int> genus_values(const ClassGroup& g, std::span<const std::size_t> genus);

/// Kronecker symbol (D | n) for n > 0.
int kronecker(Int D, Int n);

/// Smallest prime p <= limit (kronecker(D, p) != -1) primitively represented
/// by the class, if any.
std::optional<Int> smallest_represented_prime(const ClassGroup& g, std::size_t cls, Int limit);

/// A factorization certifying a well-rounded reduced form (a, b, a) of
/// discriminant D; see has_wr_discriminant.
struct WellRoundedWitness {
    Int F = 0;
    Int G = 0;
    Int a = 0;
    Int b = 0;

    Form form() const { return {a, b, a}; }
    Rational ratio() const { return Rational(F, G); }
    friend bool operator==(const WellRoundedWitness&, const WellRoundedWitness&) = default;
};

/// Factorizations F >= G with F/G <= 3:
///   odd D:  F G = |D|,   gcd(F, G) = 1,             (a, b) = ((F+G)/4, (G-F)/2)
///   even D: F G = |D|/4, gcd((F+G)/2, 2G) = 1,      (a, b) = ((F+G)/2, G-F)
/// Sorted by increasing ratio F/G.
std::vector<WellRoundedWitness> has_wr_discriminant(Int D);

}  // namespace tempered

#endif
