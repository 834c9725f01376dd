#ifndef TEMPERED_TWO_TWO_HPP
#define TEMPERED_TWO_TWO_HPP

#include <optional>
#include <string>
#include <vector>

#include "tempered/bqf.hpp"
#include "tempered/classgroup.hpp"
#include "tempered/rational.hpp"
#include "tempered/verifier.hpp"

namespace tempered {

/// A 2-and-2 tempered perfect form: L in the well-rounded class classL, the
/// index-ell sublattice M = p_ell L in the well-rounded class classM.
struct TwoTwoRecord {
    Int ell = 0;
    Int D = 0;
    Form classL;
    Form classM;
    Rational tau2;  // ell * u1 / a with classL = (a, ., a), classM = (u1, ., u1)

    friend bool operator==(const TwoTwoRecord&, const TwoTwoRecord&) = default;
};

/// Records for a single class group before verification: every well-rounded C
/// with C o P well rounded, P the ambiguous class of a prime over ell. When
/// ell | D only the principal case is admitted. `note` receives one line per
/// ramified admission.
std::vector<TwoTwoRecord> two_two_candidates(Int ell, const ClassGroup& g, std::vector<std::string>* note = nullptr);

/// Candidates confirmed as 2-and-2 by classify(pair_lattice_of(.)). Candidates
/// the verifier classifies otherwise are dropped (and noted); a 2-and-2
/// verdict with a different tau^2 throws std::logic_error.
std::vector<TwoTwoRecord> verified_two_two(Int ell, const ClassGroup& g, std::vector<std::string>* note = nullptr);

/// The lattice pair of a record: L0 = Z^2 with Gram of a form in classL and
/// M0 spanned by (1, 0) and (0, ell), so (1, 0) is a minimal vector of M.
PairLattice pair_lattice_of(const TwoTwoRecord& rec);

struct TwoTwoReport {
    std::vector<TwoTwoRecord> records;
    std::vector<std::string> log;
};

/// All 2-and-2 records of prime index ell over -4 ell^2 <= D <= -3, sorted by
/// (|D|, classL). Runs in parallel over D.
TwoTwoReport enumerate_two_two_report(Int ell);
std::vector<TwoTwoRecord> enumerate_two_two(Int ell);

struct RatioRow {
    Int ell = 0;
    std::optional<Int> D_max;  // most negative D among the records, if any
    Rational ratio;            // |D_max| / ell^2
};

struct RatioScan {
    std::vector<RatioRow> rows;
    std::optional<RatioRow> global_max;
    bool all_within_four = true;   // proven bound
    bool all_within_three = true;  // conjectured bound, reported only
};

/// One row per prime ell <= max_ell.
RatioScan max_ratio_scan(Int max_ell);

struct EllHit {
    Int ell = 0;
    Form classL;
    Form classM;
};

struct EllsForDisc {
    std::vector<EllHit> hits;
    std::string diagnostic;  // nonempty when D has no well-rounded class
};

/// Primes ell <= max for which D carries a verified 2-and-2 form, one hit per
/// (classL, classM).
EllsForDisc ells_for_disc(Int D, Int max);

struct CongruenceClasses {
    bool sufficient = false;  // false when some genus holds several classes
    Int modulus = 0;
    /// Genus indices (into genus_partition) of C^-1 C' with C, C' well rounded.
    std::vector<std::size_t> genera;
    std::vector<std::vector<Int>> residues;
};

CongruenceClasses congruence_classes(Int D);

/// Well-rounded forms (a, b, a) of discriminant D, by factoring |D| = (2a - b)(2a + b).
std::vector<Form> well_rounded_forms(Int D);

}  // namespace tempered

#endif
