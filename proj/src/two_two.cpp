#include "tempered/two_two.hpp"

#include <algorithm>
#include <stdexcept>

#include "tempered/parallel.hpp"

namespace tempered {

std::vector<Form> well_rounded_forms(Int D) {
    std::vector<Form> out;
    if (!is_negative_discriminant(D)) return out;
    const Int n = -D;
    // n = F G with F = 2a - b, G = 2a + b and |b| <= a, so G <= 3F and F <= 3G.
    for (Int F = 1; F * F <= 3 * n; ++F) {
        if (n % F != 0) continue;
        const Int G = n / F;
        if (G > 3 * F || F > 3 * G || (F + G) % 4 != 0) continue;
        const Form f{(F + G) / 4, (G - F) / 2, (F + G) / 4};
        if (is_reduced(f) && is_primitive(f)) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TwoTwoRecord> two_two_candidates(Int ell, const ClassGroup& g, std::vector<std::string>* note) {
    const Int D = g.discriminant();
    std::vector<TwoTwoRecord> out;
    if (kronecker(D, ell) == -1) return out;
    const auto wr = well_rounded_classes(g);
    if (wr.empty()) return out;

    const auto reps = classes_representing(g, ell);
    std::optional<std::size_t> P;
    if (D % ell == 0) {
        if (std::find(reps.begin(), reps.end(), g.identity()) == reps.end()) return out;
        P = g.identity();
        if (note) note->push_back("ell=" + to_string(ell) + " D=" + to_string(D) + ": ramified, principal form represents ell; admitted");
    } else {
        for (std::size_t c : reps)
            if (g.inverse(c) == c) P = c;
    }
    if (!P) return out;

    for (std::size_t c : wr) {
        const std::size_t m = g.compose(c, *P);
        const Form& fl = g.form(c);
        const Form& fm = g.form(m);
        if (fm.a != fm.c) continue;
        out.push_back({ell, D, fl, fm, Rational(ell * fm.a, fl.a)});
    }
    return out;
}

std::vector<TwoTwoRecord> verified_two_two(Int ell, const ClassGroup& g, std::vector<std::string>* note) {
    std::vector<TwoTwoRecord> out;
    for (const TwoTwoRecord& rec : two_two_candidates(ell, g, note)) {
        const Classification c = classify(pair_lattice_of(rec));
        if (!c.tempered || c.s != 2 || c.s_prime != 2) {
            if (note)
                note->push_back("ell=" + to_string(ell) + " D=" + to_string(rec.D) + " " + to_string(rec.classL) + ": verifier reports " +
                                (c.tempered ? "tempered " : "untempered ") + std::to_string(c.s) + "-and-" + std::to_string(c.s_prime) +
                                "; dropped");
            continue;
        }
        if (c.tau2 != rec.tau2)
            throw std::logic_error("2-and-2 record at ell=" + to_string(ell) + ", D=" + to_string(rec.D) + " has tau^2 " + rec.tau2.str() +
                                   " but the verifier finds " + c.tau2.str());
        out.push_back(rec);
    }
    return out;
}

PairLattice pair_lattice_of(const TwoTwoRecord& rec) {
    const Int ell = rec.ell;
    // M = p L is the index-ell sublattice on which the form is ell times a form in classM.
    std::optional<Mat2> sub;
    for (const EisSublattice& h : sublattices(ell)) {
        const Form f = restrict_to(rec.classL, h.basis);
        if (content(f) % ell != 0) continue;
        const Form q{f.a / ell, f.b / ell, f.c / ell};
        if (reduce(q).form == rec.classM) {
            sub = h.basis;
            break;
        }
    }
    if (!sub) throw std::logic_error("pair_lattice_of: no index-" + to_string(ell) + " sublattice realizes " + to_string(rec.classM));

    const PairLattice raw{Gram::from_form(rec.classL), *sub, ell};
    const Classification c = classify(raw);
    // New basis of L0: v a minimal vector of M, w completing it, so M = span(v, ell w).
    // Prefer w minimal outside M.
    std::optional<Mat2> basis;
    for (const Vec2& v : c.S_prime) {
        for (const Vec2& w : c.S) {
            const Int d = Mat2::from_rows(v, w).det();
            if (d == 1 || d == -1) {
                basis = Mat2::from_rows(v, d == 1 ? w : -w);
                break;
            }
        }
        if (basis) break;
    }
    if (!basis) {
        for (const Vec2& v : c.S_prime) {
            auto [g0, s, t] = extended_gcd(v.x, v.y);
            if (g0 != 1) continue;
            basis = Mat2::from_rows(v, Vec2{-t, s});
            break;
        }
    }
    if (!basis) throw std::logic_error("pair_lattice_of: no primitive minimal vector in M");
    return {Gram::from_form(restrict_to(rec.classL, *basis)), Mat2{1, 0, 0, ell}, ell};
}

TwoTwoReport enumerate_two_two_report(Int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("enumerate: ell = " + to_string(ell) + " is not prime");
    std::vector<Int> discs;
    for (Int D = -3; D >= -4 * ell * ell; --D) {
        if (!is_negative_discriminant(D) || kronecker(D, ell) == -1) continue;
        discs.push_back(D);
    }
    std::vector<TwoTwoReport> per_disc(discs.size());
    parallel_for(discs.size(), [&](std::size_t i) {
        const Int D = discs[i];
        if (well_rounded_forms(D).empty()) return;
        const ClassGroup g(D);
        per_disc[i].records = verified_two_two(ell, g, &per_disc[i].log);
    });

    TwoTwoReport out;
    for (auto& r : per_disc) {
        out.records.insert(out.records.end(), r.records.begin(), r.records.end());
        out.log.insert(out.log.end(), r.log.begin(), r.log.end());
    }
    std::stable_sort(out.records.begin(), out.records.end(), [](const TwoTwoRecord& x, const TwoTwoRecord& y) {
        // Class indices follow (a, b) order.
        return std::tuple(-x.D, x.classL.a, x.classL.b) < std::tuple(-y.D, y.classL.a, y.classL.b);
    });
    return out;
}

std::vector<TwoTwoRecord> enumerate_two_two(Int ell) { return enumerate_two_two_report(ell).records; }

RatioScan max_ratio_scan(Int max_ell) {
    const auto ells = primes_up_to(max_ell);
    RatioScan out;
    out.rows.resize(ells.size());
    for (std::size_t i = 0; i < ells.size(); ++i) {
        RatioRow& row = out.rows[i];
        row.ell = ells[i];
        for (const TwoTwoRecord& rec : enumerate_two_two(row.ell))
            if (!row.D_max || rec.D < *row.D_max) row.D_max = rec.D;
        if (row.D_max) row.ratio = Rational(-*row.D_max, row.ell * row.ell);
    }
    for (const RatioRow& row : out.rows) {
        if (!row.D_max) continue;
        if (row.ratio > Rational(4)) out.all_within_four = false;
        if (row.ratio > Rational(3)) out.all_within_three = false;
        if (!out.global_max || row.ratio > out.global_max->ratio) out.global_max = row;
    }
    return out;
}

EllsForDisc ells_for_disc(Int D, Int max) {
    if (!is_negative_discriminant(D)) throw std::invalid_argument("not a discriminant: " + to_string(D));
    EllsForDisc out;
    const ClassGroup g(D);
    if (well_rounded_classes(g).empty()) {
        out.diagnostic = "D = " + to_string(D) + " has no well-rounded class";
        return out;
    }
    for (Int ell : primes_up_to(max)) {
        // No 2-and-2 form exists with |D| > 4 ell^2.
        if (-D > 4 * ell * ell) continue;
        for (const TwoTwoRecord& rec : verified_two_two(ell, g)) out.hits.push_back({ell, rec.classL, rec.classM});
    }
    return out;
}

CongruenceClasses congruence_classes(Int D) {
    const ClassGroup g(D);
    const GenusPartition gp = genus_partition(g);
    CongruenceClasses out;
    out.modulus = -D;
    out.sufficient = gp.one_class_per_genus();
    if (!out.sufficient) return out;
    const auto wr = well_rounded_classes(g);
    std::vector<std::size_t> genera;
    for (std::size_t c : wr)
        for (std::size_t c2 : wr) genera.push_back(gp.genus_of[g.compose(g.inverse(c), c2)]);
    std::sort(genera.begin(), genera.end());
    genera.erase(std::unique(genera.begin(), genera.end()), genera.end());
    for (std::size_t gi : genera) {
        out.genera.push_back(gi);
        out.residues.push_back(genus_values(g, gp.genera[gi]));
    }
    return out;
}

}  // namespace tempered
