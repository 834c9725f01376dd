// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock time
// checked against each criterion's budget. Exit status 1 if anything fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tempered/classgroup.hpp"
#include "tempered/cli.hpp"
#include "tempered/eisenstein.hpp"
#include "tempered/two_two.hpp"
#include "tempered/verifier.hpp"

using namespace tempered;
using json = nlohmann::json;

namespace {

// Every tempered pair met in criteria 2-10, for the duality suite.
std::vector<PairLattice> tempered_pairs;

void keep_if_tempered(const PairLattice& p) {
    if (classify(p).tempered) tempered_pairs.push_back(p);
}

struct Check {
    std::vector<std::string> failures;
    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

json cli_json(std::vector<std::string> args) {
    std::ostringstream out, err;
    args.push_back("--json");
    if (run(args, out, err) != 0) throw std::runtime_error("cli failed: " + err.str());
    return json::parse(out.str());
}

std::vector<Int> ints(const json& arr) {
    std::vector<Int> out;
    for (const auto& v : arr) out.push_back(v.get<std::int64_t>());
    return out;
}

Form form_of(const json& arr) { return {arr[0].get<std::int64_t>(), arr[1].get<std::int64_t>(), arr[2].get<std::int64_t>()}; }

// --- criteria ---------------------------------------------------------------

void class_table(Check& c) {
    const json doc = cli_json({"classgroup", "--disc", "-1155", "--compose", "15,-15,23", "19,-17,19"});
    const std::vector<Form> expected{{1, -1, 289}, {3, -3, 97}, {5, -5, 59}, {7, -7, 43},
                                     {11, -11, 29}, {15, -15, 23}, {17, -1, 17}, {19, -17, 19}};
    std::vector<Form> got, wr;
    bool all_ambiguous = true;
    for (const auto& cls : doc["classes"]) {
        got.push_back(form_of(cls["form"]));
        all_ambiguous = all_ambiguous && cls["ambiguous"].get<bool>();
        if (cls["well_rounded"].get<bool>()) wr.push_back(got.back());
    }
    std::vector<Form> sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    std::vector<Form> sorted_expected = expected;
    std::sort(sorted_expected.begin(), sorted_expected.end());
    c.require(sorted_got == sorted_expected, "reduced forms differ from the class table");
    c.require(all_ambiguous, "not all classes flagged ambiguous");
    c.require(wr == std::vector<Form>{{17, -1, 17}, {19, -17, 19}}, "well-rounded flags wrong");
    c.require(form_of(doc["product"][2]) == Form{17, -1, 17}, "(15,-15,23) o (19,-17,19) != (17,-1,17)");
}

void worked_example(Check& c) {
    const PairLattice p{Gram::from_form({391, 169, 19}), Mat2{1, 0, 0, 23}, 23};
    const Classification r = classify(p);
    c.require(r.tempered && r.s == 2 && r.s_prime == 2, "not a tempered 2-and-2");
    c.require(r.S == std::vector<Vec2>{{0, 1}, {1, -4}} && r.min_outside == Rational(19), "S wrong");
    c.require(r.S_prime == std::vector<Vec2>{{1, 0}, {5, -23}} && r.min_inside == Rational(391), "S' wrong");
    c.require(r.tau2 == Rational(391, 19), "tau^2 = " + r.tau2.str());
    keep_if_tempered(p);
}

void eisenstein_figures(Check& c) {
    const auto r7 = three_three(7);
    c.require(r7 && r7->tau2 == Rational(7), "no 3-and-3 with tau^2 = 7 at ell = 7");
    const auto r11 = three_one_records(11);
    const bool has7 = std::any_of(r11.begin(), r11.end(), [](const TemperedRecord& r) { return r.tau2 == Rational(7); });
    c.require(has7, "no 3-and-1 with tau^2 = 7 at ell = 11");
    c.require(!three_three(5), "3-and-3 reported at inert ell = 5");
    if (r7) keep_if_tempered({Gram::hexagonal(), r7->sublattice.basis, 7});
    for (const auto& r : r11) keep_if_tempered({Gram::hexagonal(), r.sublattice.basis, 11});
}

void gaussian_figure(Check& c) {
    const auto recs = enumerate_two_two(17);
    const auto it = std::find_if(recs.begin(), recs.end(), [](const TwoTwoRecord& r) { return r.D == -4 && r.tau2 == Rational(17); });
    c.require(it != recs.end(), "(D = -4, tau^2 = 17) missing at ell = 17");
    for (const auto& r : recs) keep_if_tempered(pair_lattice_of(r));
}

void first_distinct_shape(Check& c) {
    std::optional<Int> first;
    for (Int ell : primes_up_to(23)) {
        for (const auto& r : enumerate_two_two(ell)) {
            keep_if_tempered(pair_lattice_of(r));
            if (!first && r.classL != r.classM) first = ell;
        }
    }
    c.require(first == Int(23), first ? "first distinct shape at ell = " + to_string(*first) : "no distinct shape up to 23");
}

void conjecture_scan(Check& c) {
    const RatioScan s = max_ratio_scan(100);
    c.require(s.global_max.has_value(), "no records");
    if (!s.global_max) return;
    const double ratio = s.global_max->ratio.to_double();
    c.require(s.global_max->ell == 47 && s.global_max->D_max == Int(-6435),
              "max at ell = " + to_string(s.global_max->ell) + ", D = " + to_string(*s.global_max->D_max));
    c.require(ratio >= 2.90 && ratio <= 2.92, "ratio " + std::to_string(ratio));
    c.require(s.all_within_four, "|D| <= 4 ell^2 violated");
    std::cout << "      conjectured |D| <= 3 ell^2 over ell < 100: " << (s.all_within_three ? "holds" : "fails") << '\n';
    for (const auto& r : enumerate_two_two(47)) keep_if_tempered(pair_lattice_of(r));
}

void genus_lists(Check& c) {
    const std::vector<Int> g1155_principal{1,   4,   16,  64,  169, 214, 256, 289, 331, 361, 379, 394, 421, 466, 499,
                                           526, 529, 631, 676, 694, 709, 751, 841, 856, 949, 961, 991, 1024, 1054, 1114};
    const std::vector<Int> g1155_p23{23,  53,  92,  113, 137, 158, 212, 218, 302, 317, 323, 368, 422, 443,  452,
                                     533, 548, 617, 632, 653, 683, 848, 863, 872, 947, 977, 1037, 1082, 1103, 1142};
    const std::vector<Int> g55_principal{1, 4, 9, 14, 16, 26, 31, 34, 36, 49};
    const std::vector<Int> g55_other{2, 7, 8, 13, 17, 18, 28, 32, 43, 52};

    auto lists = [](Int D) {
        std::map<Form, std::vector<Int>> by_form;
        for (const auto& g : cli_json({"genus", "--disc", to_string(D)}))
            for (const auto& f : g["classes"]) by_form[form_of(f)] = ints(g["values"]);
        return by_form;
    };
    auto l1155 = lists(-1155);
    c.require(l1155[{1, -1, 289}] == g1155_principal, "-1155 principal genus list differs");
    c.require(l1155[{15, -15, 23}] == g1155_p23, "-1155 genus of (15,-15,23) differs");
    auto l55 = lists(-55);
    c.require(l55[{1, -1, 14}] == g55_principal && l55[{4, -3, 4}] == g55_principal, "-55 principal genus list differs");
    c.require(l55[{2, 1, 7}] == g55_other && l55[{2, -1, 7}] == g55_other, "-55 non-principal genus list differs");
}

void class_membership(Check& c) {
    const ClassGroup g(-55);
    const std::map<Int, bool> principal{{31, false}, {59, true}, {71, true}, {89, false}};
    for (auto [ell, want] : principal) {
        const auto reps = classes_representing(g, ell);
        const bool is_principal = std::find(reps.begin(), reps.end(), g.identity()) != reps.end();
        const bool is_wr = std::find(reps.begin(), reps.end(), g.class_of({4, -3, 4})) != reps.end();
        c.require(is_principal == want && is_wr == !want, "ell = " + to_string(ell) + " in the wrong class");
    }
    std::vector<Int> ells;
    for (const auto& h : cli_json({"ells-for-disc", "--disc", "-55", "--max", "100"}))
        if (ells.empty() || ells.back() != h["ell"].get<std::int64_t>()) ells.push_back(h["ell"].get<std::int64_t>());
    c.require(ells.size() >= 2 && ells[0] == 59 && ells[1] == 71, "ells-for-disc -55 does not begin 59, 71");
    for (const auto& h : ells_for_disc(-55, 100).hits)
        keep_if_tempered(pair_lattice_of({h.ell, -55, h.classL, h.classM, Rational(h.ell * h.classM.a, h.classL.a)}));
}

void wr_cross_validation(Check& c) {
    std::optional<Int> first_odd, first_even;
    for (Int D = -3; D >= -10000; --D) {
        if (!is_negative_discriminant(D)) continue;
        const auto w = has_wr_discriminant(D);
        bool any = false;
        for (const Form& f : reduced_forms(D)) any = any || f.a == f.c;
        if (any != !w.empty()) c.require(false, "mismatch at D = " + to_string(D));
        if (w.size() >= 2) {
            if (D % 2 != 0 && !first_odd) first_odd = D;
            if (D % 2 == 0 && !first_even) first_even = D;
        }
    }
    c.require(first_odd == Int(-1155), "first odd D with two witnesses is not -1155");
    c.require(first_even == Int(-1120), "first even D with two witnesses is not -1120");
}

// n = 3^r prod p_i^e_i with r <= 1 and p_i = 1 mod 6 gives 2^|S|; otherwise 0.
Int orbit_pairs(Int n) {
    Int count = 1;
    for (Int p : prime_divisors(n)) {
        if (p == 3 && n % 9 == 0) return 0;
        if (p == 3) continue;
        if (mod(p, 6) != 1) return 0;
        count *= 2;
    }
    return count;
}

void oracle_equivalence(Check& c) {
    for (Int ell : primes_up_to(200)) {
        const std::string at = " at ell = " + to_string(ell);
        const auto oracle = oracle_eisenstein(ell);
        std::set<Rational> oracle_31;
        std::map<Rational, Int> count_31;
        int n33 = 0;
        for (const auto& e : oracle) {
            const auto& k = e.classification;
            if (!k.tempered) continue;
            if (k.s == 3 && k.s_prime == 3) {
                ++n33;
                c.require(k.tau2 == Rational(ell), "3-and-3 with tau^2 != ell" + at);
            } else if (k.s == 3 && k.s_prime == 1) {
                oracle_31.insert(k.tau2);
                ++count_31[k.tau2];
            } else {
                c.require(false, "unexpected tempered type " + std::to_string(k.s) + "-and-" + std::to_string(k.s_prime) + at);
            }
        }
        const auto t33 = three_three(ell);
        c.require(n33 == (t33 ? (ell == 3 ? 1 : 2) : 0), "3-and-3 count" + at);
        if (t33) keep_if_tempered({Gram::hexagonal(), t33->sublattice.basis, ell});

        const auto recs = three_one_records(ell);
        std::set<Rational> ours;
        for (const auto& r : recs) {
            ours.insert(r.tau2);
            if (ell <= 60) keep_if_tempered({Gram::hexagonal(), r.sublattice.basis, ell});
        }
        c.require(ours == oracle_31, "3-and-1 temperaments disagree with the oracle" + at);

        // |E_ell(n)| = 3 * 2^|S| for representable n < ell; sublattices where n is
        // the strict minimum number exactly that many when 4 n^2 < 3 ell^2.
        for (Int n = 1; n < ell; ++n) {
            const Int expected = 3 * orbit_pairs(n);
            c.require(e_count(ell, n) == expected, "|E(" + to_string(n) + ")|" + at);
            if (n > 1 && expected > 0 && 4 * n * n < 3 * ell * ell)
                c.require(count_31[Rational(n)] == expected, "3-and-1 witness count for " + to_string(n) + at);
        }

        // Pairwise intersections |E(n1) n E(n2)| in {0, 6}.
        std::map<std::pair<Int, Int>, int> pair_count;
        for (const EisSublattice& m : sublattices(ell)) {
            std::set<Int> norms;
            const Gram g = Gram::hexagonal().restrict_to(m.basis);
            for (const Vec2& v : short_vectors(g, Rational(ell - 1))) {
                const EisInt z = EisInt::from(v * m.basis);
                if (z.primitive()) norms.insert(norm(z));
            }
            for (Int a : norms)
                for (Int b : norms)
                    if (a < b) ++pair_count[{a, b}];
        }
        for (const auto& [k, n] : pair_count)
            c.require(n == 6, "|E(" + to_string(k.first) + ") n E(" + to_string(k.second) + ")| = " + std::to_string(n) + at);
    }
}

void duality_suite(Check& c) {
    c.require(!tempered_pairs.empty(), "no tempered pairs collected");
    for (const PairLattice& p : tempered_pairs) {
        const Classification a = classify(p);
        const Classification d = classify(dualize(p));
        const Classification dd = classify(dualize(dualize(p)));
        const std::string at = " for " + to_string(p.gram) + " / " + to_string(p.sub);
        c.require(d.tempered && d.s == a.s_prime && d.s_prime == a.s, "dual does not swap (s, s')" + at);
        c.require(a.tau2 * d.tau2 == Rational(p.ell * p.ell), "tau^2 tau*^2 != ell^2" + at);
        c.require(dd.tempered == a.tempered && dd.s == a.s && dd.s_prime == a.s_prime && dd.tau2 == a.tau2, "double dual differs" + at);
    }
    std::cout << "      " << tempered_pairs.size() << " tempered pairs dualized\n";
}

void representation_counts(Check& c) {
    for (Int n = 1; n <= 1000; ++n) {
        const auto reps = primitive_representations(n);
        c.require(static_cast<Int>(reps.size()) == 6 * orbit_pairs(n), "count for n = " + to_string(n));
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void(Check&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "class table of D = -1155 (classgroup --disc -1155)", 1, class_table},
        {2, "worked ell = 23 example on the verifier", 1, worked_example},
        {3, "Eisenstein: 3-and-3 at 7, 3-and-1 tau^2 = 7 at 11, none at 5", 1, eisenstein_figures},
        {4, "Gaussian: ell = 17 includes (D = -4, tau^2 = 17)", 1, gaussian_figure},
        {5, "first 2-and-2 with classL != classM occurs at ell = 23", 30, first_distinct_shape},
        {6, "conjecture scan: max |D|/ell^2 at ell = 47, D = -6435", 180, conjecture_scan},
        {7, "genus lists for -1155 and -55", 5, genus_lists},
        {8, "class membership by representation for D = -55", 1, class_membership},
        {9, "well-rounded discriminants to -10^4", 30, wr_cross_validation},
        {10, "oracle equivalence for ell <= 200", 60, oracle_equivalence},
        {11, "duality suite", 30, duality_suite},
        {12, "primitive representation counts for n <= 1000", 5, representation_counts},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > cr.budget_seconds) check.failures.push_back("took " + std::to_string(secs) + " s");
        const bool ok = check.failures.empty();
        failed += !ok;
        char line[256];
        std::snprintf(line, sizeof line, "%s %2d  %-70s %8.3f s (budget %g s)", ok ? "PASS" : "FAIL", cr.id, cr.name, secs, cr.budget_seconds);
        std::cout << line << '\n';
        for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i) std::cout << "      " << check.failures[i] << '\n';
    }
    std::cout << (failed ? std::to_string(failed) + " criteria FAILED" : std::string("all 12 criteria PASS")) << '\n';
    return failed ? 1 : 0;
}
