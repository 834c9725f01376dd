#include "tempered/eisenstein.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tempered/verifier.hpp"

namespace tempered {

Int norm(const EisInt& v) { return v.x * v.x - v.x * v.y + v.y * v.y; }

EisInt operator*(const EisInt& u, const EisInt& v) {
    // w^2 = -1 - w
    return {u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x - u.y * v.y};
}

EisInt operator+(const EisInt& u, const EisInt& v) { return {u.x + v.x, u.y + v.y}; }
EisInt operator-(const EisInt& u, const EisInt& v) { return {u.x - v.x, u.y - v.y}; }

EisInt conj(const EisInt& v) { return {v.x - v.y, -v.y}; }

EisInt times_omega(const EisInt& v) { return {-v.y, v.x - v.y}; }

std::vector<EisInt> associates(const EisInt& v) {
    std::vector<EisInt> out;
    EisInt cur = v;
    for (int i = 0; i < 3; ++i) {
        out.push_back(cur);
        out.push_back({-cur.x, -cur.y});
        cur = times_omega(cur);
    }
    return out;
}

EisInt orbit_representative(const EisInt& v) {
    auto all = associates(v);
    return *std::min_element(all.begin(), all.end());
}

Splitting splitting(Int p) {
    if (p == 3) return Splitting::ramified;
    if (mod(p, 6) == 1) return Splitting::split;
    return Splitting::inert;
}

const char* to_string(Splitting s) {
    switch (s) {
        case Splitting::ramified: return "ramified";
        case Splitting::split: return "split";
        case Splitting::inert: return "inert";
    }
    return "?";
}

std::vector<EisInt> primitive_representations(Int n) {
    std::vector<EisInt> out;
    if (n <= 0) return out;
    // 4 N(x + yw) = (2x - y)^2 + 3 y^2, symmetric in x and y.
    const Int r = isqrt(4 * n / 3);
    for (Int x = -r; x <= r; ++x)
        for (Int y = -r; y <= r; ++y) {
            EisInt v{x, y};
            if (norm(v) == n && v.primitive()) out.push_back(v);
        }
    return out;
}

bool EisSublattice::is_ideal() const {
    return contains(times_omega(EisInt::from(basis.row1()))) && contains(times_omega(EisInt::from(basis.row2())));
}

std::vector<EisSublattice> sublattices(Int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("sublattices: index must be prime");
    std::vector<EisSublattice> out;
    out.push_back({Mat2{ell, 0, 0, 1}});
    for (Int k = 0; k < ell; ++k) out.push_back({Mat2{1, k, 0, ell}});
    return out;
}

EisSublattice sublattice_containing(const EisInt& v, Int ell) {
    if (!v.primitive()) throw std::invalid_argument("sublattice_containing: " + to_string(v) + " is not primitive");
    // Complete v to [[x, y], [-t, s]] in SL2(Z) and pull back diag(1, ell).
    auto [g, s, t] = extended_gcd(v.x, v.y);
    (void)g;
    const Mat2 m{v.x, v.y, -ell * t, ell * s};
    return {hermite_normal_form(m)};
}

EisSublattice principal_ideal(const EisInt& v) {
    const EisInt w = times_omega(v);
    return {hermite_normal_form(Mat2{v.x, v.y, w.x, w.y})};
}

ReducedBasis reduced_basis(const EisSublattice& m) {
    const Gram g = Gram::hexagonal().restrict_to(m.basis);
    Rational bound = std::min(g.g11, g.g22);
    for (;;) {
        auto vs = short_vectors(g, bound);
        if (!vs.empty()) {
            const Vec2 first = vs.front();
            for (const Vec2& cand : vs) {
                if (Mat2::from_rows(first, cand).det() == 0) continue;
                if (abs(Mat2::from_rows(first, cand).det()) != 1)
                    throw std::logic_error("reduced_basis: successive minima are not a basis");
                return {EisInt::from(first * m.basis), EisInt::from(cand * m.basis)};
            }
        }
        bound = bound * 2;
    }
}

EisInt second_minimal(const EisInt& v, Int ell) {
    if (!v.primitive()) throw std::invalid_argument("second_minimal: " + to_string(v) + " is not primitive");
    if (norm(v) >= ell)
        throw std::domain_error("second_minimal: norm(v) = " + to_string(norm(v)) + " >= ell; v need not lie in a reduced basis");
    // a d - b c = 1 completes v = (a, b) with w = (c, d); M = span{v, ell w}.
    auto [g, s, t] = extended_gcd(v.x, v.y);
    (void)g;
    const Vec2 lw{-t * ell, s * ell};
    const Gram hex = Gram::hexagonal();
    const Rational t0 = -hex.inner(lw, v.coords()) / hex.value(v.coords());
    EisInt best{};
    Int best_norm = -1;
    for (Int k = t0.floor() - 1; k <= t0.ceil() + 1; ++k) {
        const EisInt cand{lw.x + k * v.x, lw.y + k * v.y};
        if (best_norm < 0 || norm(cand) < best_norm) {
            best = cand;
            best_norm = norm(cand);
        }
    }
    const ReducedBasis rb = reduced_basis(sublattice_containing(v, ell));
    std::array<Int, 2> expect{norm(rb.v), norm(rb.w)};
    std::array<Int, 2> got{std::min(norm(v), best_norm), std::max(norm(v), best_norm)};
    if (expect != got) throw std::logic_error("second_minimal: disagrees with exhaustive reduced basis");
    return best;
}

const char* to_string(TemperamentKind k) {
    switch (k) {
        case TemperamentKind::three_three: return "3and3";
        case TemperamentKind::three_one: return "3and1";
        case TemperamentKind::one_three: return "1and3";
    }
    return "?";
}

namespace {

void confirm(const TemperedRecord& rec) {
    const Classification c = classify(PairLattice{Gram::hexagonal(), rec.sublattice.basis, rec.ell});
    if (!c.tempered || c.s != rec.s || c.s_prime != rec.s_prime || c.tau2 != rec.tau2)
        throw std::logic_error("verifier rejected " + std::string(to_string(rec.kind)) + " record at ell=" + to_string(rec.ell) +
                               ", tau^2=" + rec.tau2.str());
}

TemperedRecord three_one_record(Int ell, Int beta, const EisInt& v) {
    TemperedRecord rec{TemperamentKind::three_one, 3, 1, ell, Rational(beta), v, sublattice_containing(v, ell)};
    confirm(rec);
    return rec;
}

}  // namespace

std::optional<TemperedRecord> three_three(Int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("three_three: ell must be prime");
    if (ell != 3 && mod(ell, 6) != 1) return std::nullopt;
    // Generator with x > 0 > y and x largest: 2 - w for 7, 1 - w for 3.
    std::optional<EisInt> pi;
    for (const EisInt& r : primitive_representations(ell))
        if (r.x > 0 && r.y < 0 && (!pi || r.x > pi->x)) pi = r;
    if (!pi) throw std::logic_error("three_three: no generator found for a non-inert prime");
    TemperedRecord rec{TemperamentKind::three_three, 3, 3, ell, Rational(ell), *pi, principal_ideal(*pi)};
    confirm(rec);
    return rec;
}

std::vector<TemperedRecord> three_one_records(Int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("three_one: ell must be prime");
    std::map<Int, TemperedRecord> by_beta;
    // 1 < beta < (sqrt 3 / 2) ell, i.e. 4 beta^2 < 3 ell^2.
    for (Int beta = 2; 4 * beta * beta < 3 * ell * ell; ++beta) {
        auto reps = primitive_representations(beta);
        if (reps.empty()) continue;
        by_beta.emplace(beta, three_one_record(ell, beta, orbit_representative(reps.front())));
    }
    for (const AlgorithmOneStep& step : algorithm_one_steps(ell))
        if (!by_beta.count(step.beta)) by_beta.emplace(step.beta, three_one_record(ell, step.beta, step.v));
    std::vector<TemperedRecord> out;
    for (auto& [beta, rec] : by_beta) out.push_back(std::move(rec));
    return out;
}

std::vector<Rational> three_one_temperaments(Int ell) {
    std::vector<Rational> out;
    for (const auto& rec : three_one_records(ell)) out.push_back(rec.tau2);
    return out;
}

std::vector<TemperedRecord> one_three_records(Int ell) {
    std::vector<TemperedRecord> out;
    for (auto rec : three_one_records(ell)) {
        rec.kind = TemperamentKind::one_three;
        std::swap(rec.s, rec.s_prime);
        rec.tau2 = Rational(ell * ell) / rec.tau2;
        out.push_back(rec);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tau2 < b.tau2; });
    return out;
}

std::vector<Rational> one_three_temperaments(Int ell) {
    std::vector<Rational> out;
    for (const auto& rec : one_three_records(ell)) out.push_back(rec.tau2);
    return out;
}

OrbitList::OrbitList(Int ell) {
    for (Int beta = ceil_div(3 * ell, 4); beta < ell; ++beta) {
        std::set<EisInt> reps;
        for (const EisInt& v : primitive_representations(beta)) reps.insert(orbit_representative(v));
        if (reps.empty()) continue;
        auto& orbits = entries_[beta];
        for (const EisInt& r : reps) orbits.push_back({r, true});
    }
}

bool OrbitList::empty() const { return !smallest_live().has_value(); }

std::optional<std::pair<Int, EisInt>> OrbitList::smallest_live() const {
    for (const auto& [beta, orbits] : entries_)
        for (const Orbit& o : orbits)
            if (o.live) return std::pair{beta, o.representative};
    return std::nullopt;
}

bool OrbitList::cross_out(const EisInt& v) {
    auto it = entries_.find(norm(v));
    if (it == entries_.end()) return false;
    const EisInt rep = orbit_representative(v);
    for (Orbit& o : it->second) {
        if (o.representative == rep && o.live) {
            o.live = false;
            return true;
        }
    }
    return false;
}

std::vector<AlgorithmOneStep> algorithm_one_steps(Int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("algorithm_one: ell must be prime");
    OrbitList list(ell);
    std::vector<AlgorithmOneStep> steps;
    while (auto next = list.smallest_live()) {
        const auto [beta, v] = *next;
        const EisInt w_hat = second_minimal(v, ell);
        steps.push_back({beta, v, w_hat});
        list.cross_out(v);
        list.cross_out(w_hat);  // no-op when norm(w_hat) is off the list
    }
    return steps;
}

std::vector<Int> algorithm_one(Int ell) {
    std::set<Int> recorded;
    for (const auto& step : algorithm_one_steps(ell)) recorded.insert(step.beta);
    return {recorded.begin(), recorded.end()};
}

namespace {

// 0 unless n = 3^r prod p^e with r <= 1 and every p = 1 mod 6; else 2^{|S|}.
Int orbit_count_formula(Int n) {
    Int count = 1;
    for (Int p : prime_divisors(n)) {
        if (p == 3) {
            if (n % 9 == 0) return 0;
        } else if (mod(p, 6) == 1) {
            count *= 2;
        } else {
            return 0;
        }
    }
    return count;
}

}  // namespace

Int e_count(Int ell, Int n) {
    if (!is_prime(ell)) throw std::invalid_argument("e_count: ell must be prime");
    if (n <= 0 || n >= ell) throw std::invalid_argument("e_count: need 0 < n < ell");
    const Int formula = 3 * orbit_count_formula(n);
    const auto reps = primitive_representations(n);
    Int scanned = 0;
    for (const EisSublattice& m : sublattices(ell))
        if (std::any_of(reps.begin(), reps.end(), [&](const EisInt& r) { return m.contains(r); })) ++scanned;
    if (scanned != formula)
        throw std::logic_error("e_count: formula gives " + to_string(formula) + " but scan finds " + to_string(scanned));
    return scanned;
}

std::string to_string(const EisInt& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }

}  // namespace tempered
