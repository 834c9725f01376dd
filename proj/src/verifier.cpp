#include "tempered/verifier.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tempered {

Rational Gram::value(const Vec2& v) const { return g11 * (v.x * v.x) + g12 * (2 * v.x * v.y) + g22 * (v.y * v.y); }

Rational Gram::inner(const Vec2& v, const Vec2& w) const {
    return g11 * (v.x * w.x) + g12 * (v.x * w.y + v.y * w.x) + g22 * (v.y * w.y);
}

Gram Gram::restrict_to(const Mat2& m) const {
    const Vec2 r1 = m.row1(), r2 = m.row2();
    return {value(r1), inner(r1, r2), value(r2)};
}

std::optional<Form> Gram::as_form() const {
    Rational b = g12 * 2;
    if (!g11.is_integer() || !b.is_integer() || !g22.is_integer()) return std::nullopt;
    return Form{g11.num(), b.num(), g22.num()};
}

Vec2 canonical_sign(const Vec2& v) { return (v.x > 0 || (v.x == 0 && v.y > 0)) ? v : -v; }

std::vector<Vec2> short_vectors(const Gram& g, const Rational& bound) {
    if (!g.positive_definite()) throw std::invalid_argument("short_vectors: Gram matrix is not positive definite");
    std::vector<std::pair<Rational, Vec2>> found;
    if (bound < 0) return {};
    const Rational det = g.det();
    // value >= (det / g11) y^2
    const Int y_max = isqrt((bound * g.g11 / det).floor());
    for (Int y = 0; y <= y_max; ++y) {
        // g11 x^2 + 2 g12 y x + (g22 y^2 - bound) <= 0
        const Rational center = -(g.g12 * y) / g.g11;
        const Rational disc = (g.g12 * y) * (g.g12 * y) - g.g11 * (g.g22 * (y * y) - bound);
        if (disc < 0) continue;
        const Int half_width = isqrt((disc / (g.g11 * g.g11)).ceil()) + 1;
        for (Int x = center.floor() - half_width; x <= center.ceil() + half_width; ++x) {
            const Vec2 v{x, y};
            if (y == 0 && x <= 0) continue;  // one per +-pair, and skip 0
            Rational val = g.value(v);
            if (val <= bound) found.emplace_back(val, v);
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& p, const auto& q) {
        if (p.first != q.first) return p.first < q.first;
        return canonical_sign(p.second) < canonical_sign(q.second);
    });
    std::vector<Vec2> out;
    out.reserve(found.size());
    for (const auto& [val, v] : found) out.push_back(canonical_sign(v));
    return out;
}

void PairLattice::validate() const {
    if (!gram.positive_definite()) throw std::invalid_argument("pair lattice: Gram matrix is degenerate or not positive definite");
    if (ell < 2) throw std::invalid_argument("pair lattice: index must be at least 2");
    if (abs(sub.det()) != ell)
        throw std::invalid_argument("pair lattice: |det H| = " + to_string(abs(sub.det())) + " but ell = " + to_string(ell));
}

namespace {

// Minimum of g over vectors accepted by `keep`, growing the search radius from
// `start` until something qualifies.
template <typename Keep>
std::pair<Rational, std::vector<Vec2>> constrained_minimum(const Gram& g, Rational bound, Keep keep) {
    for (;;) {
        std::vector<Vec2> hits;
        for (const Vec2& v : short_vectors(g, bound))
            if (keep(v)) hits.push_back(v);
        if (!hits.empty()) {
            Rational best = g.value(hits.front());
            std::vector<Vec2> argmin;
            for (const Vec2& v : hits)
                if (g.value(v) == best) argmin.push_back(v);
            return {best, argmin};
        }
        bound = bound * 2;
    }
}

void sort_canonical(std::vector<Vec2>& vs) {
    for (Vec2& v : vs) v = canonical_sign(v);
    std::sort(vs.begin(), vs.end());
}

}  // namespace

Classification classify(const PairLattice& p) {
    p.validate();
    Classification out;
    const Rational start = std::min(p.gram.g11, p.gram.g22);
    auto [m_l, s_vecs] = constrained_minimum(p.gram, start, [&](const Vec2& v) { return !p.in_sublattice(v); });

    const Gram gm = p.gram.restrict_to(p.sub);
    auto [m_m, s_coords] = constrained_minimum(gm, std::min(gm.g11, gm.g22), [](const Vec2&) { return true; });
    std::vector<Vec2> s_prime;
    for (const Vec2& c : s_coords) s_prime.push_back(c * p.sub);

    sort_canonical(s_vecs);
    sort_canonical(s_prime);
    out.min_outside = m_l;
    out.min_inside = m_m;
    out.tau2 = m_m / m_l;
    out.s = static_cast<int>(s_vecs.size());
    out.s_prime = static_cast<int>(s_prime.size());
    out.S = std::move(s_vecs);
    out.S_prime = std::move(s_prime);
    if (out.s > 3 || out.s_prime > 3) throw std::logic_error("classify: a plane lattice cannot have four minimal pairs");
    out.tempered = out.tau2 >= 1 && out.s + out.s_prime >= 4;
    return out;
}

std::optional<RationalitySolution> solve_rationality(std::span<const Vec2> S, std::span<const Vec2> S_prime) {
    std::vector<std::array<Rational, 5>> rows;
    for (const Vec2& v : S) rows.push_back({v.x * v.x, v.x * v.y, v.y * v.y, 0, 1});
    for (const Vec2& v : S_prime) rows.push_back({v.x * v.x, v.x * v.y, v.y * v.y, -1, 0});

    // Gauss-Jordan over Q.
    std::array<int, 4> pivot_row{-1, -1, -1, -1};
    std::size_t r = 0;
    for (int col = 0; col < 4 && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Rational lead = rows[r][col];
        for (auto& e : rows[r]) e /= lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rational factor = rows[i][col];
            for (int k = 0; k < 5; ++k) rows[i][k] -= factor * rows[r][k];
        }
        pivot_row[col] = static_cast<int>(r);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][4] != 0) return std::nullopt;

    std::array<Rational, 4> x{};
    for (int col = 0; col < 4; ++col)
        if (pivot_row[col] >= 0) x[col] = rows[pivot_row[col]][4];
    return RationalitySolution{x[0], x[1], x[2], x[3], r == 4};
}

PairLattice dualize(const PairLattice& p) {
    p.validate();
    const Gram gm = p.gram.restrict_to(p.sub);
    return {Gram{gm.g22, -gm.g12, gm.g11}, p.sub.transpose(), p.ell};
}

std::vector<OracleEntry> oracle_eisenstein(Int ell) {
    std::vector<OracleEntry> out;
    for (const EisSublattice& m : sublattices(ell))
        out.push_back({m, classify(PairLattice{Gram::hexagonal(), m.basis, ell})});
    return out;
}

std::string to_string(const Gram& g) { return "[[" + g.g11.str() + "," + g.g12.str() + "],[" + g.g12.str() + "," + g.g22.str() + "]]"; }

}  // namespace tempered
