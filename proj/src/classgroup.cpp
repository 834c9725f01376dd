#include "tempered/classgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace tempered {

bool is_negative_discriminant(Int D) {
    if (D >= 0) return false;
    Int r = mod(D, 4);
    return r == 0 || r == 1;
}

std::vector<Form> reduced_forms(Int D) {
    if (!is_negative_discriminant(D)) throw std::invalid_argument("not a discriminant: " + to_string(D));
    const std::int64_t abs_d = to_i64(-D);
    std::vector<Form> out;
    // 3a^2 <= 4ac - b^2 = |D| for reduced forms, and |b| <= a.
    for (std::int64_t b = abs_d & 1; 3 * b * b <= abs_d; b += 2) {
        const std::int64_t n = (b * b + abs_d) / 4;
        for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= n; ++a) {
            if (n % a != 0) continue;
            const std::int64_t c = n / a;
            Form neg{a, -b, c};
            if (is_reduced(neg) && is_primitive(neg)) out.push_back(neg);
            if (b != 0) {
                Form pos{a, b, c};
                if (is_reduced(pos) && is_primitive(pos)) out.push_back(pos);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Form& x, const Form& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return out;
}

Form compose_forms(const Form& f, const Form& g) {
    const Int D = discriminant(f);
    if (discriminant(g) != D) throw std::invalid_argument("compose: discriminants differ");
    Form f1 = f, f2 = g;
    if (f1.a > f2.a) std::swap(f1, f2);
    const Int s = (f1.b + f2.b) / 2;
    const Int n = f2.b - s;
    Int y1 = 0, d = 0;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        auto [g0, u, v] = extended_gcd(f2.a, f1.a);
        (void)v;
        d = g0;
        y1 = u;
    }
    Int x2 = 0, y2 = 0, d1 = 0;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        auto [g1, xs, yd] = extended_gcd(s, d);
        x2 = xs;
        y2 = -yd;
        d1 = g1;
    }
    const Int v1 = f1.a / d1;
    const Int v2 = f2.a / d1;
    const Int r = mod(y1 * y2 * n - x2 * f2.c, v1);
    const Int b3 = f2.b + 2 * v2 * r;
    const Int a3 = v1 * v2;
    const Int num = b3 * b3 - D;
    if (num % (4 * a3) != 0) throw std::logic_error("compose: composition produced a non-integral form");
    return reduce(Form{a3, b3, num / (4 * a3)}).form;
}

ClassGroup::ClassGroup(Int discriminant) : disc_(discriminant), forms_(reduced_forms(discriminant)) {
    for (std::size_t i = 0; i < forms_.size(); ++i) index_.emplace(std::pair{forms_[i].a, forms_[i].b}, i);
}

std::optional<std::size_t> ClassGroup::find_reduced(const Form& reduced) const {
    auto it = index_.find({reduced.a, reduced.b});
    if (it == index_.end() || forms_[it->second] != reduced) return std::nullopt;
    return it->second;
}

std::size_t ClassGroup::class_of(const Form& f) const {
    if (tempered::discriminant(f) != disc_)
        throw std::invalid_argument("class_of: " + to_string(f) + " does not have discriminant " + to_string(disc_));
    if (!is_primitive(f)) throw std::invalid_argument("class_of: " + to_string(f) + " is not primitive");
    auto idx = find_reduced(reduce(f).form);
    if (!idx) throw std::logic_error("class_of: reduced form missing from class list");
    return *idx;
}

std::size_t ClassGroup::compose(std::size_t i, std::size_t j) const { return class_of(compose_forms(form(i), form(j))); }

std::size_t ClassGroup::inverse(std::size_t i) const {
    const Form& f = form(i);
    return class_of(Form{f.a, -f.b, f.c});
}

std::size_t ClassGroup::order(std::size_t i) const {
    std::size_t k = 1;
    for (std::size_t cur = i; cur != identity(); cur = compose(cur, i)) ++k;
    return k;
}

std::vector<std::vector<std::size_t>> ClassGroup::composition_table() const {
    std::vector<std::vector<std::size_t>> table(size(), std::vector<std::size_t>(size()));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i; j < size(); ++j) table[i][j] = table[j][i] = compose(i, j);
    return table;
}

std::vector<std::size_t> ambiguous_classes(const ClassGroup& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Form& f = g.form(i);
        if (f.b == 0 || f.b == -f.a || f.a == f.c) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> well_rounded_classes(const ClassGroup& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.form(i).a == g.form(i).c) out.push_back(i);
    return out;
}

std::vector<std::size_t> classes_representing(const ClassGroup& g, Int p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (represents(g.form(i), p)) out.push_back(i);
    return out;
}

bool GenusPartition::one_class_per_genus() const {
    return std::all_of(genera.begin(), genera.end(), [](const auto& genus) { return genus.size() == 1; });
}

GenusPartition genus_partition(const ClassGroup& g) {
    std::vector<std::size_t> squares;
    for (std::size_t i = 0; i < g.size(); ++i) squares.push_back(g.compose(i, i));
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());

    GenusPartition out;
    constexpr auto unassigned = static_cast<std::size_t>(-1);
    out.genus_of.assign(g.size(), unassigned);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (out.genus_of[i] != unassigned) continue;
        std::vector<std::size_t> coset;
        for (std::size_t sq : squares) coset.push_back(g.compose(i, sq));
        std::sort(coset.begin(), coset.end());
        for (std::size_t member : coset) out.genus_of[member] = out.genera.size();
        out.genera.push_back(std::move(coset));
    }
    return out;
}

std::vector<Int> genus_values(const ClassGroup& g, std::span<const std::size_t> genus) {
    const std::int64_t n = to_i64(-g.discriminant());
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (std::size_t cls : genus) {
        const Form& f = g.form(cls);
        const std::int64_t a = to_i64(mod(f.a, n)), b = to_i64(mod(f.b, n)), c = to_i64(mod(f.c, n));
        for (std::int64_t x = 0; x < n; ++x) {
            const std::int64_t ax2 = a * x % n * x % n;
            const std::int64_t bx = b * x % n;
            for (std::int64_t y = 0; y < n; ++y) {
                const std::int64_t v = (ax2 + bx * y + c * y % n * y) % n;
                hit[static_cast<std::size_t>(v)] = true;
            }
        }
    }
    std::vector<Int> out;
    for (std::int64_t v = 0; v < n; ++v)
        if (hit[static_cast<std::size_t>(v)] && gcd(v, n) == 1) out.push_back(v);
    return out;
}

namespace {

int jacobi(Int a, Int n) {
    // n odd and positive.
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace

int kronecker(Int D, Int n) {
    if (n <= 0) throw std::invalid_argument("kronecker: n must be positive");
    int result = 1;
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (D % 2 == 0) return 0;
        Int r = mod(D, 8);
        if ((twos & 1) && (r == 3 || r == 5)) result = -result;
    }
    if (n == 1) return result;
    return result * jacobi(D, n);
}

std::optional<Int> smallest_represented_prime(const ClassGroup& g, std::size_t cls, Int limit) {
    for (Int p = 2; p <= limit; ++p) {
        if (!is_prime(p) || kronecker(g.discriminant(), p) == -1) continue;
        if (represents(g.form(cls), p)) return p;
    }
    return std::nullopt;
}

std::vector<WellRoundedWitness> has_wr_discriminant(Int D) {
    if (!is_negative_discriminant(D)) throw std::invalid_argument("not a discriminant: " + to_string(D));
    const bool odd = mod(D, 4) == 1;
    const Int m = odd ? -D : -D / 4;
    std::vector<WellRoundedWitness> out;
    for (Int G = isqrt(m); G >= 1; --G) {
        if (m % G != 0) continue;
        const Int F = m / G;
        if (F > 3 * G) break;  // ratios only grow as G shrinks
        if (odd) {
            if (gcd(F, G) != 1) continue;
            out.push_back({F, G, (F + G) / 4, (G - F) / 2});
        } else {
            if ((F + G) % 2 != 0 || gcd((F + G) / 2, 2 * G) != 1) continue;
            out.push_back({F, G, (F + G) / 2, G - F});
        }
    }
    return out;
}

}  // namespace tempered
