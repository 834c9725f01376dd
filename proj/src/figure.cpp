#include "tempered/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace tempered {

namespace {

struct Embedding {
    // Rows of the lower-triangular Cholesky factor, scaled so m_L = 1.
    double e1x, e2x, e2y;

    void apply(const Vec2& v, double& x, double& y) const {
        const auto a = static_cast<double>(v.x), b = static_cast<double>(v.y);
        x = a * e1x + b * e2x;
        y = b * e2y;
    }
};

Embedding embed(const Gram& g, const Rational& m_l) {
    const double g11 = g.g11.to_double(), g12 = g.g12.to_double(), det = g.det().to_double();
    const double scale = 1.0 / std::sqrt(m_l.to_double());
    const double r = std::sqrt(g11);
    return {r * scale, g12 / r * scale, std::sqrt(det) / r * scale};
}

double line_angle(const Embedding& e, const std::vector<Vec2>& vs) {
    if (vs.size() < 2) return 0.0;
    double x1, y1, x2, y2;
    e.apply(vs[0], x1, y1);
    e.apply(vs[1], x2, y2);
    const double c = std::abs(x1 * x2 + y1 * y2) / (std::hypot(x1, y1) * std::hypot(x2, y2));
    return std::acos(std::min(1.0, c)) * 180.0 / std::numbers::pi;
}

std::string fixed6(double v) {
    if (std::abs(v) < 5e-7) v = 0.0;  // no "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

FigureGeometry figure_geometry(const FigureSpec& spec) {
    if (!(spec.window > 0)) throw std::invalid_argument("figure: window radius must be positive");
    FigureGeometry out;
    out.classification = classify(spec.pair);
    const Classification& c = out.classification;
    const Embedding e = embed(spec.pair.gram, c.min_outside);
    out.outer_radius = std::sqrt(c.tau2.to_double());
    out.inner_angle = line_angle(e, c.S);
    out.outer_angle = line_angle(e, c.S_prime);

    // Exact superset of the window: value <= ceil(window^2) * m_L.
    const Rational bound = c.min_outside * Rational(static_cast<Int>(std::ceil(spec.window * spec.window)));
    std::vector<Vec2> coords{{0, 0}};
    for (const Vec2& v : short_vectors(spec.pair.gram, bound)) {
        coords.push_back(v);
        coords.push_back(-v);
    }
    std::sort(coords.begin(), coords.end());
    for (const Vec2& v : coords) {
        FigurePoint p{v, 0, 0, spec.pair.in_sublattice(v)};
        e.apply(v, p.x, p.y);
        if (std::hypot(p.x, p.y) <= spec.window + 1e-9) out.points.push_back(p);
    }
    return out;
}

std::string render_figure(const FigureSpec& spec) {
    const FigureGeometry g = figure_geometry(spec);
    constexpr double half = 200.0;  // pixels from center to edge
    const double unit = (half - 10.0) / spec.window;
    auto px = [&](double x) { return fixed6(half + x * unit); };
    auto py = [&](double y) { return fixed6(half - y * unit); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"white\"/>\n";
    auto ring = [&](double r, const char* cls) {
        svg += "<circle class=\"" + std::string(cls) + "\" cx=\"" + px(0) + "\" cy=\"" + py(0) + "\" r=\"" + fixed6(r * unit) +
               "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    };
    if (spec.inner_circle) ring(g.inner_radius, "min-L");
    if (spec.outer_circle) ring(g.outer_radius, "min-M");
    for (const FigurePoint& p : g.points) {
        svg += "<circle cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) + "\" r=\"" + fixed6(spec.point_radius) + "\" fill=\"black\"/>\n";
        if (p.in_sublattice)
            svg += "<circle cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) + "\" r=\"" + fixed6(2.5 * spec.point_radius) +
                   "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace tempered
