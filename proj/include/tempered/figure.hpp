#ifndef TEMPERED_FIGURE_HPP
#define TEMPERED_FIGURE_HPP

#include <string>
#include <vector>

#include "tempered/verifier.hpp"

namespace tempered {

struct FigureSpec {
    PairLattice pair;
    /// Half-width of the drawn window, in units of the shortest vector of L0 - M0.
    double window = 3.0;
    bool inner_circle = true;  // radius sqrt(m_L)
    bool outer_circle = true;  // radius sqrt(m_M)
    double point_radius = 3.0;  // pixels
};

struct FigurePoint {
    Vec2 coords;
    double x = 0;
    double y = 0;
    bool in_sublattice = false;
};

/// Planar embedding with the shortest vectors of L0 - M0 at length 1 and the
/// first basis vector along the positive x axis.
struct FigureGeometry {
    Classification classification;
    std::vector<FigurePoint> points;  // inside the window, sorted by coords
    double inner_radius = 1.0;
    double outer_radius = 1.0;  // tau
    /// Angle in [0, 90] degrees between the lines through the first two
    /// minimal pairs of L0 - M0 (resp. M0); 0 when there is only one pair.
    double inner_angle = 0.0;
    double outer_angle = 0.0;
};

FigureGeometry figure_geometry(const FigureSpec& spec);

/// Deterministic SVG document. Coordinates are printed with 6 decimals.
std::string render_figure(const FigureSpec& spec);

}  // namespace tempered

#endif
