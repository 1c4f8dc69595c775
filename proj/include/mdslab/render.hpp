#pragma once

#include "mdslab/profile.hpp"

#include <string>
#include <vector>

namespace mdslab {

struct TriangleFigure {
    LatticePoint origin, kp, kq;
    std::vector<LatticePoint> points;
    std::vector<Column> highlighted;  // interior columns with <= d' points
    long dprime = 0;
    std::string svg;
};

/// k * Delta_1 with its lattice points; 32 px per unit, y pointing up.
TriangleFigure render_triangle(const Slopes& s, long k);

} // namespace mdslab
