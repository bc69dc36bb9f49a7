#ifndef PAINLEVE_CHARTS_HPP
#define PAINLEVE_CHARTS_HPP

#include "painleve/systems.hpp"

namespace painleve {

// One holomorphy chart: `forward` expresses the chart coordinates in the
// original variables, `inverse` expresses the original variables in the
// chart coordinates (the phase symbols are reused for the chart
// coordinates). Both may involve t and the parameters.
struct Chart {
    std::string name;
    std::array<RatFunc, 4> forward;
    std::array<RatFunc, 4> inverse;
};

struct ChartAtlas {
    SystemId id;
    std::vector<Chart> charts;
};

// The cataloged atlases: 6 charts for D5, 5 for B4, 4 for D4(2).
ChartAtlas build_atlas(const HamiltonianSystem& sys);

// Round-trip verification that `inverse` really inverts `forward` on a
// dense set (exact evaluation at `points` random points; unlucky points
// resampled).
bool chart_is_birational(const HamiltonianSystem& sys, const Chart& chart, int points, Rng& rng);

}  // namespace painleve

#endif
