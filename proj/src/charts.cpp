#include "painleve/charts.hpp"

#include <stdexcept>

namespace painleve {

namespace {

struct Ctx {
    SymbolTablePtr tbl;
    RatFunc operator()(long c) const { return RatFunc::constant(tbl, Rational(c)); }
    RatFunc v(Var x) const { return RatFunc::variable(tbl, x); }
};

}  // namespace

ChartAtlas build_atlas(const HamiltonianSystem& sys) {
    Ctx C{sys.layout.table};
    RatFunc x = C.v(sys.layout.phase[0]), y = C.v(sys.layout.phase[1]),
            z = C.v(sys.layout.phase[2]), w = C.v(sys.layout.phase[3]);
    RatFunc t = C.v(sys.layout.time);
    auto P = [&](size_t i) { return C.v(sys.layout.params[i]); };

    ChartAtlas atlas;
    atlas.id = sys.id;
    auto add = [&](std::string name, std::array<RatFunc, 4> fwd, std::array<RatFunc, 4> inv) {
        atlas.charts.push_back({std::move(name), std::move(fwd), std::move(inv)});
    };

    switch (sys.id) {
        case SystemId::D5: {
            RatFunc a0 = P(0), a1 = P(1), a2 = P(2), a3 = P(3), a4 = P(4), a5 = P(5);
            add("chart0", {C(1) / x, -((y + t) * x + a0) * x, z, w},
                {C(1) / x, -y * x * x - a0 * x - t, z, w});
            add("chart1", {C(1) / x, -(y * x + a1) * x, z, w},
                {C(1) / x, -y * x * x - a1 * x, z, w});
            add("chart2", {-((x - z) * y - a2) * y, C(1) / y, z, w + y},
                {z + (a2 - x * y) * y, C(1) / y, z, w - C(1) / y});
            add("chart3", {x, y, C(1) / z, -(w * z + a3) * z},
                {x, y, C(1) / z, -w * z * z - a3 * z});
            add("chart4", {x, y, -((z - C(1)) * w - a4) * w, C(1) / w},
                {x, y, C(1) + (a4 - z * w) * w, C(1) / w});
            add("chart5", {x, y, -(z * w - a5) * w, C(1) / w},
                {x, y, (a5 - z * w) * w, C(1) / w});
            break;
        }
        case SystemId::B4: {
            RatFunc a0 = P(0), a1 = P(1), a2 = P(2), a3 = P(3), a4 = P(4);
            add("chart0", {C(1) / x, -((y - C(1)) * x + a0) * x, z, w},
                {C(1) / x, -y * x * x - a0 * x + C(1), z, w});
            add("chart1", {C(1) / x, -(y * x + a1) * x, z, w},
                {C(1) / x, -y * x * x - a1 * x, z, w});
            add("chart2", {-((x - z) * y - a2) * y, C(1) / y, z, w + y},
                {z + (a2 - x * y) * y, C(1) / y, z, w - C(1) / y});
            add("chart3", {x, y, C(1) / z, -(w * z + a3) * z},
                {x, y, C(1) / z, -w * z * z - a3 * z});
            add("chart4", {x, y, z, w - C(2) * a4 / z + t / (z * z)},
                {x, y, z, w + C(2) * a4 / z - t / (z * z)});
            break;
        }
        case SystemId::D4_2: {
            RatFunc b1 = P(0), b2 = P(1), b3 = P(2), b4 = P(3);
            add("chart1", {-((x - z) * y - b1) * y, C(1) / y, z, w + y},
                {z + (b1 - x * y) * y, C(1) / y, z, w - C(1) / y});
            add("chart2", {x, y, C(1) / z, -(w * z + b2) * z},
                {x, y, C(1) / z, -w * z * z - b2 * z});
            add("chart3", {x, y, z, w - C(2) * b3 / z + t / (z * z)},
                {x, y, z, w + C(2) * b3 / z - t / (z * z)});
            add("chart4", {x + C(2) * b4 / y - C(1) / (y * y), y, z, w},
                {x - C(2) * b4 / y + C(1) / (y * y), y, z, w});
            break;
        }
        default:
            throw std::invalid_argument("no holomorphy atlas cataloged for " +
                                        system_name(sys.id));
    }
    return atlas;
}

bool chart_is_birational(const HamiltonianSystem& sys, const Chart& chart, int points, Rng& rng) {
    const auto& lay = sys.layout;
    int done = 0, guard = 0;
    while (done < points) {
        if (++guard > points + 100) return false;
        FullPoint p = sys.random_point_on_constraint(rng);
        FullPoint mid = p;
        bool unlucky = false;
        for (size_t i = 0; i < 4; ++i) {
            auto v = chart.forward[i].eval(p);
            if (!v) {
                unlucky = true;
                break;
            }
            mid[lay.phase[i].index] = *v;
        }
        if (unlucky) continue;
        FullPoint back = mid;
        for (size_t i = 0; i < 4; ++i) {
            auto v = chart.inverse[i].eval(mid);
            if (!v) {
                unlucky = true;
                break;
            }
            back[lay.phase[i].index] = *v;
        }
        if (unlucky) continue;
        ++done;
        for (size_t i = 0; i < 4; ++i)
            if (back[lay.phase[i].index] != p[lay.phase[i].index]) return false;
    }
    return true;
}

}  // namespace painleve
