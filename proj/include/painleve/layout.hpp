#ifndef PAINLEVE_LAYOUT_HPP
#define PAINLEVE_LAYOUT_HPP

#include <array>
#include <vector>

#include "painleve/ratfunc.hpp"

namespace painleve {

// Where a system's symbols live inside its table: four phase variables
// (x,y) and (z,w) pairs in order, the time variable, and the ordered
// parameter symbols. Mixed tables (degeneration schemes) carry two layouts
// over one table.
struct SystemLayout {
    SymbolTablePtr table;
    std::array<Var, 4> phase;
    Var time;
    std::vector<Var> params;

    size_t param_count() const { return params.size(); }
};

// A closed point: one exact value per table symbol. Slots outside a
// layout's variables are just carried along.
using FullPoint = std::vector<Rational>;

inline std::vector<Rational> gather_params(const SystemLayout& lay, const FullPoint& p) {
    std::vector<Rational> out;
    out.reserve(lay.params.size());
    for (Var v : lay.params) out.push_back(p[v.index]);
    return out;
}

inline void scatter_params(const SystemLayout& lay, const std::vector<Rational>& vals, FullPoint& p) {
    for (size_t i = 0; i < lay.params.size(); ++i) p[lay.params[i].index] = vals[i];
}

}  // namespace painleve

#endif
