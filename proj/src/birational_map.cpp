#include "painleve/birational_map.hpp"

#include <stdexcept>

namespace painleve {

std::optional<FullPoint> BirationalMap::apply(const FullPoint& p) const {
    FullPoint out = p;
    for (size_t i = 0; i < 4; ++i) {
        auto v = phase_images[i].eval(p);
        if (!v) return std::nullopt;
        out[layout.phase[i].index] = *v;
    }
    auto tv = t_image.eval(p);
    if (!tv) return std::nullopt;
    out[layout.time.index] = *tv;
    auto mapped = param_action.apply(gather_params(layout, p));
    scatter_params(layout, mapped, out);
    return out;
}

BirationalMap compose(const BirationalMap& first, const BirationalMap& second) {
    if (first.layout.table != second.layout.table)
        throw std::invalid_argument("compose: maps over different tables");
    const auto& lay = first.layout;
    // arguments of `second` are the images of `first`; parameters enter as
    // linear combinations read off the first map's ParamMap rows
    std::map<uint32_t, RatFunc> bind;
    for (size_t i = 0; i < 4; ++i) bind.emplace(lay.phase[i].index, first.phase_images[i]);
    bind.emplace(lay.time.index, first.t_image);
    for (size_t i = 0; i < lay.params.size(); ++i) {
        RatFunc row = RatFunc::constant(lay.table, first.param_action.shift(i));
        for (size_t j = 0; j < lay.params.size(); ++j) {
            const Rational& c = first.param_action.at(i, j);
            if (c == 0) continue;
            row += RatFunc::variable(lay.table, lay.params[j]) * RatFunc::constant(lay.table, c);
        }
        bind.emplace(lay.params[i].index, row);
    }
    BirationalMap out;
    out.name = first.name + "*" + second.name;
    out.layout = lay;
    for (size_t i = 0; i < 4; ++i) out.phase_images[i] = second.phase_images[i].substitute(bind);
    out.t_image = second.t_image.substitute(bind);
    out.time_action = (first.time_action == second.time_action) ? TimeAction::Keep : TimeAction::Negate;
    out.param_action = ParamMap::sequence(first.param_action, second.param_action);
    return out;
}

std::optional<FullPoint> apply_word(const MapWord& word, const FullPoint& p) {
    FullPoint cur = p;
    for (const BirationalMap* m : word) {
        auto next = m->apply(cur);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

ParamMap word_param_action(const MapWord& word) {
    if (word.empty()) throw std::invalid_argument("word_param_action: empty word");
    ParamMap acc = ParamMap::identity(word.front()->layout.params.size());
    for (const BirationalMap* m : word) acc = ParamMap::sequence(acc, m->param_action);
    return acc;
}

FullPoint random_point(const SystemLayout& layout, Rng& rng) {
    FullPoint p(layout.table->size(), Rational(0));
    for (Var v : layout.phase) p[v.index] = rng.rational();
    p[layout.time.index] = rng.nonzero_rational();
    for (Var v : layout.params) p[v.index] = rng.rational();
    return p;
}

Ternary word_is_identity(const MapWord& word, const SystemLayout& layout, int points, Rng& rng,
                         int max_resamples) {
    int sampled = 0, resamples = 0;
    while (sampled < points) {
        FullPoint p = random_point(layout, rng);
        auto image = apply_word(word, p);
        if (!image) {
            if (++resamples > max_resamples) return Ternary::Indeterminate;
            continue;
        }
        ++sampled;
        if (*image != p) return Ternary::False;
    }
    return Ternary::True;
}

}  // namespace painleve
