#ifndef PAINLEVE_BIRATIONAL_MAP_HPP
#define PAINLEVE_BIRATIONAL_MAP_HPP

#include <optional>
#include <string>

#include "painleve/layout.hpp"
#include "painleve/param_map.hpp"
#include "painleve/rng.hpp"

namespace painleve {

enum class TimeAction { Keep, Negate };

// One Backlund transformation: rational images of the phase variables and
// of t, plus a linear action on the parameter vector. Generators are
// involutions as words; that is verified, never assumed.
struct BirationalMap {
    std::string name;
    SystemLayout layout;
    std::array<RatFunc, 4> phase_images;
    RatFunc t_image;
    TimeAction time_action = TimeAction::Keep;
    ParamMap param_action;

    // Exact application at a closed point; nullopt when a denominator
    // vanishes (unlucky point).
    std::optional<FullPoint> apply(const FullPoint& p) const;

    // Application with generic field values (Laurent series, univariate
    // rational functions). Ops: zero(), from_rational(r), add, mul,
    // divide(F,F) -> optional<F>, scale(F,Rational).
    template <class F, class Ops>
    std::optional<std::vector<F>> apply_values(const std::vector<F>& full, const Ops& ops) const {
        std::vector<F> out = full;
        auto eval_rf = [&](const RatFunc& f) -> std::optional<F> {
            F n = f.num().template eval_with<F>(full, ops);
            F d = f.den().template eval_with<F>(full, ops);
            return ops.divide(n, d);
        };
        for (size_t i = 0; i < 4; ++i) {
            auto v = eval_rf(phase_images[i]);
            if (!v) return std::nullopt;
            out[layout.phase[i].index] = *v;
        }
        auto tv = eval_rf(t_image);
        if (!tv) return std::nullopt;
        out[layout.time.index] = *tv;
        std::vector<F> pvals;
        pvals.reserve(layout.params.size());
        for (Var v : layout.params) pvals.push_back(full[v.index]);
        struct POps {
            const Ops* ops;
            F zero() const { return ops->zero(); }
            F from_rational(const Rational& r) const { return ops->from_rational(r); }
            F add(const F& a, const F& b) const { return ops->add(a, b); }
            F scale(const F& a, const Rational& r) const { return ops->scale(a, r); }
        };
        auto mapped = param_action.apply_with<F>(pvals, POps{&ops});
        for (size_t i = 0; i < layout.params.size(); ++i) out[layout.params[i].index] = mapped[i];
        return out;
    }
};

// Symbolic composition "first, then second" (components by substitution,
// parameter actions by affine composition).
BirationalMap compose(const BirationalMap& first, const BirationalMap& second);

// A word of generators, applied left to right.
using MapWord = std::vector<const BirationalMap*>;

std::optional<FullPoint> apply_word(const MapWord& word, const FullPoint& p);

ParamMap word_param_action(const MapWord& word);

enum class Ternary { True, False, Indeterminate };

// Samples `points` random points (phase, t, params all free) and checks the
// word returns every slot exactly. Unlucky points (vanishing denominators
// along the way) are resampled, at most max_resamples times in total.
Ternary word_is_identity(const MapWord& word, const SystemLayout& layout, int points, Rng& rng,
                         int max_resamples = 100);

// Fills phase, t and parameter slots with random rationals; other table
// slots (mixed tables) are zeroed.
FullPoint random_point(const SystemLayout& layout, Rng& rng);

}  // namespace painleve

#endif
