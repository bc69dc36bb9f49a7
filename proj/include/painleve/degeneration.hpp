#ifndef PAINLEVE_DEGENERATION_HPP
#define PAINLEVE_DEGENERATION_HPP

#include "painleve/weyl.hpp"

namespace painleve {

// value = prefactor * base^exponent, expanded by the binomial convention
// when the exponent is fractional (base must be 1 + positive eps-valuation
// at closed points). exponent 0 encodes a plain rational form. limit_only
// marks images the source states only as eps->0 limits; they are checked at
// eps^0, not at finite eps.
struct SeriesForm {
    RatFunc prefactor;
    RatFunc base;
    Rational exponent;
    bool limit_only = false;

    bool is_rational() const { return exponent == 0; }
};

// One generator of the degenerating subgroup: a word in the source
// generators, the chosen eps-image branch, the target generator whose
// parameter action the eps^0 limit must reproduce, and the printed
// finite-eps images of (X,Y,Z,W,T).
struct SubgroupEntry {
    std::string name;
    std::vector<std::string> source_word;
    SeriesForm eps_choice;
    std::string target_generator;
    std::array<SeriesForm, 5> printed_images;  // X, Y, Z, W, T
};

enum class DegenerationId { D5toA4, D5toB4, D42toB3 };

std::string degeneration_name(DegenerationId id);

// A cataloged degeneration: source and target systems realized on one mixed
// symbol table, the parameter/variable substitutions in both directions,
// the chain-rule time factor, and (for the eps-schemes) the subgroup table.
struct DegenerationScheme {
    DegenerationId id;
    SymbolTablePtr table;
    HamiltonianSystem source;
    HamiltonianSystem target;
    bool has_eps = false;
    Var eps;

    // source symbols expressed in target symbols (and eps)
    std::map<uint32_t, RatFunc> var_subst;    // keys: source phase + time
    std::map<uint32_t, RatFunc> param_subst;  // keys: source params

    // target symbols expressed in source symbols (and eps / source params)
    std::array<RatFunc, 4> inverse_vars;
    RatFunc inverse_time;
    std::vector<RatFunc> inverse_params;  // target params in source params

    // target eps recovered from the source parameters: eps (or eps^2 when
    // only the square is rational in the parameters) equals this expression
    RatFunc inverse_eps;
    bool inverse_eps_is_squared = false;

    // d(source time)/d(target time), computed from the substitution
    RatFunc dt_dT;

    std::vector<SubgroupEntry> subgroup;
};

DegenerationScheme build_degeneration(DegenerationId id);

}  // namespace painleve

#endif
