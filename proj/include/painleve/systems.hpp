#ifndef PAINLEVE_SYSTEMS_HPP
#define PAINLEVE_SYSTEMS_HPP

#include <optional>
#include <string>

#include "painleve/layout.hpp"
#include "painleve/rng.hpp"

namespace painleve {

enum class SystemId { D5, B4, D4_2, B3, A4 };

std::string system_name(SystemId id);
std::optional<SystemId> system_from_name(const std::string& name);

// Linear constraint sum_i weights[i]*param[i] = target on the parameter
// space.
struct ParamSpace {
    std::vector<Rational> weights;
    Rational target;
};

// Polynomial f whose zero locus is flow-invariant once `param` vanishes.
struct InvariantDivisor {
    std::string label;
    MPoly f;
    size_t param_index;
};

// One of the five cataloged Hamiltonian systems. The vector field is always
// derived canonically from H; the explicit right-hand sides are transcribed
// separately so a transcription error shows up as a mismatch instead of
// being absorbed.
struct HamiltonianSystem {
    SystemId id;
    SystemLayout layout;
    ParamSpace param_space;
    RatFunc hamiltonian;
    std::optional<std::array<RatFunc, 4>> printed_rhs;
    std::vector<InvariantDivisor> divisors;
    // polynomials whose zero loci the numeric integrator must avoid
    std::vector<MPoly> guard_loci;

    // (dH/dy, -dH/dx, dH/dw, -dH/dz)
    std::array<RatFunc, 4> vector_field() const;

    // constraint residual weights^T p - target at a full point
    Rational constraint_residual(const FullPoint& p) const;

    // Draw parameters freely except the first one carrying nonzero weight,
    // which is solved from the constraint; phase and t random.
    FullPoint random_point_on_constraint(Rng& rng) const;
};

// Hamiltonian of the second-order Painleve V system:
// (q(q-1)p(p+t) - (g1+g3)qp + g1 p + g2 t q)/t
RatFunc build_HV(const RatFunc& q, const RatFunc& p, const RatFunc& t, const RatFunc& g1,
                 const RatFunc& g2, const RatFunc& g3);

// Hamiltonian of the second-order Painleve III system:
// (q^2 p(p-1) + q{(g0+g1)p - g1} + t p)/t; the third parameter of the
// classical normalization g0+2g1+g2=1 never enters the formula.
RatFunc build_HIII(const RatFunc& q, const RatFunc& p, const RatFunc& t, const RatFunc& g0,
                   const RatFunc& g1);

// Symbol names used when a system is laid out on a table.
struct SystemNaming {
    std::array<std::string, 4> phase;
    std::string time;
    std::vector<std::string> params;
};

SystemNaming default_naming(SystemId id);

// Catalog entry on the system's own fresh table.
HamiltonianSystem build_system(SystemId id);

// Same construction over a caller-provided table (used by the degeneration
// schemes, where source and target coexist in one table).
HamiltonianSystem build_system_on(SystemId id, const SymbolTablePtr& table,
                                  const SystemNaming& naming);

// True iff, with the condition parameter set to 0 (and the constraint
// eliminated against a pivot parameter), d.f divides the t-cleared numerator
// of the Lie derivative of d.f along the vector field. `condition_value`
// deliberately different from 0 serves as a negative control.
bool check_invariant_divisor(const HamiltonianSystem& sys, const InvariantDivisor& d,
                             const Rational& condition_value = Rational(0));

// Deterministic plain-text rendering of H and the vector field (goldens).
std::string render_system(const HamiltonianSystem& sys);

}  // namespace painleve

#endif
