#ifndef PAINLEVE_NUMERIC_HPP
#define PAINLEVE_NUMERIC_HPP

#include <array>
#include <stdexcept>

#include "painleve/birational_map.hpp"
#include "painleve/systems.hpp"

namespace painleve {

struct FloatState {
    std::array<double, 4> phase{};
    double t = 0;
};

struct IntegratorStats {
    long steps = 0;
    long rejected = 0;
    double min_guard_margin = 0;  // smallest |locus polynomial| seen
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::array<double, 4>> states;
    IntegratorStats stats;

    FloatState state_at(size_t i) const { return {states[i], times[i]}; }
    FloatState back() const { return {states.back(), times.back()}; }
};

struct SingularityApproach : std::runtime_error {
    double where;
    explicit SingularityApproach(double t_loc, const std::string& what)
        : std::runtime_error(what), where(t_loc) {}
};

struct IntegrateOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double guard_delta = 1e-6;
    long max_steps = 200000;
    int samples = 33;  // dense-output grid including both endpoints
};

// Compiled double-precision evaluator of the canonically derived vector
// field of one system, parameters frozen at construction. The parameter
// vector must satisfy the constraint to 1e-14; that is asserted, never
// repaired.
class NumericSystem {
public:
    NumericSystem(const HamiltonianSystem& sys, const std::vector<Rational>& params);

    const HamiltonianSystem& system() const { return *sys_; }
    const std::vector<double>& params() const { return params_double_; }
    const std::vector<Rational>& params_exact() const { return params_; }

    std::array<double, 4> field(const FloatState& s) const;
    double hamiltonian(const FloatState& s) const;
    double hamiltonian_dt(const FloatState& s) const;
    // smallest |locus value| over the cataloged denominator loci
    double guard_margin(const FloatState& s) const;
    // whether t appears in any denominator (A4 is polynomial in T)
    bool time_singular() const { return time_singular_; }

private:
    struct Term {
        double coeff;
        std::vector<std::pair<uint32_t, uint32_t>> powers;
    };
    struct Compiled {
        std::vector<Term> num, den;
        double eval(const std::vector<double>& vals) const;
    };
    Compiled compile(const RatFunc& f) const;
    std::vector<double> full_values(const FloatState& s) const;

    const HamiltonianSystem* sys_;
    std::vector<Rational> params_;
    std::vector<double> params_double_;
    std::array<Compiled, 4> field_;
    Compiled hamiltonian_c_;
    Compiled hamiltonian_dt_c_;
    std::vector<Compiled> guards_;
    bool time_singular_ = false;
};

// Adaptive Dormand-Prince 5(4) with local error control and dense output at
// opt.samples uniformly spaced times. Throws SingularityApproach when the
// guard margin falls below opt.guard_delta, std::runtime_error on step
// underflow. For systems with t in a denominator, t0 and t1 must have the
// same sign.
Trajectory integrate(const NumericSystem& sys, const FloatState& initial, double t0, double t1,
                     const IntegrateOptions& opt = {});

// Two-path consistency of a Backlund map: integrate then map vs map then
// integrate (time-reversal maps integrate the mapped path over negated
// times). Returns the max componentwise endpoint difference.
double flow_commutation_error(const BirationalMap& map, const HamiltonianSystem& sys,
                              const std::vector<Rational>& params, const FloatState& initial,
                              double t0, double t1, const IntegrateOptions& opt = {});

// Double-precision image of a state under a map (parameters exact);
// nullopt when a denominator vanishes.
std::optional<FloatState> map_state(const BirationalMap& map, const HamiltonianSystem& sys,
                                    const std::vector<Rational>& params, const FloatState& s);

// With the condition parameter zero and the y-trajectory pinned to 0, the
// (z,w) components must satisfy the standalone second-order system derived
// from the same Hamiltonian catalog; returns the max residual along the
// trajectory. Throws std::invalid_argument when the condition is violated.
double riccati_residual(const HamiltonianSystem& sys, const std::vector<Rational>& params,
                        const Trajectory& traj);

// max relative mismatch of dH/dt (4th-order finite differences along the
// trajectory grid) against the symbolic dH/dt = \partial H/\partial t
// evaluated on the samples; checks the chain-rule identity on solutions.
double energy_identity_error(const NumericSystem& sys, const Trajectory& traj);

std::string trajectory_csv(const Trajectory& traj);

}  // namespace painleve

#endif
