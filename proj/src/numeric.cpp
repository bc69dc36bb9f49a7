#include "painleve/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace painleve {

double NumericSystem::Compiled::eval(const std::vector<double>& vals) const {
    auto sum = [&](const std::vector<Term>& terms) {
        double acc = 0;
        for (const Term& t : terms) {
            double v = t.coeff;
            for (auto [idx, e] : t.powers) {
                double base = vals[idx];
                for (uint32_t k = 0; k < e; ++k) v *= base;
            }
            acc += v;
        }
        return acc;
    };
    return sum(num) / sum(den);
}

NumericSystem::Compiled NumericSystem::compile(const RatFunc& f) const {
    auto pack = [](const MPoly& p) {
        std::vector<Term> out;
        for (const auto& [e, c] : p.terms()) {
            Term t;
            t.coeff = c.get_d();
            for (uint32_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t.powers.emplace_back(i, e[i]);
            out.push_back(std::move(t));
        }
        return out;
    };
    return Compiled{pack(f.num()), pack(f.den())};
}

NumericSystem::NumericSystem(const HamiltonianSystem& sys, const std::vector<Rational>& params)
    : sys_(&sys), params_(params) {
    if (params.size() != sys.layout.params.size())
        throw std::invalid_argument("numeric system: parameter count mismatch");
    Rational residual(0);
    for (size_t i = 0; i < params.size(); ++i)
        residual += sys.param_space.weights[i] * params[i];
    residual -= sys.param_space.target;
    if (std::abs(residual.get_d()) > 1e-14)
        throw std::invalid_argument("numeric system: parameters violate the constraint");
    for (const auto& p : params) params_double_.push_back(p.get_d());

    auto field = sys.vector_field();
    for (size_t i = 0; i < 4; ++i) field_[i] = compile(field[i]);
    hamiltonian_c_ = compile(sys.hamiltonian);
    hamiltonian_dt_c_ = compile(sys.hamiltonian.derivative(sys.layout.time));
    for (size_t i = 0; i < 4; ++i)
        if (field[i].den().degree_in(sys.layout.time) > 0) time_singular_ = true;
    // The integration guard covers the loci where the *field* is singular
    // (t=0 for the four time-singular systems). The wider guard_loci catalog
    // marks map denominators; trajectories may legitimately ride those
    // surfaces (invariant-divisor runs start on them).
    if (time_singular_)
        guards_.push_back(compile(RatFunc::variable(sys.layout.table, sys.layout.time)));
}

std::vector<double> NumericSystem::full_values(const FloatState& s) const {
    std::vector<double> vals(sys_->layout.table->size(), 0.0);
    for (size_t i = 0; i < 4; ++i) vals[sys_->layout.phase[i].index] = s.phase[i];
    vals[sys_->layout.time.index] = s.t;
    for (size_t i = 0; i < params_double_.size(); ++i)
        vals[sys_->layout.params[i].index] = params_double_[i];
    return vals;
}

std::array<double, 4> NumericSystem::field(const FloatState& s) const {
    auto vals = full_values(s);
    return {field_[0].eval(vals), field_[1].eval(vals), field_[2].eval(vals),
            field_[3].eval(vals)};
}

double NumericSystem::hamiltonian(const FloatState& s) const {
    return hamiltonian_c_.eval(full_values(s));
}

double NumericSystem::hamiltonian_dt(const FloatState& s) const {
    return hamiltonian_dt_c_.eval(full_values(s));
}

double NumericSystem::guard_margin(const FloatState& s) const {
    auto vals = full_values(s);
    double m = std::numeric_limits<double>::infinity();
    for (const auto& g : guards_) {
        double acc = 0;
        for (const auto& t : g.num) {
            double v = t.coeff;
            for (auto [idx, e] : t.powers)
                for (uint32_t k = 0; k < e; ++k) v *= vals[idx];
            acc += v;
        }
        m = std::min(m, std::abs(acc));
    }
    return m;
}

namespace {

// Dormand-Prince RK5(4) tableau
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;

using Vec4 = std::array<double, 4>;

Vec4 axpy(const Vec4& y, double h, std::initializer_list<std::pair<double, const Vec4*>> ks) {
    Vec4 out = y;
    for (auto& [c, k] : ks)
        for (int i = 0; i < 4; ++i) out[i] += h * c * (*k)[i];
    return out;
}

void advance(const NumericSystem& sys, Vec4& y, double& t, double t_end,
             const IntegrateOptions& opt, IntegratorStats& stats, double& h) {
    const double dir = (t_end >= t) ? 1.0 : -1.0;
    if (h == 0 || (h > 0) != (dir > 0)) h = dir * std::abs(t_end - t) / 100.0;
    while (dir * (t_end - t) > 0) {
        if (std::abs(h) > std::abs(t_end - t)) h = t_end - t;
        if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t)))
            throw std::runtime_error("integrate: step size underflow");
        if (stats.steps + stats.rejected > opt.max_steps)
            throw std::runtime_error("integrate: step budget exhausted");

        Vec4 k1 = sys.field({y, t});
        Vec4 k2 = sys.field({axpy(y, h, {{A21, &k1}}), t + C2 * h});
        Vec4 k3 = sys.field({axpy(y, h, {{A31, &k1}, {A32, &k2}}), t + C3 * h});
        Vec4 k4 = sys.field({axpy(y, h, {{A41, &k1}, {A42, &k2}, {A43, &k3}}), t + C4 * h});
        Vec4 k5 = sys.field(
            {axpy(y, h, {{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}}), t + C5 * h});
        Vec4 k6 = sys.field(
            {axpy(y, h, {{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}}), t + h});
        Vec4 y5 = axpy(y, h, {{B1, &k1}, {B3, &k3}, {B4, &k4}, {B5, &k5}, {B6, &k6}});
        Vec4 k7 = sys.field({y5, t + h});

        double err = 0;
        for (int i = 0; i < 4; ++i) {
            double e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] +
                            E7 * k7[i]);
            double scale = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err += (e / scale) * (e / scale);
        }
        err = std::sqrt(err / 4.0);

        if (err <= 1.0 || std::abs(h) <= 1e-14 * std::max(1.0, std::abs(t))) {
            t += h;
            y = y5;
            ++stats.steps;
            for (double c : y)
                if (!std::isfinite(c) || std::abs(c) > 1e8)
                    throw SingularityApproach(t, "integrate: trajectory diverged at t=" +
                                                     std::to_string(t));
            double margin = sys.guard_margin({y, t});
            stats.min_guard_margin = std::min(stats.min_guard_margin, margin);
            if (margin < opt.guard_delta)
                throw SingularityApproach(
                    t, "integrate: trajectory approached a denominator locus at t=" +
                           std::to_string(t));
        } else {
            ++stats.rejected;
        }
        double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::min(5.0, std::max(0.2, factor));
    }
}

}  // namespace

Trajectory integrate(const NumericSystem& sys, const FloatState& initial, double t0, double t1,
                     const IntegrateOptions& opt) {
    if (sys.time_singular() && t0 * t1 <= 0)
        throw std::invalid_argument("integrate: the time interval may not reach t=0");
    if (opt.samples < 2) throw std::invalid_argument("integrate: need at least two samples");
    Trajectory traj;
    traj.stats.min_guard_margin = sys.guard_margin(initial);
    if (traj.stats.min_guard_margin < opt.guard_delta)
        throw SingularityApproach(t0, "integrate: initial state violates the guard");

    Vec4 y = initial.phase;
    double t = t0;
    traj.times.push_back(t0);
    traj.states.push_back(y);
    if (t0 == t1) {
        traj.times.push_back(t1);
        traj.states.push_back(y);
        return traj;
    }
    double h = 0;
    for (int s = 1; s < opt.samples; ++s) {
        double target = t0 + (t1 - t0) * s / (opt.samples - 1);
        advance(sys, y, t, target, opt, traj.stats, h);
        traj.times.push_back(t);
        traj.states.push_back(y);
    }
    return traj;
}

std::optional<FloatState> map_state(const BirationalMap& map, const HamiltonianSystem& sys,
                                    const std::vector<Rational>& params, const FloatState& s) {
    std::vector<double> vals(sys.layout.table->size(), 0.0);
    for (size_t i = 0; i < 4; ++i) vals[sys.layout.phase[i].index] = s.phase[i];
    vals[sys.layout.time.index] = s.t;
    for (size_t i = 0; i < params.size(); ++i)
        vals[sys.layout.params[i].index] = params[i].get_d();
    FloatState out;
    for (size_t i = 0; i < 4; ++i) {
        auto v = map.phase_images[i].eval_double(vals);
        if (!v || !std::isfinite(*v)) return std::nullopt;
        out.phase[i] = *v;
    }
    auto tv = map.t_image.eval_double(vals);
    if (!tv || !std::isfinite(*tv)) return std::nullopt;
    out.t = *tv;
    return out;
}

double flow_commutation_error(const BirationalMap& map, const HamiltonianSystem& sys,
                              const std::vector<Rational>& params, const FloatState& initial,
                              double t0, double t1, const IntegrateOptions& opt) {
    NumericSystem num(sys, params);
    auto mapped_params = map.param_action.apply(params);
    NumericSystem num_mapped(sys, mapped_params);

    auto apply_map = [&](const FloatState& s) -> FloatState {
        std::vector<double> vals(sys.layout.table->size(), 0.0);
        for (size_t i = 0; i < 4; ++i) vals[sys.layout.phase[i].index] = s.phase[i];
        vals[sys.layout.time.index] = s.t;
        for (size_t i = 0; i < params.size(); ++i)
            vals[sys.layout.params[i].index] = params[i].get_d();
        FloatState out;
        for (size_t i = 0; i < 4; ++i) {
            auto v = map.phase_images[i].eval_double(vals);
            if (!v) throw std::invalid_argument("flow commutation: map undefined at state");
            out.phase[i] = *v;
        }
        auto tv = map.t_image.eval_double(vals);
        if (!tv) throw std::invalid_argument("flow commutation: map undefined at state");
        out.t = *tv;
        return out;
    };

    // path one: flow, then map
    Trajectory flow = integrate(num, initial, t0, t1, opt);
    FloatState end_then_map = apply_map(flow.back());

    // path two: map, then flow under the mapped parameters (time-reversal
    // maps integrate over the negated interval)
    FloatState start_mapped = apply_map(initial);
    double s1 = (map.time_action == TimeAction::Negate) ? -t1 : t1;
    Trajectory mapped_flow = integrate(num_mapped, start_mapped, start_mapped.t, s1, opt);
    FloatState map_then_end = mapped_flow.back();

    double err = 0;
    for (size_t i = 0; i < 4; ++i)
        err = std::max(err, std::abs(end_then_map.phase[i] - map_then_end.phase[i]));
    return err;
}

double riccati_residual(const HamiltonianSystem& sys, const std::vector<Rational>& params,
                        const Trajectory& traj) {
    if (sys.id != SystemId::D5 && sys.id != SystemId::B4)
        throw std::invalid_argument("riccati reduction cataloged for the coupled V/III systems");
    if (params[1] != 0)
        throw std::invalid_argument("riccati reduction requires the second parameter zero");
    if (std::abs(traj.states.front()[1]) > 1e-12)
        throw std::invalid_argument("riccati reduction requires a trajectory starting on y=0");

    const auto& lay = sys.layout;
    auto C = [&](const Rational& r) { return RatFunc::constant(lay.table, r); };
    RatFunc z = RatFunc::variable(lay.table, lay.phase[2]);
    RatFunc w = RatFunc::variable(lay.table, lay.phase[3]);
    RatFunc t = RatFunc::variable(lay.table, lay.time);
    auto P = [&](size_t i) { return RatFunc::variable(lay.table, lay.params[i]); };

    RatFunc H_red = (sys.id == SystemId::D5)
                        ? build_HV(z, w, t, P(5), P(3), P(4))
                        : build_HIII(z, w, t, P(0) + P(1) + C(Rational(2)) * P(2) + P(3), P(3));
    std::array<RatFunc, 2> reduced = {H_red.derivative(lay.phase[3]),
                                      -H_red.derivative(lay.phase[2])};

    NumericSystem num(sys, params);
    double worst = 0;
    for (size_t k = 0; k < traj.times.size(); ++k) {
        FloatState s = traj.state_at(k);
        auto full = num.field(s);
        std::vector<double> vals(lay.table->size(), 0.0);
        for (size_t i = 0; i < 4; ++i) vals[lay.phase[i].index] = s.phase[i];
        vals[lay.time.index] = s.t;
        for (size_t i = 0; i < params.size(); ++i)
            vals[lay.params[i].index] = params[i].get_d();
        for (size_t i = 0; i < 2; ++i) {
            auto v = reduced[i].eval_double(vals);
            if (!v) throw std::invalid_argument("riccati reduction: reduced field undefined");
            worst = std::max(worst, std::abs(full[i + 2] - *v));
        }
    }
    return worst;
}

double energy_identity_error(const NumericSystem& sys, const Trajectory& traj) {
    if (traj.times.size() < 5) throw std::invalid_argument("energy identity: need >= 5 samples");
    double hstep = traj.times[1] - traj.times[0];
    std::vector<double> H(traj.times.size());
    for (size_t k = 0; k < traj.times.size(); ++k) H[k] = sys.hamiltonian(traj.state_at(k));
    double worst = 0;
    for (size_t k = 2; k + 2 < traj.times.size(); ++k) {
        double fd = (-H[k + 2] + 8 * H[k + 1] - 8 * H[k - 1] + H[k - 2]) / (12 * hstep);
        double sym = sys.hamiltonian_dt(traj.state_at(k));
        double denom = std::max(std::abs(sym), 1.0);
        worst = std::max(worst, std::abs(fd - sym) / denom);
    }
    return worst;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream out;
    out << "t,x,y,z,w\n";
    char buf[512];
    for (size_t k = 0; k < traj.times.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", traj.times[k],
                      traj.states[k][0], traj.states[k][1], traj.states[k][2],
                      traj.states[k][3]);
        out << buf;
    }
    return out.str();
}

}  // namespace painleve
