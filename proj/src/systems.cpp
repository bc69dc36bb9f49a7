#include "painleve/systems.hpp"

#include <sstream>
#include <stdexcept>

#include "painleve/rng.hpp"

namespace painleve {

std::string system_name(SystemId id) {
    switch (id) {
        case SystemId::D5: return "d5";
        case SystemId::B4: return "b4";
        case SystemId::D4_2: return "d4_2";
        case SystemId::B3: return "b3";
        case SystemId::A4: return "a4";
    }
    return "?";
}

std::optional<SystemId> system_from_name(const std::string& name) {
    if (name == "d5") return SystemId::D5;
    if (name == "b4") return SystemId::B4;
    if (name == "d4_2") return SystemId::D4_2;
    if (name == "b3") return SystemId::B3;
    if (name == "a4") return SystemId::A4;
    return std::nullopt;
}

RatFunc build_HV(const RatFunc& q, const RatFunc& p, const RatFunc& t, const RatFunc& g1,
                 const RatFunc& g2, const RatFunc& g3) {
    RatFunc one = RatFunc::constant(q.table(), Rational(1));
    return (q * (q - one) * p * (p + t) - (g1 + g3) * q * p + g1 * p + g2 * t * q) / t;
}

RatFunc build_HIII(const RatFunc& q, const RatFunc& p, const RatFunc& t, const RatFunc& g0,
                   const RatFunc& g1) {
    RatFunc one = RatFunc::constant(q.table(), Rational(1));
    return (q * q * p * (p - one) + q * ((g0 + g1) * p - g1) + t * p) / t;
}

SystemNaming default_naming(SystemId id) {
    switch (id) {
        case SystemId::D5:
            return {{"x", "y", "z", "w"}, "t", {"a0", "a1", "a2", "a3", "a4", "a5"}};
        case SystemId::B4:
            return {{"x", "y", "z", "w"}, "t", {"a0", "a1", "a2", "a3", "a4"}};
        case SystemId::D4_2:
            return {{"x", "y", "z", "w"}, "t", {"b1", "b2", "b3", "b4"}};
        case SystemId::B3:
            return {{"x", "y", "z", "w"}, "t", {"a0", "a1", "a2", "a3"}};
        case SystemId::A4:
            return {{"X", "Y", "Z", "W"}, "T", {"A0", "A1", "A2", "A3", "A4"}};
    }
    throw std::logic_error("unreachable");
}

namespace {

// small expression-building helper over one table
struct Ctx {
    SymbolTablePtr tbl;
    RatFunc operator()(long c) const { return RatFunc::constant(tbl, Rational(c)); }
    RatFunc rat(long n, long d) const { return RatFunc::constant(tbl, make_rational(n, d)); }
    RatFunc v(const std::string& name) const { return RatFunc::variable(tbl, tbl->var(name)); }
    MPoly pv(const std::string& name) const { return MPoly::variable(tbl, tbl->var(name)); }
    MPoly pc(long c) const { return MPoly::constant(tbl, Rational(c)); }
};

SystemLayout make_layout(const SymbolTablePtr& tbl, const SystemNaming& nm) {
    SystemLayout lay;
    lay.table = tbl;
    for (size_t i = 0; i < 4; ++i) lay.phase[i] = tbl->var(nm.phase[i]);
    lay.time = tbl->var(nm.time);
    for (const auto& p : nm.params) lay.params.push_back(tbl->var(p));
    return lay;
}

std::vector<Rational> weights_for(SystemId id) {
    switch (id) {
        case SystemId::D5: return {1, 1, 2, 2, 1, 1};
        case SystemId::B4: return {1, 1, 2, 2, 2};
        case SystemId::D4_2: return {2, 2, 2, 2};
        case SystemId::B3: return {1, 1, 2, 2};
        case SystemId::A4: return {1, 1, 1, 1, 1};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

HamiltonianSystem build_system_on(SystemId id, const SymbolTablePtr& table,
                                  const SystemNaming& nm) {
    Ctx C{table};
    HamiltonianSystem sys;
    sys.id = id;
    sys.layout = make_layout(table, nm);
    sys.param_space.weights = weights_for(id);
    sys.param_space.target = Rational(1);

    RatFunc x = C.v(nm.phase[0]), y = C.v(nm.phase[1]), z = C.v(nm.phase[2]), w = C.v(nm.phase[3]);
    RatFunc t = C.v(nm.time);
    auto P = [&](size_t i) { return C.v(nm.params[i]); };
    auto div_poly = [&](const RatFunc& f) {
        if (!f.den_is_one()) throw std::logic_error("divisor must be polynomial");
        return f.num();
    };

    switch (id) {
        case SystemId::D5: {
            RatFunc a1 = P(1), a2 = P(2), a3 = P(3), a4 = P(4), a5 = P(5);
            sys.hamiltonian = build_HV(x, y, t, a2 + a5, a1, a2 + C(2) * a3 + a4) +
                              build_HV(z, w, t, a5, a3, a4) +
                              C(2) * y * z * ((z - C(1)) * w + a3) / t;
            RatFunc c = C(2) * a2 + C(2) * a3 + a5 + a4;
            std::array<RatFunc, 4> rhs = {
                C(2) * x * x * y / t + x * x - C(2) * x * y / t - (C(1) + c / t) * x +
                    (a2 + a5) / t + C(2) * z * ((z - C(1)) * w + a3) / t,
                -C(2) * x * y * y / t + y * y / t - C(2) * x * y + (C(1) + c / t) * y - a1,
                C(2) * z * z * w / t + z * z - C(2) * z * w / t - (C(1) + (a5 + a4) / t) * z +
                    a5 / t + C(2) * y * z * (z - C(1)) / t,
                -C(2) * z * w * w / t + w * w / t - C(2) * z * w + (C(1) + (a5 + a4) / t) * w -
                    a3 - C(2) * y * (-w + C(2) * z * w + a3) / t};
            sys.printed_rhs = rhs;
            sys.divisors = {{"y+t", div_poly(y + t), 0}, {"y", div_poly(y), 1},
                            {"x-z", div_poly(x - z), 2}, {"w", div_poly(w), 3},
                            {"z-1", div_poly(z - C(1)), 4}, {"z", div_poly(z), 5}};
            for (const auto& d : sys.divisors) sys.guard_loci.push_back(d.f);
            sys.guard_loci.push_back(C.pv(nm.time));
            break;
        }
        case SystemId::B4: {
            RatFunc a0 = P(0), a1 = P(1), a2 = P(2), a3 = P(3);
            sys.hamiltonian = build_HIII(x, y, t, a0, a1) +
                              build_HIII(z, w, t, a0 + a1 + C(2) * a2 + a3, a3) +
                              C(2) * y * z * (z * w + a3) / t;
            RatFunc k = a0 + a1 + C(2) * a2 + C(2) * a3;
            std::array<RatFunc, 4> rhs = {
                (C(2) * x * x * y - x * x + (a0 + a1) * x + C(2) * a3 * z + C(2) * z * z * w) / t +
                    C(1),
                (-C(2) * x * y * y + C(2) * x * y - (a0 + a1) * y + a1) / t,
                (C(2) * z * z * w - z * z + k * z + C(2) * y * z * z) / t + C(1),
                (-C(2) * z * w * w + C(2) * z * w - k * w - C(2) * a3 * y - C(4) * y * z * w + a3) /
                    t};
            sys.printed_rhs = rhs;
            sys.divisors = {{"y-1", div_poly(y - C(1)), 0}, {"y", div_poly(y), 1},
                            {"x-z", div_poly(x - z), 2}, {"w", div_poly(w), 3}};
            for (const auto& d : sys.divisors) sys.guard_loci.push_back(d.f);
            sys.guard_loci.push_back(C.pv(nm.time));
            sys.guard_loci.push_back(div_poly(x));
            sys.guard_loci.push_back(div_poly(z));
            break;
        }
        case SystemId::D4_2: {
            RatFunc b1 = P(0), b2 = P(1), b3 = P(2), b4 = P(3);
            RatFunc k1 = C(1) - C(2) * b1 - C(2) * b2 - C(2) * b3;
            RatFunc k3 = C(1) - C(2) * b3;
            sys.hamiltonian = (x * x * y * y + k1 * x * y - x) / t + y +
                              (z * z * w * w + k3 * z * w) / t + w +
                              C(2) * y * z * (z * w + b2) / t;
            std::array<RatFunc, 4> rhs = {
                (C(2) * x * x * y + k1 * x + C(2) * z * (z * w + b2)) / t + C(1),
                (-C(2) * x * y * y - k1 * y + C(1)) / t,
                (C(2) * z * z * w + k3 * z) / t + C(1) + C(2) * y * z * z / t,
                (-C(2) * z * w * w - k3 * w - C(2) * b2 * y - C(4) * y * z * w) / t};
            sys.printed_rhs = rhs;
            sys.divisors = {{"x-z", div_poly(x - z), 0}, {"w", div_poly(w), 1}};
            for (const auto& d : sys.divisors) sys.guard_loci.push_back(d.f);
            sys.guard_loci.push_back(C.pv(nm.time));
            sys.guard_loci.push_back(div_poly(z));
            sys.guard_loci.push_back(div_poly(y));
            break;
        }
        case SystemId::B3: {
            RatFunc a0 = P(0), a1 = P(1), a2 = P(2);
            RatFunc m2 = a0 + a1 + C(2) * a2 - C(1);
            RatFunc m0 = a0 + a1 - C(1);
            sys.hamiltonian = x * x * y * y / t - m2 * x * y / t - x / t + y +
                              z * z * w * w / t - z * z * w + m0 * z * w / t - a1 * z -
                              C(2) * y * w / t;
            std::array<RatFunc, 4> rhs = {
                C(2) * x * x * y / t - m2 * x / t + C(1) - C(2) * w / t,
                -C(2) * x * y * y / t + m2 * y / t + C(1) / t,
                C(2) * z * z * w / t - z * z + m0 * z / t - C(2) * y / t,
                -C(2) * z * w * w / t + C(2) * z * w - m0 * w / t + a1};
            sys.printed_rhs = rhs;
            sys.guard_loci = {C.pv(nm.time), div_poly(w), div_poly(w - t), div_poly(x * z - C(1)),
                              div_poly(y)};
            break;
        }
        case SystemId::A4: {
            RatFunc A1 = P(1), A2 = P(2), A3 = P(3), A4 = P(4);
            RatFunc X = x, Y = y, Z = z, W = w, T = t;
            sys.hamiltonian = -X * X * Y + C(2) * X * Y * Y - C(2) * T * X * Y -
                              (C(2) * A2 + C(2) * A4) * Y - A1 * X - Z * Z * W +
                              C(2) * Z * W * W - C(2) * T * Z * W - C(2) * A4 * W - A3 * Z +
                              C(4) * Y * Z * W;
            std::array<RatFunc, 4> rhs = {
                -X * X + C(4) * X * Y + C(4) * Z * W - C(2) * T * X - C(2) * A2 - C(2) * A4,
                -C(2) * Y * Y + C(2) * X * Y + C(2) * T * Y + A1,
                -Z * Z + C(4) * Z * W + C(4) * Y * Z - C(2) * T * Z - C(2) * A4,
                -C(2) * W * W + C(2) * Z * W - C(4) * Y * W + C(2) * T * W + A3};
            sys.printed_rhs = rhs;
            sys.guard_loci = {div_poly(Y), div_poly(X - Z), div_poly(W), div_poly(Z),
                              div_poly(X - C(2) * Y - C(2) * W + C(2) * T)};
            break;
        }
    }
    return sys;
}

HamiltonianSystem build_system(SystemId id) {
    SystemNaming nm = default_naming(id);
    std::vector<std::string> names(nm.phase.begin(), nm.phase.end());
    names.push_back(nm.time);
    for (const auto& p : nm.params) names.push_back(p);
    return build_system_on(id, make_symbol_table(std::move(names)), nm);
}

std::array<RatFunc, 4> HamiltonianSystem::vector_field() const {
    const auto& H = hamiltonian;
    return {H.derivative(layout.phase[1]), -H.derivative(layout.phase[0]),
            H.derivative(layout.phase[3]), -H.derivative(layout.phase[2])};
}

Rational HamiltonianSystem::constraint_residual(const FullPoint& p) const {
    Rational acc(0);
    for (size_t i = 0; i < layout.params.size(); ++i)
        acc += param_space.weights[i] * p[layout.params[i].index];
    return acc - param_space.target;
}

FullPoint HamiltonianSystem::random_point_on_constraint(Rng& rng) const {
    FullPoint p(layout.table->size(), Rational(0));
    for (Var v : layout.phase) p[v.index] = rng.rational();
    p[layout.time.index] = rng.nonzero_rational();
    for (Var v : layout.params) p[v.index] = rng.rational();
    size_t pivot = 0;
    while (param_space.weights[pivot] == 0) ++pivot;
    Rational rest(0);
    for (size_t i = 0; i < layout.params.size(); ++i)
        if (i != pivot) rest += param_space.weights[i] * p[layout.params[i].index];
    p[layout.params[pivot].index] = (param_space.target - rest) / param_space.weights[pivot];
    return p;
}

bool check_invariant_divisor(const HamiltonianSystem& sys, const InvariantDivisor& d,
                             const Rational& condition_value) {
    const auto& lay = sys.layout;
    auto field = sys.vector_field();
    RatFunc f{d.f};
    // Lie derivative along the flow, t included (divisors like y+t need it)
    RatFunc L = f.derivative(lay.time);
    for (size_t i = 0; i < 4; ++i) L += f.derivative(lay.phase[i]) * field[i];

    // substitute the condition parameter and eliminate the constraint
    // against the first other parameter of nonzero weight
    size_t cond = d.param_index;
    size_t pivot = SIZE_MAX;
    for (size_t i = 0; i < lay.params.size(); ++i) {
        if (i != cond && sys.param_space.weights[i] != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot == SIZE_MAX) throw std::logic_error("no pivot parameter available");
    RatFunc pivot_expr = RatFunc::constant(
        lay.table, (sys.param_space.target - sys.param_space.weights[cond] * condition_value) /
                       sys.param_space.weights[pivot]);
    for (size_t i = 0; i < lay.params.size(); ++i) {
        if (i == cond || i == pivot || sys.param_space.weights[i] == 0) continue;
        pivot_expr -= RatFunc::variable(lay.table, lay.params[i]) *
                      RatFunc::constant(lay.table,
                                        sys.param_space.weights[i] / sys.param_space.weights[pivot]);
    }
    std::map<uint32_t, RatFunc> bind;
    bind.emplace(lay.params[cond].index, RatFunc::constant(lay.table, condition_value));
    bind.emplace(lay.params[pivot].index, pivot_expr);
    RatFunc Ls = L.substitute(bind);

    // denominator must be a pure t-power (times a constant)
    for (const auto& [e, c] : Ls.den().terms()) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0 && Var{static_cast<uint32_t>(i)} != lay.time)
                throw std::logic_error("invariant divisor: unexpected denominator");
        }
    }
    return divides(d.f, Ls.num());
}

std::string render_system(const HamiltonianSystem& sys) {
    std::ostringstream out;
    const auto& nmv = sys.layout;
    out << "system " << system_name(sys.id) << "\n";
    out << "H = " << sys.hamiltonian.to_string() << "\n";
    auto field = sys.vector_field();
    static const char* comp[4] = {"d/dt[0]", "d/dt[1]", "d/dt[2]", "d/dt[3]"};
    for (size_t i = 0; i < 4; ++i) {
        out << comp[i] << " " << nmv.table->name(nmv.phase[i]) << "' = " << field[i].to_string()
            << "\n";
    }
    out << "constraint =";
    for (size_t i = 0; i < sys.param_space.weights.size(); ++i)
        out << " " << sys.param_space.weights[i].get_str() << "*"
            << nmv.table->name(nmv.params[i]);
    out << " = " << sys.param_space.target.get_str() << "\n";
    return out.str();
}

}  // namespace painleve
