#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "painleve/numeric.hpp"
#include "painleve/weyl.hpp"

using namespace painleve;

namespace {

std::vector<Rational> d5_params() {
    // a0 solved from the constraint
    return {make_rational(3, 8),  make_rational(1, 8),  make_rational(1, 16),
            make_rational(1, 16), make_rational(1, 8),  make_rational(1, 8)};
}

std::vector<Rational> a4_params() {
    return {make_rational(1, 5), make_rational(1, 5), make_rational(1, 5), make_rational(1, 5),
            make_rational(1, 5)};
}

}  // namespace

TEST_CASE("zero-length integration returns the initial state") {
    auto d5 = build_system(SystemId::D5);
    NumericSystem num(d5, d5_params());
    FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 1.0};
    auto traj = integrate(num, s0, 1.0, 1.0);
    CHECK(traj.states.front() == traj.states.back());
    CHECK(traj.times.back() == 1.0);
}

TEST_CASE("A4 run is self-consistent under tolerance tightening") {
    auto a4 = build_system(SystemId::A4);
    NumericSystem num(a4, a4_params());
    FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 0.0};
    IntegrateOptions loose;
    loose.rel_tol = 1e-10;
    IntegrateOptions tight;
    tight.rel_tol = 1e-12;
    auto t1 = integrate(num, s0, 0.0, 1.0, loose);
    auto t2 = integrate(num, s0, 0.0, 1.0, tight);
    for (size_t i = 0; i < 4; ++i)
        CHECK(std::abs(t1.states.back()[i] - t2.states.back()[i]) <= 1e-8);
}

TEST_CASE("constraint violation is rejected, not repaired") {
    auto a4 = build_system(SystemId::A4);
    auto bad = a4_params();
    bad[0] += make_rational(1, 1000);
    CHECK_THROWS_AS(NumericSystem(a4, bad), std::invalid_argument);
}

TEST_CASE("time interval through t=0 is rejected for time-singular systems") {
    auto d5 = build_system(SystemId::D5);
    NumericSystem num(d5, d5_params());
    FloatState s0{{-0.41, 0.33, 0.32, 0.42}, -1.0};
    CHECK_THROWS_AS(integrate(num, s0, -1.0, 1.0, {}), std::invalid_argument);
}

TEST_CASE("invariant surface y=0 is numerically invariant for D5 with a1=0") {
    auto d5 = build_system(SystemId::D5);
    std::vector<Rational> p = d5_params();
    p[0] += p[1];  // keep the constraint while zeroing a1
    p[1] = 0;
    NumericSystem num(d5, p);
    FloatState s0{{-0.41, 0.0, 0.32, 0.42}, 1.0};
    IntegrateOptions opt;
    opt.samples = 65;
    auto traj = integrate(num, s0, 1.0, 2.0, opt);
    double worst = 0;
    for (const auto& st : traj.states) worst = std::max(worst, std::abs(st[1]));
    CHECK(worst <= 1e-9);
}

TEST_CASE("flow commutation for a reflection, a time-reversal map and a diagram rotation") {
    SUBCASE("D5 s3") {
        auto d5 = build_system(SystemId::D5);
        GeneratorCatalog cat(d5);
        FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 1.0};
        double err = flow_commutation_error(cat.generator("s3"), d5, d5_params(), s0, 1.0, 2.0);
        CHECK(err <= 1e-6);
    }
    SUBCASE("B4 s4 reverses time") {
        auto b4 = build_system(SystemId::B4);
        GeneratorCatalog cat(b4);
        std::vector<Rational> p = {make_rational(1, 4), make_rational(1, 8), make_rational(1, 16),
                                   make_rational(1, 8), make_rational(1, 8)};
        FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 1.0};
        double err = flow_commutation_error(cat.generator("s4"), b4, p, s0, 1.0, 2.0);
        CHECK(err <= 1e-6);
    }
    SUBCASE("A4 s1 over T in [0,1]") {
        auto a4 = build_system(SystemId::A4);
        GeneratorCatalog cat(a4);
        FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 0.0};
        double err = flow_commutation_error(cat.generator("s1"), a4, a4_params(), s0, 0.0, 1.0);
        CHECK(err <= 1e-6);
    }
    SUBCASE("identity map commutes to integrator accuracy") {
        auto d5 = build_system(SystemId::D5);
        GeneratorCatalog cat(d5);
        BirationalMap ident = cat.generator("s3");
        ident.phase_images[2] = RatFunc::variable(d5.layout.table, d5.layout.phase[2]);
        ident.param_action = ParamMap::identity(6);
        FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 1.0};
        double err = flow_commutation_error(ident, d5, d5_params(), s0, 1.0, 2.0);
        CHECK(err <= 1e-8);
    }
}

TEST_CASE("flow commutation negative control: corrupted parameter action") {
    auto d5 = build_system(SystemId::D5);
    GeneratorCatalog cat(d5);
    BirationalMap broken = cat.generator("s3");
    broken.param_action = ParamMap::identity(6);
    FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 1.0};
    double err = flow_commutation_error(broken, d5, d5_params(), s0, 1.0, 2.0);
    CHECK(err > 1e-3);
}

TEST_CASE("riccati reduction") {
    SUBCASE("D5 with a1=0 reduces (z,w) to the second-order V system") {
        auto d5 = build_system(SystemId::D5);
        std::vector<Rational> p = d5_params();
        p[0] += p[1];
        p[1] = 0;
        NumericSystem num(d5, p);
        FloatState s0{{-0.41, 0.0, 0.32, 0.42}, 1.0};
        IntegrateOptions opt;
        opt.samples = 65;
        auto traj = integrate(num, s0, 1.0, 2.0, opt);
        CHECK(riccati_residual(d5, p, traj) <= 1e-8);
    }
    SUBCASE("B4 with a1=0 reduces (z,w) to the second-order III system") {
        auto b4 = build_system(SystemId::B4);
        std::vector<Rational> p = {make_rational(3, 8), Rational(0), make_rational(1, 16),
                                   make_rational(1, 8), make_rational(1, 8)};
        NumericSystem num(b4, p);
        FloatState s0{{-0.41, 0.0, 0.32, 0.42}, 1.0};
        IntegrateOptions opt;
        opt.samples = 65;
        auto traj = integrate(num, s0, 1.0, 2.0, opt);
        CHECK(riccati_residual(b4, p, traj) <= 1e-8);
    }
    SUBCASE("violated condition is an error") {
        auto d5 = build_system(SystemId::D5);
        std::vector<Rational> p = d5_params();
        p[0] += p[1];
        p[1] = 0;
        NumericSystem num(d5, p);
        FloatState s0{{-0.41, 0.1, 0.32, 0.42}, 1.0};
        auto traj = integrate(num, s0, 1.0, 2.0, {});
        CHECK_THROWS_AS(riccati_residual(d5, p, traj), std::invalid_argument);
    }
}

TEST_CASE("dH/dt matches the symbolic partial along solutions") {
    auto d5 = build_system(SystemId::D5);
    NumericSystem num(d5, d5_params());
    FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 1.0};
    IntegrateOptions opt;
    opt.samples = 257;
    auto traj = integrate(num, s0, 1.0, 2.0, opt);
    CHECK(energy_identity_error(num, traj) <= 1e-6);
}

TEST_CASE("tightening rel_tol by 1e-2 improves self-consistency by >= 10x") {
    auto d5 = build_system(SystemId::D5);
    NumericSystem num(d5, d5_params());
    FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 1.0};
    auto endpoint = [&](double tol) {
        IntegrateOptions opt;
        opt.rel_tol = tol;
        opt.abs_tol = tol * 1e-2;
        return integrate(num, s0, 1.0, 2.0, opt).states.back();
    };
    auto e6 = endpoint(1e-6), e8 = endpoint(1e-8), e10 = endpoint(1e-10);
    double d68 = 0, d810 = 0;
    for (size_t i = 0; i < 4; ++i) {
        d68 = std::max(d68, std::abs(e6[i] - e8[i]));
        d810 = std::max(d810, std::abs(e8[i] - e10[i]));
    }
    CHECK(d68 / std::max(d810, 1e-300) >= 10.0);
}

TEST_CASE("trajectory CSV export is deterministic with the expected header") {
    auto a4 = build_system(SystemId::A4);
    NumericSystem num(a4, a4_params());
    FloatState s0{{-0.41, 0.33, 0.32, 0.42}, 0.0};
    IntegrateOptions opt;
    opt.samples = 5;
    auto traj = integrate(num, s0, 0.0, 1.0, opt);
    std::string csv = trajectory_csv(traj);
    CHECK(csv.rfind("t,x,y,z,w\n", 0) == 0);
    CHECK(csv == trajectory_csv(traj));
    size_t rows = 0;
    for (char c : csv) rows += (c == '\n');
    CHECK(rows == 6);  // header + 5 samples
}
