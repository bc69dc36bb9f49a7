#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "painleve/verify.hpp"

using namespace painleve;

namespace {
const SystemId kAll[] = {SystemId::D5, SystemId::B4, SystemId::D4_2, SystemId::B3, SystemId::A4};
const DegenerationId kSchemes[] = {DegenerationId::D5toA4, DegenerationId::D5toB4,
                                   DegenerationId::D42toB3};
}  // namespace

TEST_CASE("every cataloged generator conjugates its vector field") {
    for (SystemId id : kAll) {
        auto sys = build_system(id);
        GeneratorCatalog cat(sys);
        for (const auto& name : cat.generator_order()) {
            CAPTURE(system_name(id));
            CAPTURE(name);
            Rng rng = Rng::derive(0, "symmetry/" + system_name(id) + "/" + name);
            CHECK(check_symmetry(cat.generator(name), sys, 5, rng) == Ternary::True);
        }
    }
}

TEST_CASE("symmetry negative control: corrupted parameter action fails") {
    auto sys = build_system(SystemId::D5);
    GeneratorCatalog cat(sys);
    BirationalMap broken = cat.generator("s3");
    broken.param_action = ParamMap::identity(6);
    Rng rng = Rng::derive(0, "symmetry-negative/d5/s3");
    CHECK(check_symmetry(broken, sys, 5, rng) == Ternary::False);
}

TEST_CASE("holomorphy charts: every atlas chart transforms to a polynomial system") {
    for (SystemId id : {SystemId::D5, SystemId::B4, SystemId::D4_2}) {
        auto sys = build_system(id);
        auto atlas = build_atlas(sys);
        size_t expected = (id == SystemId::D5) ? 6 : (id == SystemId::B4 ? 5 : 4);
        CHECK(atlas.charts.size() == expected);
        for (const auto& chart : atlas.charts) {
            CAPTURE(system_name(id));
            CAPTURE(chart.name);
            Rng rng = Rng::derive(0, "charts/" + system_name(id) + "/" + chart.name);
            CHECK(check_chart(sys, chart, rng, 8, 2));
        }
    }
}

TEST_CASE("identity chart is trivially polynomial") {
    auto sys = build_system(SystemId::D5);
    const auto& lay = sys.layout;
    Chart identity;
    identity.name = "identity";
    for (size_t i = 0; i < 4; ++i) {
        identity.forward[i] = RatFunc::variable(lay.table, lay.phase[i]);
        identity.inverse[i] = RatFunc::variable(lay.table, lay.phase[i]);
    }
    Rng rng = Rng::derive(0, "charts/d5/identity");
    CHECK(check_chart(sys, identity, rng, 8, 2));
}

TEST_CASE("chart negative control: dropping the parameter correction breaks polynomiality") {
    auto sys = build_system(SystemId::D5);
    const auto& lay = sys.layout;
    auto C = [&](long c) { return RatFunc::constant(lay.table, Rational(c)); };
    auto V = [&](size_t i) { return RatFunc::variable(lay.table, lay.phase[i]); };
    RatFunc x = V(0), y = V(1), z = V(2), w = V(3);
    // chart3 without the +a3 correction; still birational, not adapted
    Chart broken;
    broken.name = "chart3-no-correction";
    broken.forward = {x, y, C(1) / z, -(w * z) * z};
    broken.inverse = {x, y, C(1) / z, -w * z * z};
    Rng rng = Rng::derive(0, "charts/d5/chart3-no-correction");
    CHECK_FALSE(check_chart(sys, broken, rng, 8, 2));
}

TEST_CASE("chart with a wrong inverse is rejected as non-birational") {
    auto sys = build_system(SystemId::D5);
    auto atlas = build_atlas(sys);
    Chart bad = atlas.charts[3];
    bad.inverse[2] = bad.inverse[2] + RatFunc::constant(sys.layout.table, Rational(1));
    Rng rng = Rng::derive(0, "charts/d5/bad-inverse");
    CHECK_THROWS_AS(check_chart(sys, bad, rng, 8, 2), std::domain_error);
}

TEST_CASE("degeneration substitutions invert exactly") {
    for (DegenerationId id : kSchemes) {
        auto sch = build_degeneration(id);
        CAPTURE(degeneration_name(id));
        std::map<uint32_t, RatFunc> bind = sch.var_subst;
        for (const auto& [idx, expr] : sch.param_subst) bind.emplace(idx, expr);
        // inverse coordinates composed with the forward substitution give
        // back the target symbols, identically
        for (size_t j = 0; j < 4; ++j) {
            RatFunc back = sch.inverse_vars[j].substitute(bind);
            CHECK(RatFunc::identical(back,
                                     RatFunc::variable(sch.table, sch.target.layout.phase[j])));
        }
        RatFunc back_t = sch.inverse_time.substitute(bind);
        CHECK(RatFunc::identical(back_t,
                                 RatFunc::variable(sch.table, sch.target.layout.time)));
        // parameters: inverse(param_subst) is the identity on target params
        std::map<uint32_t, RatFunc> pbind = sch.param_subst;
        for (size_t k = 0; k < sch.inverse_params.size(); ++k) {
            RatFunc back_p = sch.inverse_params[k].substitute(pbind);
            CHECK(RatFunc::identical(
                back_p, RatFunc::variable(sch.table, sch.target.layout.params[k])));
        }
        if (sch.has_eps) {
            RatFunc eps_back = sch.inverse_eps.substitute(pbind);
            RatFunc eps_var = RatFunc::variable(sch.table, sch.eps);
            RatFunc expect = sch.inverse_eps_is_squared ? eps_var * eps_var : eps_var;
            CHECK(RatFunc::identical(eps_back, expect));
        }
    }
}

TEST_CASE("constraint transport holds symbolically for all three schemes") {
    for (DegenerationId id : kSchemes) {
        CAPTURE(degeneration_name(id));
        CHECK(check_constraint_transport(build_degeneration(id)));
    }
}

TEST_CASE("variable substitutions are symplectic") {
    for (DegenerationId id : kSchemes) {
        CAPTURE(degeneration_name(id));
        auto sch = build_degeneration(id);
        Rng rng = Rng::derive(0, "symplectic/" + degeneration_name(id));
        CHECK(check_symplectic(sch, 5, rng));
    }
}

TEST_CASE("degeneration limits match the target systems") {
    SUBCASE("coupled V to the A4 system, eps^0 at seeded points") {
        auto sch = build_degeneration(DegenerationId::D5toA4);
        Rng rng = Rng::derive(0, "degeneration/d5_to_a4");
        std::string note;
        bool ok = check_degeneration(sch, 4, 6, rng, &note);
        CAPTURE(note);
        CHECK(ok);
    }
    SUBCASE("coupled V to the B4 system, eps^0 at seeded points") {
        auto sch = build_degeneration(DegenerationId::D5toB4);
        Rng rng = Rng::derive(0, "degeneration/d5_to_b4");
        std::string note;
        bool ok = check_degeneration(sch, 4, 6, rng, &note);
        CAPTURE(note);
        CHECK(ok);
    }
    SUBCASE("D4(2) to B3 is an exact reduction, fully symbolic") {
        auto sch = build_degeneration(DegenerationId::D42toB3);
        Rng rng = Rng::derive(0, "degeneration/d4_2_to_b3");
        std::string note;
        bool ok = check_degeneration(sch, 1, 6, rng, &note);
        CAPTURE(note);
        CHECK(ok);
    }
}

TEST_CASE("subgroup limits: every entry of every scheme") {
    for (DegenerationId id : kSchemes) {
        auto sch = build_degeneration(id);
        GeneratorCatalog src(sch.source), tgt(sch.target);
        for (const auto& entry : sch.subgroup) {
            CAPTURE(degeneration_name(id));
            CAPTURE(entry.name);
            Rng rng =
                Rng::derive(0, "subgroup/" + degeneration_name(id) + "/" + entry.name);
            std::string note;
            bool ok = check_subgroup_entry(sch, src, tgt, entry, 3, 6, rng, &note);
            CAPTURE(note);
            CHECK(ok);
        }
    }
}

TEST_CASE("subgroup negative control: wrong eps branch fails") {
    auto sch = build_degeneration(DegenerationId::D5toA4);
    GeneratorCatalog src(sch.source), tgt(sch.target);
    SubgroupEntry broken = sch.subgroup[3];  // S3
    REQUIRE(broken.name == "S3");
    broken.eps_choice.prefactor = -broken.eps_choice.prefactor;  // other branch
    Rng rng = Rng::derive(0, "subgroup-negative/d5_to_a4/S3");
    std::string note;
    CHECK_FALSE(check_subgroup_entry(sch, src, tgt, broken, 2, 6, rng, &note));
}
