#include "painleve/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "painleve/numeric.hpp"
#include "painleve/verify.hpp"

namespace painleve {

namespace {

std::string join_word(const std::vector<std::string>& w, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) out += (i ? sep : "") + w[i];
    return out;
}

std::string fmt_shift(const std::vector<Rational>& shift) {
    std::string out = "(";
    for (size_t i = 0; i < shift.size(); ++i) out += (i ? "," : "") + shift[i].get_str();
    return out + ")";
}

std::string fmt_double(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

struct Runner {
    const SuiteConfig& cfg;
    VerificationReport report;

    Rng rng_for(const std::string& id) const { return Rng::derive(cfg.seed, id); }

    void add(std::string id, std::string claim, CheckStatus status, std::string detail = "") {
        report.add({std::move(id), std::move(claim), status, std::move(detail)});
    }

    void run_relations(const HamiltonianSystem& sys, const GeneratorCatalog& cat) {
        const std::string sysname = system_name(sys.id);
        for (const auto& rel : cat.presentation().relations) {
            std::string wordtxt = join_word(rel.word, "-");
            std::string id = "relations/" + sysname + "/" + wordtxt + "^" +
                             std::to_string(rel.order);
            RelationOutcome res = check_relation(cat, rel, cfg.points, cfg.seed, id);
            std::string claim = "(" + join_word(rel.word, " ") + ")^" +
                                std::to_string(rel.order) + " = 1";
            if (res.holds == Ternary::False) {
                add(id, claim, CheckStatus::Fail);
            } else if (res.holds == Ternary::Indeterminate) {
                add(id, claim, CheckStatus::Indeterminate, "resampling budget exhausted");
            } else if (res.non_minimal_power) {
                // minimality is a sanity signal, not a stated claim
                add(id, claim, CheckStatus::Warning,
                    "order is not minimal: word^" + std::to_string(*res.non_minimal_power) +
                        " = 1");
            } else {
                add(id, claim, CheckStatus::Pass);
            }
        }
    }

    void run_symmetry(const HamiltonianSystem& sys, const GeneratorCatalog& cat) {
        const std::string sysname = system_name(sys.id);
        // double-entry bookkeeping first: derived field vs printed system
        {
            std::string id = "symmetry/" + sysname + "/rhs-coherence";
            Rng rng = rng_for(id);
            auto field = sys.vector_field();
            bool ok = true;
            int done = 0, guard = 0;
            while (done < cfg.points && ok) {
                if (++guard > cfg.points + 200) break;
                FullPoint p = sys.random_point_on_constraint(rng);
                bool unlucky = false;
                for (size_t i = 0; i < 4; ++i) {
                    auto lhs = field[i].eval(p);
                    auto rhs = (*sys.printed_rhs)[i].eval(p);
                    if (!lhs || !rhs) {
                        unlucky = true;
                        break;
                    }
                    if (*lhs != *rhs) ok = false;
                }
                if (!unlucky) ++done;
            }
            add(id, "canonically derived vector field equals the printed system",
                ok && done == cfg.points ? CheckStatus::Pass : CheckStatus::Fail);
        }
        for (const auto& name : cat.generator_order()) {
            std::string id = "symmetry/" + sysname + "/" + name;
            Rng rng = rng_for(id);
            Ternary res = check_symmetry(cat.generator(name), sys, cfg.points, rng);
            CheckStatus st = res == Ternary::True
                                 ? CheckStatus::Pass
                                 : (res == Ternary::False ? CheckStatus::Fail
                                                          : CheckStatus::Indeterminate);
            add(id, name + " conjugates the vector field (Backlund symmetry)", st);
        }
    }

    void run_divisors(const HamiltonianSystem& sys) {
        const std::string sysname = system_name(sys.id);
        for (const auto& d : sys.divisors) {
            std::string id = "divisors/" + sysname + "/" + d.label;
            bool ok = check_invariant_divisor(sys, d);
            add(id,
                d.label + " divides its Lie derivative once " +
                    sys.layout.table->name(sys.layout.params[d.param_index]) + " = 0",
                ok ? CheckStatus::Pass : CheckStatus::Fail);
        }
    }

    void run_charts(const HamiltonianSystem& sys) {
        if (sys.id != SystemId::D5 && sys.id != SystemId::B4 && sys.id != SystemId::D4_2) return;
        const std::string sysname = system_name(sys.id);
        auto atlas = build_atlas(sys);
        for (const auto& chart : atlas.charts) {
            std::string id = "charts/" + sysname + "/" + chart.name;
            Rng rng = rng_for(id);
            try {
                bool ok = check_chart(sys, chart, rng);
                add(id, chart.name + " keeps the system polynomial (degree bound 8)",
                    ok ? CheckStatus::Pass : CheckStatus::Fail);
            } catch (const std::exception& e) {
                add(id, chart.name + " keeps the system polynomial (degree bound 8)",
                    CheckStatus::Fail, e.what());
            }
        }
    }

    void run_translations(const HamiltonianSystem& sys, const GeneratorCatalog& cat) {
        const std::string sysname = system_name(sys.id);
        for (const auto& t : cat.translations()) {
            std::string id = "translations/" + sysname + "/" + t.name;
            auto shift = cat.translation_shift(t);
            if (!shift) {
                add(id, t.name + " = " + join_word(t.word, " ") + " is a pure translation",
                    CheckStatus::Fail, "parameter action is not a translation on the plane");
                continue;
            }
            if (t.expected_shift) {
                bool ok = *shift == *t.expected_shift;
                add(id,
                    t.name + " shifts the parameters by " + fmt_shift(*t.expected_shift),
                    ok ? CheckStatus::Pass : CheckStatus::Fail,
                    ok ? "" : "computed shift " + fmt_shift(*shift));
            } else {
                add(id, t.name + " is a pure translation; shift derived, not asserted",
                    CheckStatus::Pass, "computed shift " + fmt_shift(*shift));
            }
        }
    }

    void run_degenerations(const DegenerationScheme& sch) {
        const std::string name = degeneration_name(sch.id);
        {
            std::string id = "degenerations/" + name + "/system-limit";
            Rng rng = rng_for(id);
            std::string note;
            bool ok = false;
            try {
                ok = check_degeneration(sch, cfg.points, cfg.series_order, rng, &note);
            } catch (const std::exception& e) {
                note = e.what();
            }
            add(id,
                sch.has_eps
                    ? "transformed system has no eps poles and its eps^0 part is the target"
                    : "transformed system equals the target exactly (symbolic)",
                ok ? CheckStatus::Pass : CheckStatus::Fail, note);
        }
        {
            std::string id = "degenerations/" + name + "/constraint-transport";
            bool ok = check_constraint_transport(sch);
            add(id, "parameter substitution carries the constraint plane to the target plane",
                ok ? CheckStatus::Pass : CheckStatus::Fail);
        }
        {
            std::string id = "degenerations/" + name + "/symplectic";
            Rng rng = rng_for(id);
            bool ok = check_symplectic(sch, cfg.points, rng);
            add(id, "variable substitution preserves dx^dy + dz^dw",
                ok ? CheckStatus::Pass : CheckStatus::Fail);
        }
    }

    void run_subgroup_limits(const DegenerationScheme& sch) {
        const std::string name = degeneration_name(sch.id);
        GeneratorCatalog src(sch.source), tgt(sch.target);
        for (const auto& entry : sch.subgroup) {
            std::string id = "subgroup-limits/" + name + "/" + entry.name;
            Rng rng = rng_for(id);
            std::string note;
            bool ok = false;
            try {
                ok = check_subgroup_entry(sch, src, tgt, entry, cfg.points, cfg.series_order,
                                          rng, &note);
            } catch (const std::exception& e) {
                note = e.what();
            }
            add(id,
                entry.name + " = " + join_word(entry.source_word, " ") + " degenerates to " +
                    entry.target_generator,
                ok ? CheckStatus::Pass : CheckStatus::Fail, note);
        }
    }

    // seeded start in the box [-0.6, 0.6]^4 at hundredth resolution
    FloatState random_start(Rng& rng, double t0) const {
        FloatState s;
        for (auto& c : s.phase) c = static_cast<double>(rng.uniform(-60, 60)) / 100.0;
        s.t = t0;
        return s;
    }

    std::vector<Rational> seeded_params(const HamiltonianSystem& sys, Rng& rng,
                                        int zero_index = -1) const {
        std::vector<Rational> p(sys.layout.params.size());
        for (auto& v : p) v = make_rational(rng.uniform(-8, 8), 16);
        if (zero_index >= 0) p[static_cast<size_t>(zero_index)] = 0;
        size_t pivot = 0;
        while (sys.param_space.weights[pivot] == 0 ||
               static_cast<int>(pivot) == zero_index)
            ++pivot;
        Rational rest(0);
        for (size_t i = 0; i < p.size(); ++i)
            if (i != pivot) rest += sys.param_space.weights[i] * p[i];
        p[pivot] = (sys.param_space.target - rest) / sys.param_space.weights[pivot];
        return p;
    }

    void run_numeric(const HamiltonianSystem& sys, const GeneratorCatalog& cat) {
        const std::string sysname = system_name(sys.id);
        const double t0 = (sys.id == SystemId::A4) ? 0.0 : 1.0;
        const double t1 = (sys.id == SystemId::A4) ? 1.0 : 2.0;
        IntegrateOptions opt;
        opt.rel_tol = cfg.rel_tol;
        opt.abs_tol = cfg.rel_tol * 1e-2;

        // flow commutation for every generator at 3 generic starts
        for (const auto& gname : cat.generator_order()) {
            std::string id = "numeric/" + sysname + "/flow-commutation/" + gname;
            Rng rng = rng_for(id);
            int good = 0, attempts = 0;
            double worst = 0;
            bool failed = false;
            while (good < 3 && attempts < 60 && !failed) {
                ++attempts;
                auto params = seeded_params(sys, rng);
                FloatState s0 = random_start(rng, t0);
                // a start whose image lands far outside the integration box
                // has no error headroom left at this tolerance
                auto mapped = map_state(cat.generator(gname), sys, params, s0);
                if (!mapped) continue;
                bool wild = false;
                for (double c : mapped->phase) wild = wild || std::abs(c) > 50.0;
                if (wild) continue;
                try {
                    double err =
                        flow_commutation_error(cat.generator(gname), sys, params, s0, t0, t1, opt);
                    worst = std::max(worst, err);
                    if (err > 1e-6)
                        failed = true;
                    else
                        ++good;
                } catch (const std::exception&) {
                    // movable pole or undefined map value: try another start
                }
            }
            std::string claim =
                gname + " maps solutions to solutions (two-path error <= 1e-6 at 3 starts)";
            if (failed)
                add(id, claim, CheckStatus::Fail, "error " + fmt_double(worst));
            else if (good < 3)
                add(id, claim, CheckStatus::Indeterminate, "start sampling budget exhausted");
            else
                add(id, claim, CheckStatus::Pass, "max error " + fmt_double(worst));
            export_commutation_trajectory(sys, gname, opt, t0, t1);
        }

        // negative control: a corrupted parameter action must be detected
        {
            std::string id = "numeric/" + sysname + "/flow-commutation-negative-control";
            Rng rng = rng_for(id);
            std::string gname;
            size_t own_param = 3;  // the reflection's own parameter must be nonzero
            switch (sys.id) {
                case SystemId::D5: gname = "s3"; break;
                case SystemId::B4: gname = "s3"; break;
                case SystemId::D4_2: gname = "w2"; own_param = 1; break;
                case SystemId::B3: gname = "s1"; own_param = 1; break;
                case SystemId::A4: gname = "s3"; break;
            }
            BirationalMap broken = cat.generator(gname);
            broken.param_action = ParamMap::identity(sys.layout.params.size());
            int attempts = 0;
            std::optional<double> err;
            while (!err && attempts < 60) {
                ++attempts;
                auto params = seeded_params(sys, rng);
                if (params[own_param] == 0) continue;
                FloatState s0 = random_start(rng, t0);
                try {
                    err = flow_commutation_error(broken, sys, params, s0, t0, t1, opt);
                } catch (const std::exception&) {
                }
            }
            std::string claim = "corrupted " + gname + " parameter action is detected (> 1e-3)";
            if (!err)
                add(id, claim, CheckStatus::Indeterminate, "start sampling budget exhausted");
            else
                add(id, claim, *err > 1e-3 ? CheckStatus::Pass : CheckStatus::Fail,
                    "error " + fmt_double(*err));
        }

        // invariant-divisor surfaces stay put numerically
        for (const auto& d : sys.divisors) {
            std::string id = "numeric/" + sysname + "/divisor-invariance/" + d.label;
            Rng rng = rng_for(id);
            int attempts = 0;
            std::optional<double> worst;
            while (!worst && attempts < 60) {
                ++attempts;
                auto params = seeded_params(sys, rng, static_cast<int>(d.param_index));
                FloatState s0 = random_start(rng, t0);
                place_on_divisor(d, s0);
                try {
                    NumericSystem num(sys, params);
                    IntegrateOptions dense = opt;
                    dense.samples = 65;
                    auto traj = integrate(num, s0, t0, t1, dense);
                    double m = 0;
                    std::vector<double> vals(sys.layout.table->size(), 0.0);
                    for (size_t k = 0; k < traj.times.size(); ++k) {
                        for (size_t i = 0; i < 4; ++i)
                            vals[sys.layout.phase[i].index] = traj.states[k][i];
                        vals[sys.layout.time.index] = traj.times[k];
                        m = std::max(m, std::abs(d.f.eval_double(vals)));
                    }
                    worst = m;
                } catch (const std::exception&) {
                }
            }
            std::string claim = "surface " + d.label + " = 0 stays within 1e-9 when " +
                                sys.layout.table->name(sys.layout.params[d.param_index]) +
                                " = 0";
            if (!worst)
                add(id, claim, CheckStatus::Indeterminate, "start sampling budget exhausted");
            else
                add(id, claim, *worst <= 1e-9 ? CheckStatus::Pass : CheckStatus::Fail,
                    "max |f| " + fmt_double(*worst));
        }

        // second-order reduction on y = 0
        if (sys.id == SystemId::D5 || sys.id == SystemId::B4) {
            std::string id = "numeric/" + sysname + "/riccati-reduction";
            Rng rng = rng_for(id);
            int attempts = 0;
            std::optional<double> res;
            while (!res && attempts < 60) {
                ++attempts;
                auto params = seeded_params(sys, rng, 1);
                FloatState s0 = random_start(rng, t0);
                s0.phase[1] = 0.0;
                try {
                    NumericSystem num(sys, params);
                    IntegrateOptions dense = opt;
                    dense.samples = 65;
                    auto traj = integrate(num, s0, t0, t1, dense);
                    res = riccati_residual(sys, params, traj);
                } catch (const std::exception&) {
                }
            }
            std::string claim =
                "(z,w) solves the standalone second-order system on y=0 (residual <= 1e-8)";
            if (!res)
                add(id, claim, CheckStatus::Indeterminate, "start sampling budget exhausted");
            else
                add(id, claim, *res <= 1e-8 ? CheckStatus::Pass : CheckStatus::Fail,
                    "residual " + fmt_double(*res));
        }

        // dH/dt chain-rule identity and integrator order sanity
        {
            std::string id = "numeric/" + sysname + "/energy-identity";
            Rng rng = rng_for(id);
            int attempts = 0;
            std::optional<double> res;
            while (!res && attempts < 60) {
                ++attempts;
                auto params = seeded_params(sys, rng);
                FloatState s0 = random_start(rng, t0);
                try {
                    NumericSystem num(sys, params);
                    IntegrateOptions dense = opt;
                    dense.samples = 257;
                    auto traj = integrate(num, s0, t0, t1, dense);
                    res = energy_identity_error(num, traj);
                } catch (const std::exception&) {
                }
            }
            std::string claim = "dH/dt along solutions equals the symbolic time partial (<= 1e-6)";
            if (!res)
                add(id, claim, CheckStatus::Indeterminate, "start sampling budget exhausted");
            else
                add(id, claim, *res <= 1e-6 ? CheckStatus::Pass : CheckStatus::Fail,
                    "max relative error " + fmt_double(*res));
        }
        {
            std::string id = "numeric/" + sysname + "/order-check";
            Rng rng = rng_for(id);
            int attempts = 0;
            std::optional<double> ratio;
            while (!ratio && attempts < 60) {
                ++attempts;
                auto params = seeded_params(sys, rng);
                FloatState s0 = random_start(rng, t0);
                try {
                    NumericSystem num(sys, params);
                    auto endpoint = [&](double tol) {
                        IntegrateOptions o = opt;
                        o.rel_tol = tol;
                        o.abs_tol = tol * 1e-2;
                        o.samples = 3;
                        return integrate(num, s0, t0, t1, o).states.back();
                    };
                    auto e6 = endpoint(1e-6), e8 = endpoint(1e-8), e10 = endpoint(1e-10);
                    double d68 = 0, d810 = 0;
                    for (size_t i = 0; i < 4; ++i) {
                        d68 = std::max(d68, std::abs(e6[i] - e8[i]));
                        d810 = std::max(d810, std::abs(e8[i] - e10[i]));
                    }
                    if (d68 > 1e-14) ratio = d68 / std::max(d810, 1e-300);
                } catch (const std::exception&) {
                }
            }
            std::string claim = "tightening rel_tol by 1e-2 improves self-consistency >= 10x";
            if (!ratio)
                add(id, claim, CheckStatus::Indeterminate, "start sampling budget exhausted");
            else
                add(id, claim, *ratio >= 10.0 ? CheckStatus::Pass : CheckStatus::Fail,
                    "ratio " + fmt_double(*ratio));
        }
    }

    void place_on_divisor(const InvariantDivisor& d, FloatState& s) const {
        // the cataloged divisors are linear in one phase variable
        if (d.label == "y" ) s.phase[1] = 0.0;
        else if (d.label == "y+t") s.phase[1] = -s.t;
        else if (d.label == "y-1") s.phase[1] = 1.0;
        else if (d.label == "x-z") s.phase[0] = s.phase[2];
        else if (d.label == "w") s.phase[3] = 0.0;
        else if (d.label == "z-1") s.phase[2] = 1.0;
        else if (d.label == "z") s.phase[2] = 0.0;
        else throw std::logic_error("no placement rule for divisor " + d.label);
    }

    void export_commutation_trajectory(const HamiltonianSystem& sys, const std::string& gname,
                                       const IntegrateOptions& opt, double t0, double t1) {
        if (cfg.export_dir.empty()) return;
        std::string id = "numeric/" + system_name(sys.id) + "/flow-commutation/" + gname;
        Rng rng = rng_for(id + "/export");
        for (int attempt = 0; attempt < 60; ++attempt) {
            auto params = seeded_params(sys, rng);
            FloatState s0 = random_start(rng, t0);
            try {
                NumericSystem num(sys, params);
                auto traj = integrate(num, s0, t0, t1, opt);
                std::filesystem::create_directories(cfg.export_dir);
                std::ofstream out(cfg.export_dir + "/" + system_name(sys.id) + "_" + gname +
                                  ".csv");
                out << trajectory_csv(traj);
                return;
            } catch (const std::exception&) {
            }
        }
    }
};

}  // namespace

VerificationReport run_suites(const SuiteConfig& config) {
    Runner r{config, {}};
    r.report.config = config;

    for (SystemId id : config.systems) {
        HamiltonianSystem sys = build_system(id);
        GeneratorCatalog cat(sys);
        if (config.has_suite("relations")) r.run_relations(sys, cat);
        if (config.has_suite("symmetry")) r.run_symmetry(sys, cat);
        if (config.has_suite("divisors")) r.run_divisors(sys);
        if (config.has_suite("charts")) r.run_charts(sys);
        if (config.has_suite("translations")) r.run_translations(sys, cat);
        if (config.has_suite("numeric")) r.run_numeric(sys, cat);
    }

    auto scheme_selected = [&](DegenerationId id) {
        switch (id) {
            case DegenerationId::D5toA4:
                return config.has_system(SystemId::D5) || config.has_system(SystemId::A4);
            case DegenerationId::D5toB4:
                return config.has_system(SystemId::D5) || config.has_system(SystemId::B4);
            case DegenerationId::D42toB3:
                return config.has_system(SystemId::D4_2) || config.has_system(SystemId::B3);
        }
        return false;
    };
    for (DegenerationId id :
         {DegenerationId::D5toA4, DegenerationId::D5toB4, DegenerationId::D42toB3}) {
        if (!scheme_selected(id)) continue;
        DegenerationScheme sch = build_degeneration(id);
        if (config.has_suite("degenerations")) r.run_degenerations(sch);
        if (config.has_suite("subgroup-limits")) r.run_subgroup_limits(sch);
    }

    r.report.finalize();
    return r.report;
}

}  // namespace painleve
