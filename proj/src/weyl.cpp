#include "painleve/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace painleve {

namespace {

struct Ctx {
    SymbolTablePtr tbl;
    RatFunc operator()(long c) const { return RatFunc::constant(tbl, Rational(c)); }
    RatFunc v(Var x) const { return RatFunc::variable(tbl, x); }
};

// incremental construction of one generator
struct MapBuilder {
    BirationalMap m;
    Ctx C;

    MapBuilder(const HamiltonianSystem& sys, std::string name) : C{sys.layout.table} {
        m.name = std::move(name);
        m.layout = sys.layout;
        for (size_t i = 0; i < 4; ++i) m.phase_images[i] = C.v(m.layout.phase[i]);
        m.t_image = C.v(m.layout.time);
        m.param_action = ParamMap::identity(m.layout.params.size());
    }

    RatFunc x() const { return C.v(m.layout.phase[0]); }
    RatFunc y() const { return C.v(m.layout.phase[1]); }
    RatFunc z() const { return C.v(m.layout.phase[2]); }
    RatFunc w() const { return C.v(m.layout.phase[3]); }
    RatFunc t() const { return C.v(m.layout.time); }
    RatFunc p(size_t i) const { return C.v(m.layout.params[i]); }

    MapBuilder& phase(size_t i, RatFunc img) {
        m.phase_images[i] = std::move(img);
        return *this;
    }
    MapBuilder& tneg() {
        m.t_image = -C.v(m.layout.time);
        m.time_action = TimeAction::Negate;
        return *this;
    }
    // parameter action rows: new_i = sum M[i][j] old_j
    MapBuilder& neg(size_t i) {
        m.param_action.at(i, i) = Rational(-1);
        return *this;
    }
    MapBuilder& addto(size_t i, size_t j, long coeff = 1) {
        m.param_action.at(i, j) += Rational(coeff);
        return *this;
    }
    MapBuilder& permute(const std::vector<size_t>& src) {
        ParamMap pm(m.layout.params.size());
        for (size_t i = 0; i < src.size(); ++i) pm.at(i, src[i]) = Rational(1);
        m.param_action = pm;
        return *this;
    }
    MapBuilder& row(size_t i, const std::vector<Rational>& coeffs) {
        for (size_t j = 0; j < coeffs.size(); ++j) m.param_action.at(i, j) = coeffs[j];
        return *this;
    }
    BirationalMap build() { return std::move(m); }
};

std::vector<std::string> W(const std::string& text) { return parse_word(text); }

}  // namespace

std::vector<std::string> parse_word(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string format_word(const std::vector<std::string>& word) {
    std::ostringstream out;
    for (size_t i = 0; i < word.size(); ++i) out << (i ? " " : "") << word[i];
    return out.str();
}

RelationOutcome check_relation(const GeneratorCatalog& cat, const Relation& rel, int points,
                               uint64_t master_seed, const std::string& seed_id) {
    RelationOutcome out;
    const SystemLayout& lay = cat.system().layout;
    MapWord once = cat.word(rel.word);
    MapWord full;
    for (int k = 0; k < rel.order; ++k) full.insert(full.end(), once.begin(), once.end());
    Rng rng = Rng::derive(master_seed, seed_id);
    out.holds = word_is_identity(full, lay, points, rng);
    if (out.holds != Ternary::True) return out;
    for (int k = 1; k < rel.order; ++k) {
        MapWord partial;
        for (int j = 0; j < k; ++j) partial.insert(partial.end(), once.begin(), once.end());
        Rng mrng = Rng::derive(master_seed, seed_id + "/minimality^" + std::to_string(k));
        if (word_is_identity(partial, lay, points, mrng) == Ternary::True) {
            out.non_minimal_power = k;
            break;
        }
    }
    return out;
}

void GeneratorCatalog::add(BirationalMap m) {
    order_.push_back(m.name);
    maps_.emplace(m.name, std::move(m));
}

const BirationalMap& GeneratorCatalog::generator(const std::string& id) const {
    auto it = maps_.find(id);
    if (it == maps_.end())
        throw std::invalid_argument("unknown generator " + id + " for system " +
                                    system_name(sys_->id));
    return it->second;
}

MapWord GeneratorCatalog::word(const std::vector<std::string>& ids) const {
    MapWord out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(&generator(id));
    return out;
}

ParamMap GeneratorCatalog::word_action(const std::vector<std::string>& ids) const {
    return word_param_action(word(ids));
}

std::optional<std::vector<Rational>> GeneratorCatalog::translation_shift(
    const TranslationWord& t) const {
    ParamMap act = word_action(t.word);
    return act.translation_shift_on_plane(sys_->param_space.weights, sys_->param_space.target);
}

GeneratorCatalog::GeneratorCatalog(const HamiltonianSystem& sys) : sys_(&sys) {
    Ctx C{sys.layout.table};
    auto involutions = [&](std::vector<Relation>& rel) {
        for (const auto& g : order_) rel.push_back({{g}, 2});
    };

    switch (sys.id) {
        case SystemId::D5: {
            {
                MapBuilder b(sys, "s0");
                add(b.phase(0, b.x() + b.p(0) / (b.y() + b.t())).neg(0).addto(2, 0).build());
            }
            {
                MapBuilder b(sys, "s1");
                add(b.phase(0, b.x() + b.p(1) / b.y()).neg(1).addto(2, 1).build());
            }
            {
                MapBuilder b(sys, "s2");
                add(b.phase(1, b.y() - b.p(2) / (b.x() - b.z()))
                        .phase(3, b.w() + b.p(2) / (b.x() - b.z()))
                        .addto(0, 2).addto(1, 2).neg(2).addto(3, 2)
                        .build());
            }
            {
                MapBuilder b(sys, "s3");
                add(b.phase(2, b.z() + b.p(3) / b.w())
                        .addto(2, 3).neg(3).addto(4, 3).addto(5, 3)
                        .build());
            }
            {
                MapBuilder b(sys, "s4");
                add(b.phase(3, b.w() - b.p(4) / (b.z() - b.C(1))).addto(3, 4).neg(4).build());
            }
            {
                MapBuilder b(sys, "s5");
                add(b.phase(3, b.w() - b.p(5) / b.z()).addto(3, 5).neg(5).build());
            }
            {
                MapBuilder b(sys, "pi1");
                add(b.phase(0, b.C(1) - b.x()).phase(1, -b.y() - b.t())
                        .phase(2, b.C(1) - b.z()).phase(3, -b.w())
                        .permute({1, 0, 2, 3, 5, 4})
                        .build());
            }
            {
                MapBuilder b(sys, "pi2");
                add(b.phase(0, (b.y() + b.w() + b.t()) / b.t())
                        .phase(1, -b.t() * (b.z() - b.C(1)))
                        .phase(2, (b.y() + b.t()) / b.t())
                        .phase(3, -b.t() * (b.x() - b.z()))
                        .tneg()
                        .permute({5, 4, 3, 2, 1, 0})
                        .build());
            }
            {
                MapBuilder b(sys, "pi3");
                add(b.phase(0, b.C(1) - b.x()).phase(1, -b.y())
                        .phase(2, b.C(1) - b.z()).phase(3, -b.w())
                        .tneg()
                        .permute({0, 1, 2, 3, 5, 4})
                        .build());
            }
            {
                MapBuilder b(sys, "pi4");
                add(b.phase(1, b.y() + b.t()).tneg().permute({1, 0, 2, 3, 4, 5}).build());
            }
            involutions(presentation_.relations);
            for (const char* pair : {"s0 s1", "s0 s3", "s0 s4", "s0 s5", "s1 s3", "s1 s4",
                                     "s1 s5", "s2 s4", "s2 s5", "s4 s5"})
                presentation_.relations.push_back({W(pair), 2});
            for (const char* pair : {"s0 s2", "s1 s2", "s2 s3", "s3 s4", "s3 s5"})
                presentation_.relations.push_back({W(pair), 3});
            // pi4 = pi2 pi3 pi2, stated separately from the diagram caption
            presentation_.relations.push_back({W("pi2 pi3 pi2 pi4"), 1});

            std::vector<std::string> t1 = W("pi1 s5 s3 s2 s1 s0 s2 s3 s5");
            auto wrap = [](std::vector<std::string> pre, const std::vector<std::string>& mid,
                           std::vector<std::string> post) {
                std::vector<std::string> out = std::move(pre);
                out.insert(out.end(), mid.begin(), mid.end());
                out.insert(out.end(), post.begin(), post.end());
                return out;
            };
            std::vector<std::string> t2 = wrap(W("pi2"), t1, W("pi2"));
            std::vector<std::string> t3 = wrap(W("s1 s4"), t1, W("s4 s1"));
            std::vector<std::string> t4 = wrap(W("s2 s3"), t3, W("s3 s2"));
            std::vector<std::string> t5 = wrap(W("s1"), t4, W("s1"));
            std::vector<std::string> t6 = wrap(W("s3"), t3, W("s3"));
            auto sh = [](std::initializer_list<long> v) {
                return std::vector<Rational>(v.begin(), v.end());
            };
            translations_.push_back({"T1", t1, sh({0, 0, 0, 0, 1, -1})});
            translations_.push_back({"T2", t2, sh({-1, 1, 0, 0, 0, 0})});
            translations_.push_back({"T3", t3, sh({0, 0, 0, 1, -1, -1})});
            translations_.push_back({"T4", t4, sh({1, 1, -1, 0, 0, 0})});
            // The fifth displayed shift vector (0,0,1,-1,0,0) is realized by
            // the word s3 T3 s3, not by s1 T4 s1 (whose action is the inverse
            // of T2's); the display mislabels the row. The vector is asserted
            // against the word that produces it, the other shift is derived.
            translations_.push_back({"T5", t5, std::nullopt});
            translations_.push_back({"T6", t6, sh({0, 0, 1, -1, 0, 0})});
            break;
        }
        case SystemId::B4: {
            {
                MapBuilder b(sys, "s0");
                add(b.phase(0, b.x() + b.p(0) / (b.y() - b.C(1))).neg(0).addto(2, 0).build());
            }
            {
                MapBuilder b(sys, "s1");
                add(b.phase(0, b.x() + b.p(1) / b.y()).neg(1).addto(2, 1).build());
            }
            {
                MapBuilder b(sys, "s2");
                add(b.phase(1, b.y() - b.p(2) / (b.x() - b.z()))
                        .phase(3, b.w() + b.p(2) / (b.x() - b.z()))
                        .addto(0, 2).addto(1, 2).neg(2).addto(3, 2)
                        .build());
            }
            {
                MapBuilder b(sys, "s3");
                add(b.phase(2, b.z() + b.p(3) / b.w()).addto(2, 3).neg(3).addto(4, 3).build());
            }
            {
                MapBuilder b(sys, "s4");
                add(b.phase(3, b.w() - b.C(2) * b.p(4) / b.z() + b.t() / (b.z() * b.z()))
                        .tneg()
                        .addto(3, 4, 2).neg(4)
                        .build());
            }
            {
                MapBuilder b(sys, "pi1");
                add(b.phase(0, -b.x()).phase(1, b.C(1) - b.y())
                        .phase(2, -b.z()).phase(3, -b.w())
                        .tneg()
                        .permute({1, 0, 2, 3, 4})
                        .build());
            }
            {
                MapBuilder b(sys, "pi2");
                Rational half = make_rational(1, 2);
                add(b.phase(0, b.t() / b.z())
                        .phase(1, -(b.z() / b.t()) * (b.z() * b.w() + b.p(3)))
                        .phase(2, b.t() / b.x())
                        .phase(3, -(b.x() / b.t()) * (b.x() * b.y() + b.p(1)))
                        .row(0, {Rational(0), Rational(0), Rational(0), Rational(1), Rational(2)})
                        .row(1, {Rational(0), Rational(0), Rational(0), Rational(1), Rational(0)})
                        .row(2, {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)})
                        .row(3, {Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)})
                        .row(4, {half, -half, Rational(0), Rational(0), Rational(0)})
                        .build());
            }
            involutions(presentation_.relations);
            for (const char* pair : {"s0 s1", "s0 s3", "s0 s4", "s1 s3", "s1 s4", "s2 s4"})
                presentation_.relations.push_back({W(pair), 2});
            for (const char* pair : {"s0 s2", "s1 s2", "s2 s3"})
                presentation_.relations.push_back({W(pair), 3});
            presentation_.relations.push_back({W("s3 s4"), 4});

            std::vector<std::string> t1 = W("s4 pi1 s1 s2 s4 s3 s4 s3 s2 s1");
            auto wrap = [](const std::string& g, const std::vector<std::string>& mid) {
                std::vector<std::string> out{g};
                out.insert(out.end(), mid.begin(), mid.end());
                out.push_back(g);
                return out;
            };
            std::vector<std::string> t2 = wrap("s0", t1);
            std::vector<std::string> t3 = wrap("s2", t2);
            std::vector<std::string> t4 = wrap("s3", t3);
            auto sh = [](std::initializer_list<long> v) {
                return std::vector<Rational>(v.begin(), v.end());
            };
            translations_.push_back({"T1", t1, sh({1, -1, 0, 0, 0})});
            translations_.push_back({"T2", t2, sh({-1, -1, 1, 0, 0})});
            translations_.push_back({"T3", t3, sh({0, 0, -1, 1, 0})});
            translations_.push_back({"T4", t4, sh({0, 0, 0, -1, 1})});
            break;
        }
        case SystemId::D4_2: {
            {
                MapBuilder b(sys, "w1");
                add(b.phase(1, b.y() - b.p(0) / (b.x() - b.z()))
                        .phase(3, b.w() + b.p(0) / (b.x() - b.z()))
                        .neg(0).addto(1, 0).addto(3, 0)
                        .build());
            }
            {
                MapBuilder b(sys, "w2");
                add(b.phase(2, b.z() + b.p(1) / b.w()).addto(0, 1).neg(1).addto(2, 1).build());
            }
            {
                MapBuilder b(sys, "w3");
                add(b.phase(3, b.w() - b.C(2) * b.p(2) / b.z() + b.t() / (b.z() * b.z()))
                        .tneg()
                        .addto(1, 2, 2).neg(2)
                        .build());
            }
            {
                MapBuilder b(sys, "w4");
                add(b.phase(0, -b.x() - b.C(2) * b.p(3) / b.y() + b.C(1) / (b.y() * b.y()))
                        .phase(1, -b.y()).phase(2, -b.z()).phase(3, -b.w())
                        .tneg()
                        .addto(0, 3, 2).neg(3)
                        .build());
            }
            involutions(presentation_.relations);
            for (const char* pair : {"w1 w3", "w3 w4", "w2 w4"})
                presentation_.relations.push_back({W(pair), 2});
            presentation_.relations.push_back({W("w1 w2"), 3});
            presentation_.relations.push_back({W("w1 w4"), 4});
            presentation_.relations.push_back({W("w2 w3"), 4});

            auto sh = [](std::initializer_list<long> v) {
                return std::vector<Rational>(v.begin(), v.end());
            };
            translations_.push_back({"T1", W("w1 w4 w2 w1 w2 w3 w1 w2"), sh({1, -1, 0, 0})});
            translations_.push_back({"T2", W("w3 w1 w2 w1 w4 w1 w2 w1"), sh({0, -1, 1, 0})});
            translations_.push_back(
                {"T3", W("w2 w1 w4 w1 w2 w1 w3 w4 w2 w1 w2 w3 w1 w4 w1 w2 w3 w2 w1 w2"),
                 sh({0, 0, -1, 1})});
            break;
        }
        case SystemId::B3: {
            {
                MapBuilder b(sys, "s0");
                add(b.phase(2, b.z() + b.p(0) / (b.w() - b.t())).neg(0).addto(2, 0).build());
            }
            {
                MapBuilder b(sys, "s1");
                add(b.phase(2, b.z() + b.p(1) / b.w()).neg(1).addto(2, 1).build());
            }
            {
                MapBuilder b(sys, "s2");
                add(b.phase(1, b.y() - b.p(2) * b.z() / (b.x() * b.z() - b.C(1)))
                        .phase(3, b.w() - b.p(2) * b.x() / (b.x() * b.z() - b.C(1)))
                        .addto(0, 2).addto(1, 2).neg(2).addto(3, 2)
                        .build());
            }
            {
                MapBuilder b(sys, "s3");
                add(b.phase(0, -b.x() - b.C(2) * b.p(3) / b.y() + b.C(1) / (b.y() * b.y()))
                        .phase(1, -b.y()).phase(2, -b.z()).phase(3, -b.w())
                        .tneg()
                        .addto(2, 3, 2).neg(3)
                        .build());
            }
            {
                MapBuilder b(sys, "pi");
                add(b.phase(3, b.w() - b.t()).tneg().permute({1, 0, 2, 3}).build());
            }
            // no relation list beyond involutivity is stated for this system
            involutions(presentation_.relations);
            break;
        }
        case SystemId::A4: {
            {
                MapBuilder b(sys, "s0");
                RatFunc D = b.x() - b.C(2) * b.y() - b.C(2) * b.w() + b.C(2) * b.t();
                add(b.phase(0, b.x() - b.C(2) * b.p(0) / D)
                        .phase(1, b.y() - b.p(0) / D)
                        .phase(2, b.z() - b.C(2) * b.p(0) / D)
                        .neg(0).addto(1, 0).addto(4, 0)
                        .build());
            }
            {
                MapBuilder b(sys, "s1");
                add(b.phase(0, b.x() + b.p(1) / b.y()).addto(0, 1).neg(1).addto(2, 1).build());
            }
            {
                MapBuilder b(sys, "s2");
                add(b.phase(1, b.y() - b.p(2) / (b.x() - b.z()))
                        .phase(3, b.w() + b.p(2) / (b.x() - b.z()))
                        .addto(1, 2).neg(2).addto(3, 2)
                        .build());
            }
            {
                MapBuilder b(sys, "s3");
                add(b.phase(2, b.z() + b.p(3) / b.w()).addto(2, 3).neg(3).addto(4, 3).build());
            }
            {
                MapBuilder b(sys, "s4");
                add(b.phase(3, b.w() - b.p(4) / b.z()).addto(0, 4).addto(3, 4).neg(4).build());
            }
            involutions(presentation_.relations);
            break;
        }
    }
    presentation_.generator_names = order_;
}

}  // namespace painleve
