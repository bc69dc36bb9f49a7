#include "painleve/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace painleve {

MPoly MPoly::constant(SymbolTablePtr table, const Rational& c) {
    MPoly p(std::move(table));
    if (c != 0) p.terms_.emplace(Exponents(p.table_->size(), 0), c);
    return p;
}

MPoly MPoly::variable(SymbolTablePtr table, Var v) {
    MPoly p(std::move(table));
    Exponents e(p.table_->size(), 0);
    e.at(v.index) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MPoly MPoly::monomial(SymbolTablePtr table, const Exponents& e, const Rational& c) {
    MPoly p(std::move(table));
    if (e.size() != p.table_->size()) throw std::invalid_argument("mpoly: exponent arity mismatch");
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("mpoly: not a constant");
    return terms_.begin()->second;
}

int64_t MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // last term of graded-lex map is the leading one, maximal degree
    const Exponents& e = terms_.rbegin()->first;
    int64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

int64_t MPoly::degree_in(Var v) const {
    if (terms_.empty()) return -1;
    int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int64_t>(d, e[v.index]);
    return d;
}

const Rational& MPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("mpoly: leading_coeff of zero");
    return terms_.rbegin()->second;
}

Rational MPoly::content() const {
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1);
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::check_same_table(const MPoly& o) const {
    if (table_ != o.table_) throw std::invalid_argument("mpoly: mixed symbol tables");
}

MPoly MPoly::operator-() const {
    MPoly r(table_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_table(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_table(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same_table(b);
    MPoly r(a.table_);
    Exponents e(a.table_ ? a.table_->size() : 0, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = MPoly::constant(table_, Rational(1));
    MPoly b = *this;
    while (e) {
        if (e & 1u) acc = acc * b;
        b = b * b;
        e >>= 1u;
    }
    return acc;
}

MPoly MPoly::derivative(Var v) const {
    MPoly r(table_);
    for (const auto& [e, c] : terms_) {
        uint32_t k = e[v.index];
        if (k == 0) continue;
        Exponents de = e;
        de[v.index] -= 1;
        r.add_term(de, c * Rational(static_cast<long>(k)));
    }
    return r;
}

std::optional<MPoly> MPoly::divided_by(const MPoly& g) const {
    check_same_table(g);
    if (g.is_zero()) throw std::invalid_argument("mpoly: division by zero polynomial");
    MPoly rem = *this;
    MPoly q(table_);
    const Exponents& glead = g.terms_.rbegin()->first;
    const Rational& gcoef = g.terms_.rbegin()->second;
    Exponents diff(glead.size(), 0);
    while (!rem.is_zero()) {
        const Exponents& rlead = rem.terms_.rbegin()->first;
        for (size_t i = 0; i < diff.size(); ++i) {
            if (rlead[i] < glead[i]) return std::nullopt;  // leading term not reducible
            diff[i] = rlead[i] - glead[i];
        }
        Rational qc = rem.terms_.rbegin()->second / gcoef;
        MPoly s = MPoly::monomial(table_, diff, qc);
        q += s;
        rem -= s * g;
    }
    return q;
}

bool divides(const MPoly& g, const MPoly& f) { return f.divided_by(g).has_value(); }

Rational MPoly::eval(const std::vector<Rational>& point) const {
    struct Ops {
        Rational zero() const { return Rational(0); }
        Rational from_rational(const Rational& r) const { return r; }
        Rational add(const Rational& a, const Rational& b) const { return a + b; }
        Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    };
    return eval_with<Rational>(point, Ops{});
}

double MPoly::eval_double(const std::vector<double>& point) const {
    struct Ops {
        double zero() const { return 0.0; }
        double from_rational(const Rational& r) const { return r.get_d(); }
        double add(double a, double b) const { return a + b; }
        double mul(double a, double b) const { return a * b; }
    };
    return eval_with<double>(point, Ops{});
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print highest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            any_var = true;
            vars << table_->name(Var{static_cast<uint32_t>(i)});
            if (e[i] > 1) vars << "^" << e[i];
        }
        if (!any_var) {
            out << a.get_str();
        } else if (a == 1) {
            out << vars.str();
        } else {
            out << a.get_str() << "*" << vars.str();
        }
    }
    return out.str();
}

}  // namespace painleve
