#include "painleve/ratfunc.hpp"

#include <stdexcept>

namespace painleve {

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.table(), Rational(1))) {
    normalize();
}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("ratfunc: zero denominator");
    normalize();
}

RatFunc RatFunc::constant(SymbolTablePtr table, const Rational& c) {
    return RatFunc(MPoly::constant(std::move(table), c));
}

RatFunc RatFunc::variable(SymbolTablePtr table, Var v) {
    return RatFunc(MPoly::variable(std::move(table), v));
}

bool RatFunc::den_is_one() const {
    return den_.is_constant() && den_.constant_value() == 1;
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.table(), Rational(1));
        return;
    }
    Rational scale = den_.content();
    if (den_.leading_coeff() < 0) scale = -scale;
    if (scale != 1) {
        Rational inv = Rational(1) / scale;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw std::invalid_argument("ratfunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e >= 0) return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    if (num_.is_zero()) throw std::invalid_argument("ratfunc: negative power of zero");
    return RatFunc(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
}

RatFunc RatFunc::derivative(Var v) const {
    if (v.index >= table()->size()) throw std::invalid_argument("ratfunc: unknown variable");
    // (n/d)' = (n'd - nd')/d^2
    MPoly dn = num_.derivative(v);
    MPoly dd = den_.derivative(v);
    if (dd.is_zero()) return RatFunc(dn, den_);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

RatFunc RatFunc::substitute(const std::map<uint32_t, RatFunc>& bindings) const {
    const auto& tbl = table();
    std::vector<RatFunc> values;
    values.reserve(tbl->size());
    for (uint32_t i = 0; i < tbl->size(); ++i) {
        auto it = bindings.find(i);
        if (it != bindings.end()) {
            if (it->second.table() != tbl) throw std::invalid_argument("substitute: mixed symbol tables");
            values.push_back(it->second);
        } else {
            values.push_back(RatFunc::variable(tbl, Var{i}));
        }
    }
    struct Ops {
        SymbolTablePtr tbl;
        RatFunc zero() const { return RatFunc::constant(tbl, Rational(0)); }
        RatFunc from_rational(const Rational& r) const { return RatFunc::constant(tbl, r); }
        RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
        RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
    };
    Ops ops{tbl};
    RatFunc n = num_.eval_with<RatFunc>(values, ops);
    RatFunc d = den_.eval_with<RatFunc>(values, ops);
    if (d.is_zero()) throw std::domain_error("substitute: denominator vanishes identically");
    return n / d;
}

std::optional<Rational> RatFunc::eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) return std::nullopt;
    return num_.eval(point) / d;
}

std::optional<double> RatFunc::eval_double(const std::vector<double>& point) const {
    double d = den_.eval_double(point);
    if (d == 0.0) return std::nullopt;
    return num_.eval_double(point) / d;
}

std::string RatFunc::to_string() const {
    if (den_is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace painleve
