#include "painleve/eps_series.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace painleve {

EpsSeries::EpsSeries(SymbolTablePtr table, int trunc) : table_(std::move(table)), trunc_(trunc) {}

EpsSeries EpsSeries::from_coeff(const RatFunc& coeff, int degree, int trunc) {
    EpsSeries s(coeff.table(), trunc);
    if (!coeff.is_zero() && degree <= trunc) {
        s.min_degree_ = degree;
        s.coeffs_.push_back(coeff);
    }
    return s;
}

EpsSeries EpsSeries::constant(const RatFunc& value, int trunc) {
    return from_coeff(value, 0, trunc);
}

EpsSeries EpsSeries::eps_power(SymbolTablePtr table, int degree, int trunc) {
    RatFunc one = RatFunc::constant(table, Rational(1));
    return from_coeff(one, degree, trunc);
}

void EpsSeries::normalize() {
    // drop coefficients above trunc
    while (!coeffs_.empty() &&
           min_degree_ + static_cast<int>(coeffs_.size()) - 1 > trunc_)
        coeffs_.pop_back();
    // strip leading zeros
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_degree_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_degree_ += static_cast<int>(lead);
    }
    // strip trailing zeros (cosmetic; values beyond are implicitly zero)
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatFunc EpsSeries::coeff(int k) const {
    if (k > trunc_) throw std::out_of_range("eps series: coefficient beyond truncation order");
    int idx = k - min_degree_;
    if (coeffs_.empty() || idx < 0 || idx >= static_cast<int>(coeffs_.size()))
        return RatFunc::constant(table_, Rational(0));
    return coeffs_[static_cast<size_t>(idx)];
}

EpsSeries EpsSeries::operator-() const {
    EpsSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
    EpsSeries r(a.table_, std::min(a.trunc_, b.trunc_));
    if (a.coeffs_.empty() && b.coeffs_.empty()) return r;
    int lo = std::min(a.min_degree(), b.min_degree());
    r.min_degree_ = lo;
    for (int k = lo; k <= r.trunc_; ++k) r.coeffs_.push_back(a.coeff(k) + b.coeff(k));
    r.normalize();
    return r;
}

EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) { return a + (-b); }

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
    // valid through min(trunc_a + val_b, trunc_b + val_a)
    int va = a.coeffs_.empty() ? a.trunc_ + 1 : a.min_degree_;
    int vb = b.coeffs_.empty() ? b.trunc_ + 1 : b.min_degree_;
    EpsSeries r(a.table_, std::min(a.trunc_ + vb, b.trunc_ + va));
    if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
    r.min_degree_ = va + vb;
    int len = r.trunc_ - r.min_degree_ + 1;
    if (len <= 0) return r;
    std::vector<RatFunc> out(static_cast<size_t>(len), RatFunc::constant(a.table_, Rational(0)));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            int deg = a.min_degree_ + static_cast<int>(i) + b.min_degree_ + static_cast<int>(j);
            int idx = deg - r.min_degree_;
            if (idx >= len) break;
            out[static_cast<size_t>(idx)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.coeffs_ = std::move(out);
    r.normalize();
    return r;
}

EpsSeries EpsSeries::inverse() const {
    if (coeffs_.empty())
        throw std::domain_error("eps series: inverse of (truncation-)zero series");
    // s = c eps^m (1 + v), v of positive valuation known through relative
    // order R = trunc - m; 1/s = eps^(-m) c^{-1} sum (-v)^j
    int m = min_degree_;
    int rel = trunc_ - m;
    const RatFunc& lead = coeffs_.front();
    std::vector<RatFunc> u(static_cast<size_t>(rel) + 1, RatFunc::constant(table_, Rational(0)));
    u[0] = RatFunc::constant(table_, Rational(1));
    // v_k = c_{m+k}/c_m for k >= 1
    std::vector<RatFunc> v(static_cast<size_t>(rel) + 1, RatFunc::constant(table_, Rational(0)));
    for (int k = 1; k <= rel; ++k) v[static_cast<size_t>(k)] = coeff(m + k) / lead;
    // geometric series: w = 1 - v*w_prev accumulated degreewise
    std::vector<RatFunc> w = u;  // w = 1/(1+v) coefficients, w_0 = 1
    for (int k = 1; k <= rel; ++k) {
        RatFunc acc = RatFunc::constant(table_, Rational(0));
        for (int j = 1; j <= k; ++j) acc += v[static_cast<size_t>(j)] * w[static_cast<size_t>(k - j)];
        w[static_cast<size_t>(k)] = -acc;
    }
    EpsSeries r(table_, rel - m);
    r.min_degree_ = -m;
    r.coeffs_.reserve(w.size());
    for (auto& c : w) r.coeffs_.push_back(c / lead);
    r.normalize();
    return r;
}

EpsSeries operator/(const EpsSeries& a, const EpsSeries& b) { return a * b.inverse(); }

EpsSeries EpsSeries::shifted(int degrees) const {
    EpsSeries r = *this;
    r.min_degree_ += degrees;
    r.trunc_ += degrees;
    return r;
}

EpsSeries EpsSeries::scaled(const RatFunc& c) const {
    EpsSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.normalize();
    return r;
}

EpsSeries EpsSeries::scaled(const Rational& c) const {
    return scaled(RatFunc::constant(table_, c));
}

EpsSeries EpsSeries::binomial_pow(const Rational& c) const {
    if (coeffs_.empty() || min_degree_ != 0 || !coeffs_.front().den_is_one() ||
        !coeffs_.front().num().is_constant() || coeffs_.front().num().constant_value() != 1)
        throw std::domain_error("eps series: binomial power requires unit constant term 1");
    EpsSeries x = *this - EpsSeries::constant(RatFunc::constant(table_, Rational(1)), trunc_);
    EpsSeries acc = EpsSeries::constant(RatFunc::constant(table_, Rational(1)), trunc_);
    if (x.is_zero()) return acc;
    int vx = x.min_degree();  // >= 1
    EpsSeries xn = x;
    for (int n = 1; n * vx <= trunc_; ++n) {
        acc = acc + xn.scaled(rational_binomial(c, static_cast<unsigned>(n)));
        if ((n + 1) * vx <= trunc_) xn = xn * x;
    }
    // all operands exact through trunc_, so the sum is too
    EpsSeries r = acc;
    r.trunc_ = trunc_;
    r.normalize();
    return r;
}

EpsSeries EpsSeries::int_pow(int e) const {
    if (e < 0) return inverse().int_pow(-e);
    EpsSeries acc = EpsSeries::constant(RatFunc::constant(table_, Rational(1)), trunc_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

EpsSeries EpsSeries::from_ratfunc(const RatFunc& f, Var eps, int trunc) {
    // split num and den into eps-coefficient slices
    auto slices = [&](const MPoly& p) {
        std::map<int, MPoly> out;
        for (const auto& [e, c] : p.terms()) {
            int k = static_cast<int>(e[eps.index]);
            Exponents stripped = e;
            stripped[eps.index] = 0;
            auto it = out.find(k);
            if (it == out.end())
                it = out.emplace(k, MPoly(p.table())).first;
            it->second += MPoly::monomial(p.table(), stripped, c);
        }
        return out;
    };
    auto to_series = [&](const std::map<int, MPoly>& sl, int wtrunc) {
        EpsSeries s(f.table(), wtrunc);
        if (sl.empty()) return s;
        s.min_degree_ = sl.begin()->first;
        int hi = sl.rbegin()->first;
        for (int k = s.min_degree_; k <= std::min(hi, wtrunc); ++k) {
            auto it = sl.find(k);
            s.coeffs_.push_back(it == sl.end() ? RatFunc::constant(f.table(), Rational(0))
                                               : RatFunc(it->second));
        }
        s.normalize();
        return s;
    };
    auto den_slices = slices(f.den());
    int den_val = den_slices.empty() ? 0 : den_slices.begin()->first;
    int work = trunc + 2 * den_val + 2;  // guard so the quotient is valid through trunc
    EpsSeries n = to_series(slices(f.num()), work);
    EpsSeries d = to_series(den_slices, work);
    EpsSeries q = n / d;
    if (q.trunc_ < trunc) throw std::logic_error("eps series: truncation bookkeeping fell short");
    q.trunc_ = trunc;
    q.normalize();
    return q;
}

bool EpsSeries::equal_through(const EpsSeries& a, const EpsSeries& b, int order) {
    if (a.trunc_ < order || b.trunc_ < order)
        throw std::domain_error("eps series: comparison beyond truncation order");
    int lo = std::min(a.min_degree(), b.min_degree());
    for (int k = lo; k <= order; ++k) {
        if (!RatFunc::identical(a.coeff(k), b.coeff(k))) return false;
    }
    return true;
}

std::string EpsSeries::to_string() const {
    if (coeffs_.empty()) return "O(eps^" + std::to_string(trunc_ + 1) + ")";
    std::ostringstream out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (out.tellp() > 0) out << " + ";
        out << "(" << coeffs_[i].to_string() << ")*eps^" << (min_degree_ + static_cast<int>(i));
    }
    out << " + O(eps^" << trunc_ + 1 << ")";
    return out.str();
}

}  // namespace painleve
