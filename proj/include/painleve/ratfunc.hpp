#ifndef PAINLEVE_RATFUNC_HPP
#define PAINLEVE_RATFUNC_HPP

#include <map>
#include <optional>

#include "painleve/mpoly.hpp"

namespace painleve {

// Rational function num/den over exact rationals. Normalization fixes the
// denominator's sign (positive leading coefficient) and strips rational
// content from the denominator; full polynomial gcd cancellation is not
// performed (identity testing is evaluation-based, see prop_equal).
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(MPoly num);
    RatFunc(MPoly num, MPoly den);

    static RatFunc constant(SymbolTablePtr table, const Rational& c);
    static RatFunc variable(SymbolTablePtr table, Var v);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const SymbolTablePtr& table() const { return num_.table(); }
    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(int e) const;  // negative exponents invert

    // d/dv by the quotient rule.
    RatFunc derivative(Var v) const;

    // Simultaneous substitution of the bound variables; unbound variables
    // stay themselves. Throws if the substituted denominator is identically
    // zero.
    RatFunc substitute(const std::map<uint32_t, RatFunc>& bindings) const;

    // Exact value at a closed point; nullopt when the denominator vanishes
    // there (caller resamples).
    std::optional<Rational> eval(const std::vector<Rational>& point) const;
    std::optional<double> eval_double(const std::vector<double>& point) const;

    // Structural equality of the normalized pair (num, den). Not an
    // identity test: equivalent fractions with uncancelled factors differ.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Exact identity a == b via cross-multiplication (symbolic, no sampling).
    static bool identical(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string() const;

private:
    void normalize();

    MPoly num_, den_;
};

}  // namespace painleve

#endif
