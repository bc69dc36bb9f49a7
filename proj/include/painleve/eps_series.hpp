#ifndef PAINLEVE_EPS_SERIES_HPP
#define PAINLEVE_EPS_SERIES_HPP

#include <vector>

#include "painleve/ratfunc.hpp"

namespace painleve {

// Truncated Laurent series in a distinguished variable eps, with RatFunc
// coefficients in the remaining variables. coeff index k stores the
// coefficient of eps^(min_degree+k); the series is known exactly through
// eps^trunc (inclusive). The leading stored coefficient is nonzero unless
// the series is identically zero through its truncation order.
class EpsSeries {
public:
    EpsSeries(SymbolTablePtr table, int trunc);  // zero series

    static EpsSeries from_coeff(const RatFunc& coeff, int degree, int trunc);
    static EpsSeries constant(const RatFunc& value, int trunc);
    static EpsSeries eps_power(SymbolTablePtr table, int degree, int trunc);

    // Laurent expansion of a rational function around eps = 0, valid
    // through eps^trunc. Rational functions have no essential singularity,
    // so this always succeeds (possibly with negative min_degree).
    static EpsSeries from_ratfunc(const RatFunc& f, Var eps, int trunc);

    const SymbolTablePtr& table() const { return table_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }
    // smallest degree with nonzero coefficient; trunc+1 for the zero series
    int min_degree() const { return coeffs_.empty() ? trunc_ + 1 : min_degree_; }

    // coefficient of eps^k; requires k <= trunc
    RatFunc coeff(int k) const;

    EpsSeries operator-() const;
    friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b);
    friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b);
    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
    friend EpsSeries operator/(const EpsSeries& a, const EpsSeries& b);

    EpsSeries inverse() const;              // requires nonzero through trunc
    EpsSeries shifted(int degrees) const;   // multiply by eps^degrees
    EpsSeries scaled(const RatFunc& c) const;
    EpsSeries scaled(const Rational& c) const;

    // (this)^c for rational c under the binomial-series convention
    // (1+x)^c ~ 1 + sum binom(c,n) x^n; requires this = 1 + (positive
    // valuation part).
    EpsSeries binomial_pow(const Rational& c) const;

    EpsSeries int_pow(int e) const;

    // exact coefficient-wise equality for all degrees <= order (requires
    // both truncs >= order)
    static bool equal_through(const EpsSeries& a, const EpsSeries& b, int order);

    std::string to_string() const;

private:
    void normalize();

    SymbolTablePtr table_;
    int min_degree_ = 0;
    std::vector<RatFunc> coeffs_;
    int trunc_ = 0;
};

}  // namespace painleve

#endif
