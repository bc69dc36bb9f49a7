#ifndef PAINLEVE_MPOLY_HPP
#define PAINLEVE_MPOLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "painleve/rational.hpp"
#include "painleve/symbols.hpp"

namespace painleve {

// Exponent vector, one entry per table symbol.
using Exponents = std::vector<uint32_t>;

// Graded lexicographic order on exponent vectors (total degree first, then
// lex on the table order). Fixed once; gives every polynomial a canonical
// term sequence.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over Rational. No zero coefficients are
// stored; the term map is ordered, so iteration order is canonical.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    MPoly() = default;
    explicit MPoly(SymbolTablePtr table) : table_(std::move(table)) {}

    static MPoly constant(SymbolTablePtr table, const Rational& c);
    static MPoly variable(SymbolTablePtr table, Var v);
    static MPoly monomial(SymbolTablePtr table, const Exponents& e, const Rational& c);

    const SymbolTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    size_t term_count() const { return terms_.size(); }

    int64_t total_degree() const;         // -1 for zero polynomial
    int64_t degree_in(Var v) const;       // -1 for zero polynomial
    const Rational& leading_coeff() const;  // w.r.t. graded-lex; requires nonzero

    // gcd of coefficient numerators over lcm of denominators (positive);
    // p / content(p) has coprime integer coefficients.
    Rational content() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rational& c);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }

    MPoly pow(unsigned e) const;
    MPoly derivative(Var v) const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Exact single-divisor division: quotient q with *this == q*g, or
    // nullopt when no such polynomial exists.
    std::optional<MPoly> divided_by(const MPoly& g) const;

    Rational eval(const std::vector<Rational>& point) const;
    double eval_double(const std::vector<double>& point) const;

    // Generic evaluation over any commutative ring value type. Ops must
    // provide: zero(), from_rational(const Rational&), add(F,F), mul(F,F).
    template <class F, class Ops>
    F eval_with(const std::vector<F>& values, const Ops& ops) const {
        F acc = ops.zero();
        std::vector<std::vector<F>> powers(values.size());
        for (const auto& [exps, coeff] : terms_) {
            F term = ops.from_rational(coeff);
            for (size_t i = 0; i < exps.size(); ++i) {
                uint32_t e = exps[i];
                if (e == 0) continue;
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(values[i]);  // cache[k] = v^(k+1)
                while (cache.size() < e) cache.push_back(ops.mul(cache.back(), values[i]));
                term = ops.mul(term, cache[e - 1]);
            }
            acc = ops.add(acc, term);
        }
        return acc;
    }

    // Deterministic rendering, graded-lex term order, e.g. "2*x^2*y - 1/3".
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    void check_same_table(const MPoly& o) const;

    SymbolTablePtr table_;
    TermMap terms_;
};

// true iff f = g*q for some polynomial q (g must be nonzero).
bool divides(const MPoly& g, const MPoly& f);

}  // namespace painleve

#endif
