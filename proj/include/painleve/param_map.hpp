#ifndef PAINLEVE_PARAM_MAP_HPP
#define PAINLEVE_PARAM_MAP_HPP

#include <optional>
#include <vector>

#include "painleve/rational.hpp"

namespace painleve {

// Affine action p -> M p + s on the ordered parameter vector. The catalog
// generators are all purely linear (s = 0); translation words become
// translations only on the constraint plane, see translation_shift_on_plane.
class ParamMap {
public:
    ParamMap() = default;
    explicit ParamMap(size_t n);

    static ParamMap identity(size_t n);

    size_t dim() const { return shift_.size(); }
    Rational& at(size_t row, size_t col) { return matrix_[row * dim() + col]; }
    const Rational& at(size_t row, size_t col) const { return matrix_[row * dim() + col]; }
    Rational& shift(size_t row) { return shift_[row]; }
    const Rational& shift(size_t row) const { return shift_[row]; }

    std::vector<Rational> apply(const std::vector<Rational>& p) const;

    // generic field application (series, univariate rational functions):
    // Ops needs zero(), from_rational(r), add(F,F), scale(F,Rational)
    template <class F, class Ops>
    std::vector<F> apply_with(const std::vector<F>& p, const Ops& ops) const {
        std::vector<F> out;
        out.reserve(dim());
        for (size_t i = 0; i < dim(); ++i) {
            F acc = ops.from_rational(shift_[i]);
            for (size_t j = 0; j < dim(); ++j) {
                if (at(i, j) == 0) continue;
                acc = ops.add(acc, ops.scale(p[j], at(i, j)));
            }
            out.push_back(acc);
        }
        return out;
    }

    // "first, then second": returns the action p -> second(first(p)).
    static ParamMap sequence(const ParamMap& first, const ParamMap& second);

    // weights^T (M p + s) == weights^T p identically
    bool preserves_level(const std::vector<Rational>& weights) const;

    // If the action restricted to the plane weights^T p = level is a pure
    // translation, i.e. M - I = c * weights^T and the map sends p to
    // p + shift for all p on the plane, returns that shift. Exact symbolic
    // test, no sampling.
    std::optional<std::vector<Rational>> translation_shift_on_plane(
        const std::vector<Rational>& weights, const Rational& level) const;

    friend bool operator==(const ParamMap& a, const ParamMap& b) {
        return a.matrix_ == b.matrix_ && a.shift_ == b.shift_;
    }

private:
    std::vector<Rational> matrix_;  // row-major dim x dim
    std::vector<Rational> shift_;
};

}  // namespace painleve

#endif
