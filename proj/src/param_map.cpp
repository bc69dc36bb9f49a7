#include "painleve/param_map.hpp"

#include <stdexcept>

namespace painleve {

ParamMap::ParamMap(size_t n) : matrix_(n * n, Rational(0)), shift_(n, Rational(0)) {}

ParamMap ParamMap::identity(size_t n) {
    ParamMap m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

std::vector<Rational> ParamMap::apply(const std::vector<Rational>& p) const {
    if (p.size() != dim()) throw std::invalid_argument("param map: dimension mismatch");
    std::vector<Rational> out(dim(), Rational(0));
    for (size_t i = 0; i < dim(); ++i) {
        Rational acc = shift_[i];
        for (size_t j = 0; j < dim(); ++j) acc += at(i, j) * p[j];
        out[i] = acc;
    }
    return out;
}

ParamMap ParamMap::sequence(const ParamMap& first, const ParamMap& second) {
    if (first.dim() != second.dim()) throw std::invalid_argument("param map: dimension mismatch");
    size_t n = first.dim();
    ParamMap out(n);
    for (size_t i = 0; i < n; ++i) {
        Rational s = second.shift_[i];
        for (size_t k = 0; k < n; ++k) {
            s += second.at(i, k) * first.shift_[k];
            Rational acc(0);
            for (size_t j = 0; j < n; ++j) acc += second.at(i, j) * first.at(j, k);
            out.at(i, k) = acc;
        }
        out.shift_[i] = s;
    }
    return out;
}

bool ParamMap::preserves_level(const std::vector<Rational>& weights) const {
    if (weights.size() != dim()) throw std::invalid_argument("param map: weight dimension mismatch");
    for (size_t j = 0; j < dim(); ++j) {
        Rational col(0);
        for (size_t i = 0; i < dim(); ++i) col += weights[i] * at(i, j);
        if (col != weights[j]) return false;
    }
    Rational s(0);
    for (size_t i = 0; i < dim(); ++i) s += weights[i] * shift_[i];
    return s == 0;
}

std::optional<std::vector<Rational>> ParamMap::translation_shift_on_plane(
    const std::vector<Rational>& weights, const Rational& level) const {
    // need M - I = c * weights^T for a column vector c
    size_t n = dim();
    size_t pivot = n;
    for (size_t j = 0; j < n; ++j) {
        if (weights[j] != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot == n) return std::nullopt;
    std::vector<Rational> c(n);
    for (size_t i = 0; i < n; ++i) {
        Rational mii = at(i, pivot) - (i == pivot ? Rational(1) : Rational(0));
        c[i] = mii / weights[pivot];
    }
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            Rational expect = c[i] * weights[j] + (i == j ? Rational(1) : Rational(0));
            if (at(i, j) != expect) return std::nullopt;
        }
    }
    // on the plane weights^T p = level: p -> p + level*c + s
    std::vector<Rational> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = c[i] * level + shift_[i];
    return out;
}

}  // namespace painleve
