#pragma once

#include <cstddef>
#include <vector>

#include "curveclass/errors.hpp"
#include "curveclass/polynomial.hpp"
#include "curveclass/rational.hpp"

namespace curveclass {

// Rational power series truncated at a fixed order; used to compute local
// intersection multiplicities of curve branches exactly.
class Series {
public:
    Series(std::size_t order, const Rational& constant = Rational(0))
        : c_(order, Rational(0)) {
        if (order == 0) throw PreconditionError("series order must be positive");
        c_[0] = constant;
    }

    static Series variable(std::size_t order) {
        Series s(order);
        if (order > 1) s.c_[1] = Rational(1);
        return s;
    }

    std::size_t order() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }

    friend Series operator+(const Series& a, const Series& b) {
        Series r = a;
        for (std::size_t i = 0; i < r.c_.size() && i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series r = a;
        for (std::size_t i = 0; i < r.c_.size() && i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series r(a.order());
        for (std::size_t i = 0; i < a.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < r.order() && j < b.order(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend Series operator*(const Rational& s, const Series& a) {
        Series r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    // Multiplicative inverse; requires a unit (nonzero constant term).
    Series inverse() const {
        if (c_[0].is_zero()) throw ArithmeticError("series inverse of a non-unit");
        Series r(order());
        r.c_[0] = Rational(1) / c_[0];
        for (std::size_t n = 1; n < order(); ++n) {
            Rational acc(0);
            for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
            r.c_[n] = -acc / c_[0];
        }
        return r;
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    // Square root with a chosen branch seed y0, y0^2 = constant term.
    Series sqrt(const Rational& seed) const {
        if (seed * seed != c_[0])
            throw PreconditionError("square-root seed does not match the constant term");
        if (seed.is_zero()) throw ArithmeticError("series sqrt needs a unit");
        Series y(order(), seed);
        const Rational half(BigInt(1), BigInt(2));
        std::size_t correct = 1;
        while (correct < order()) {
            y = half * (y + *this / y);
            correct *= 2;
        }
        return y;
    }

    // Order of vanishing; returns the truncation order when all stored
    // coefficients vanish.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < order(); ++i)
            if (!c_[i].is_zero()) return i;
        return order();
    }

private:
    std::vector<Rational> c_;
};

// p composed with a series argument, by Horner evaluation.
inline Series evaluate_at_series(const Polynomial& p, const Series& x) {
    Series acc(x.order());
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * x + Series(x.order(), p[static_cast<std::size_t>(i)]);
    return acc;
}

// p(x0 + t) as a series in t.
inline Series shift_polynomial(const Polynomial& p, const Rational& x0, std::size_t order) {
    Series x = Series::variable(order);
    x[0] = x0;
    return evaluate_at_series(p, x);
}

}  // namespace curveclass
