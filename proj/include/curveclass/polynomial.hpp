#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "curveclass/errors.hpp"
#include "curveclass/rational.hpp"

namespace curveclass {

// Dense univariate polynomial over the rationals, coefficients from degree 0
// upward with no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(const Rational& c) { coeffs_.push_back(c); trim(); }  // NOLINT

    static Polynomial monomial(std::size_t degree, const Rational& c = Rational(1)) {
        std::vector<Rational> v(degree + 1, Rational(0));
        v[degree] = c;
        Polynomial p;
        p.coeffs_ = std::move(v);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<Rational> r = coeffs_;
        for (auto& c : r) c = -c;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(r));
    }

    struct DivMod;
    static DivMod divmod(const Polynomial& a, const Polynomial& b);

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b);

    // Division that must be exact; the caller's bookkeeping is wrong otherwise.
    static Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            Rational inv = Rational(1) / a.leading();
            for (auto& c : a.coeffs_) c *= inv;
        }
        return a;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

inline Polynomial::DivMod Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    Polynomial rem = a;
    std::vector<Rational> q;
    if (a.degree() >= b.degree())
        q.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        Rational factor = rem.leading() / b.leading();
        q[shift] = factor;
        // rem -= factor * x^shift * b
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            rem.coeffs_[i + shift] -= factor * b.coeffs_[i];
        rem.trim();
    }
    return {Polynomial(std::move(q)), rem};
}

inline Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    return Polynomial::divmod(a, b).quotient;
}
inline Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return Polynomial::divmod(a, b).remainder;
}

inline Polynomial Polynomial::exact_divide(const Polynomial& a, const Polynomial& b) {
    DivMod d = divmod(a, b);
    if (!d.remainder.is_zero())
        throw ComponentOverlapError("expected exact polynomial division");
    return d.quotient;
}

// Determinant of a square matrix of polynomials by expansion with fraction
// clearing: ordinary Gaussian elimination would need rational functions, so
// use the Bareiss scheme, whose divisions stay exact over Q[x].
inline Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> m) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial(Rational(1));
    int sign = 1;
    Polynomial prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial();  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = Polynomial::exact_divide(num, prev);
            }
            m[i][k] = Polynomial();
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace curveclass
