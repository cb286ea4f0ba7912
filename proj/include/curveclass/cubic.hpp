#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "curveclass/errors.hpp"
#include "curveclass/linalg.hpp"
#include "curveclass/polynomial.hpp"
#include "curveclass/rational.hpp"
#include "curveclass/series.hpp"

namespace curveclass {

// Projective rational plane point, normalized so the last nonzero coordinate
// pattern is Z = 1, else Y = 1, else X = 1.
struct PlanePoint {
    Rational x, y, z;

    PlanePoint() : x(0), y(1), z(0) {}
    PlanePoint(Rational px, Rational py, Rational pz)
        : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {
        if (x.is_zero() && y.is_zero() && z.is_zero())
            throw PreconditionError("(0:0:0) is not a projective point");
        if (!z.is_zero()) {
            x /= z;
            y /= z;
            z = Rational(1);
        } else if (!y.is_zero()) {
            x /= y;
            y = Rational(1);
        } else {
            x = Rational(1);
        }
    }

    bool at_infinity() const { return z.is_zero(); }

    bool operator==(const PlanePoint& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const PlanePoint& o) const { return !(*this == o); }

    std::string to_string() const {
        return "(" + x.to_string() + " : " + y.to_string() + " : " + z.to_string() + ")";
    }
};

// y^2 = x^3 + ax + b with nonzero discriminant.
class WeierstrassCubic {
public:
    WeierstrassCubic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        Rational disc = Rational(4) * a_ * a_ * a_ + Rational(27) * b_ * b_;
        if (disc.is_zero())
            throw PreconditionError("singular Weierstrass cubic: 4a^3 + 27b^2 = 0");
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    // x^3 + ax + b.
    Rational rhs(const Rational& x) const { return x * x * x + a_ * x + b_; }

    Polynomial rhs_polynomial() const {
        return Polynomial(std::vector<Rational>{b_, a_, Rational(0), Rational(1)});
    }

private:
    Rational a_;
    Rational b_;
};

// A rational point of a Weierstrass cubic: affine (x, y) or the point at
// infinity (0 : 1 : 0).
class CubicPoint {
public:
    static CubicPoint at_infinity() { return CubicPoint(); }
    static CubicPoint affine(Rational x, Rational y) {
        CubicPoint p;
        p.infinite_ = false;
        p.x_ = std::move(x);
        p.y_ = std::move(y);
        return p;
    }

    bool is_infinity() const { return infinite_; }
    const Rational& x() const { return require_affine(), x_; }
    const Rational& y() const { return require_affine(), y_; }

    PlanePoint plane() const {
        if (infinite_) return PlanePoint(Rational(0), Rational(1), Rational(0));
        return PlanePoint(x_, y_, Rational(1));
    }

    bool operator==(const CubicPoint& o) const {
        if (infinite_ != o.infinite_) return false;
        return infinite_ || (x_ == o.x_ && y_ == o.y_);
    }
    bool operator!=(const CubicPoint& o) const { return !(*this == o); }

    std::string to_string() const {
        if (infinite_) return "inf";
        return "(" + x_.to_string() + ", " + y_.to_string() + ")";
    }

private:
    bool require_affine() const {
        if (infinite_) throw PreconditionError("point at infinity has no affine coordinates");
        return true;
    }

    bool infinite_ = true;
    Rational x_, y_;
};

inline bool on_curve(const WeierstrassCubic& curve, const CubicPoint& p) {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == curve.rhs(p.x());
}

inline void require_on_curve(const WeierstrassCubic& curve, const CubicPoint& p,
                             const char* who) {
    if (!on_curve(curve, p))
        throw PreconditionError(std::string(who) + ": point " + p.to_string() +
                                " does not satisfy the curve equation");
}

// Third intersection of the line through p and q (the tangent when p = q)
// with the curve, as the point on the line itself: no reflection happens
// here. Symmetric in p and q.
inline CubicPoint third_intersection(const WeierstrassCubic& curve, const CubicPoint& p,
                                     const CubicPoint& q) {
    require_on_curve(curve, p, "third_intersection");
    require_on_curve(curve, q, "third_intersection");

    // The line at infinity meets the curve only at infinity (triply).
    if (p.is_infinity() && q.is_infinity()) return CubicPoint::at_infinity();
    // A vertical line through an affine point: third point is the reflection.
    if (p.is_infinity()) return CubicPoint::affine(q.x(), -q.y());
    if (q.is_infinity()) return CubicPoint::affine(p.x(), -p.y());

    Rational lambda;
    if (p == q) {
        if (p.y().is_zero()) return CubicPoint::at_infinity();  // vertical tangent
        lambda = (Rational(3) * p.x() * p.x() + curve.a()) / (Rational(2) * p.y());
    } else if (p.x() == q.x()) {
        return CubicPoint::at_infinity();  // vertical chord
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    Rational x3 = lambda * lambda - p.x() - q.x();
    Rational y3 = p.y() + lambda * (x3 - p.x());
    return CubicPoint::affine(std::move(x3), std::move(y3));
}

// The chord-tangent addition with a chosen zero: add(p, q) is the third
// intersection of the line through the third intersection of p, q and the
// zero. With the zero at infinity this is the usual elliptic-curve law.
inline CubicPoint add(const WeierstrassCubic& curve, const CubicPoint& zero,
                      const CubicPoint& p, const CubicPoint& q) {
    require_on_curve(curve, zero, "add");
    return third_intersection(curve, third_intersection(curve, p, q), zero);
}

inline CubicPoint negate(const WeierstrassCubic& curve, const CubicPoint& p) {
    if (p.is_infinity()) return p;
    require_on_curve(curve, p, "negate");
    return CubicPoint::affine(p.x(), -p.y());
}

struct AssociativityCheck {
    bool associative = false;
    CubicPoint left;   // f1(f1(p, q), r)
    CubicPoint right;  // f1(p, f1(q, r))
};

inline AssociativityCheck associativity_check(const WeierstrassCubic& curve,
                                              const CubicPoint& zero, const CubicPoint& p,
                                              const CubicPoint& q, const CubicPoint& r) {
    AssociativityCheck out;
    out.left = add(curve, zero, add(curve, zero, p, q), r);
    out.right = add(curve, zero, p, add(curve, zero, q, r));
    out.associative = out.left == out.right;
    return out;
}

// Plane conic A X^2 + B XY + C Y^2 + D XZ + E YZ + F Z^2, stored with the
// coefficient vector scaled to coprime integers whose first nonzero entry is
// positive. Degenerate (rank < 3) conics are permitted but flagged.
struct PlaneConic {
    std::array<Rational, 6> coeffs;  // A, B, C, D, E, F

    explicit PlaneConic(std::array<Rational, 6> c) : coeffs(std::move(c)) {
        bool all_zero = true;
        for (const auto& v : coeffs) all_zero = all_zero && v.is_zero();
        if (all_zero) throw PreconditionError("conic coefficients must not all vanish");
        // Clear denominators, divide by the content, fix the sign.
        BigInt lcm = 1;
        for (const auto& v : coeffs) lcm = lcm / BigInt::gcd(lcm, v.den()) * v.den();
        BigInt content = 0;
        std::array<Rational, 6> scaled = coeffs;
        for (auto& v : scaled) {
            v = v * Rational(lcm);
            content = BigInt::gcd(content, v.num());
        }
        for (auto& v : scaled) v = v / Rational(content);
        for (const auto& v : scaled) {
            if (v.is_zero()) continue;
            if (v.is_negative())
                for (auto& w : scaled) w = -w;
            break;
        }
        coeffs = std::move(scaled);
    }

    Rational evaluate(const PlanePoint& p) const {
        const Rational &X = p.x, &Y = p.y, &Z = p.z;
        return coeffs[0] * X * X + coeffs[1] * X * Y + coeffs[2] * Y * Y + coeffs[3] * X * Z +
               coeffs[4] * Y * Z + coeffs[5] * Z * Z;
    }

    bool contains(const PlanePoint& p) const { return evaluate(p).is_zero(); }

    // Rank of the symmetric matrix of the quadratic form (doubled to stay
    // integral); rank 3 is a smooth conic, rank 2 a line pair, rank 1 a
    // double line.
    std::size_t rank() const {
        const Rational &A = coeffs[0], &B = coeffs[1], &C = coeffs[2], &D = coeffs[3],
                       &E = coeffs[4], &F = coeffs[5];
        RationalMatrix m = {{Rational(2) * A, B, D},
                            {B, Rational(2) * C, E},
                            {D, E, Rational(2) * F}};
        return matrix_rank(std::move(m));
    }

    bool degenerate() const { return rank() < 3; }

    bool operator==(const PlaneConic& o) const { return coeffs == o.coeffs; }
};

// Projective line alpha X + beta Y + gamma Z = 0.
struct PlaneLine {
    Rational alpha, beta, gamma;

    bool contains(const PlanePoint& p) const {
        return (alpha * p.x + beta * p.y + gamma * p.z).is_zero();
    }
};

inline PlaneLine line_through(const PlanePoint& p, const PlanePoint& q) {
    if (p == q) throw PreconditionError("line_through needs two distinct points");
    // Cross product of the coordinate vectors.
    return PlaneLine{p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x};
}

inline PlanePoint line_intersection(const PlaneLine& l1, const PlaneLine& l2) {
    Rational x = l1.beta * l2.gamma - l1.gamma * l2.beta;
    Rational y = l1.gamma * l2.alpha - l1.alpha * l2.gamma;
    Rational z = l1.alpha * l2.beta - l1.beta * l2.alpha;
    if (x.is_zero() && y.is_zero() && z.is_zero())
        throw PreconditionError("lines coincide; no unique intersection");
    return PlanePoint(std::move(x), std::move(y), std::move(z));
}

inline PlaneConic conic_from_lines(const PlaneLine& l1, const PlaneLine& l2) {
    return PlaneConic({l1.alpha * l2.alpha,
                       l1.alpha * l2.beta + l1.beta * l2.alpha,
                       l1.beta * l2.beta,
                       l1.alpha * l2.gamma + l1.gamma * l2.alpha,
                       l1.beta * l2.gamma + l1.gamma * l2.beta,
                       l1.gamma * l2.gamma});
}

// Unique conic through five distinct points: exact nullspace of the 5 x 6
// monomial matrix. Rank below 5 means the conic is not unique.
inline PlaneConic conic_through_five(const std::vector<PlanePoint>& points) {
    if (points.size() != 5) throw PreconditionError("conic_through_five needs five points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw PreconditionError("conic_through_five: duplicated point " +
                                        points[i].to_string());
    RationalMatrix m;
    for (const PlanePoint& p : points) {
        const Rational &X = p.x, &Y = p.y, &Z = p.z;
        m.push_back({X * X, X * Y, Y * Y, X * Z, Y * Z, Z * Z});
    }
    auto basis = nullspace(std::move(m));
    if (basis.size() != 1)
        throw SpecialPositionError(
            "five points in degenerate position: the conic through them is not unique");
    return PlaneConic({basis[0][0], basis[0][1], basis[0][2], basis[0][3], basis[0][4],
                       basis[0][5]});
}

namespace detail {

// Affine resultant in y of the conic and the curve: the monic curve relation
// y^2 = f(x) reduces the conic q2 y^2 + q1(x) y + q0(x) to
// (q2 f + q0)^2 - q1^2 f, whose roots are the x-coordinates of the affine
// intersections counted with multiplicity.
inline Polynomial conic_curve_resultant(const WeierstrassCubic& curve, const PlaneConic& conic) {
    const Rational &A = conic.coeffs[0], &B = conic.coeffs[1], &C = conic.coeffs[2],
                   &D = conic.coeffs[3], &E = conic.coeffs[4], &F = conic.coeffs[5];
    Polynomial f = curve.rhs_polynomial();
    Polynomial q0(std::vector<Rational>{F, D, A});
    Polynomial q1(std::vector<Rational>{E, B});
    Polynomial even = Polynomial(C) * f + q0;
    return even * even - q1 * q1 * f;
}

// Local intersection multiplicity of the conic with the curve branch through
// an affine curve point, by evaluating the conic along an exact truncated
// parameterization of the branch.
inline std::size_t branch_multiplicity(const WeierstrassCubic& curve, const PlaneConic& conic,
                                       const CubicPoint& p, std::size_t order = 8) {
    const Rational &A = conic.coeffs[0], &B = conic.coeffs[1], &C = conic.coeffs[2],
                   &D = conic.coeffs[3], &E = conic.coeffs[4], &F = conic.coeffs[5];
    Series x(order), y(order);
    if (!p.y().is_zero()) {
        // Branch parameterized by x = x0 + t, y = sqrt(f(x0 + t)).
        x = Series::variable(order);
        x[0] = p.x();
        y = shift_polynomial(curve.rhs_polynomial(), p.x(), order).sqrt(p.y());
    } else {
        // Two-torsion point: parameterize by y = t and solve f(x) = t^2 by
        // Newton iteration from x0 (f'(x0) != 0 on a smooth curve).
        y = Series::variable(order);
        x = Series(order, p.x());
        Polynomial f = curve.rhs_polynomial();
        Polynomial fp(std::vector<Rational>{curve.a(), Rational(0), Rational(3)});
        Series t2 = y * y;
        for (std::size_t correct = 1; correct < order; correct *= 2) {
            Series fx = evaluate_at_series(f, x);
            Series fpx = evaluate_at_series(fp, x);
            x = x - (fx - t2) / fpx;
        }
    }
    Series value = Series(order, A) * x * x + Series(order, B) * x * y +
                   Series(order, C) * y * y + Series(order, D) * x + Series(order, E) * y +
                   Series(order, F);
    std::size_t v = value.valuation();
    if (v >= order)
        throw ComponentOverlapError("conic meets the curve branch to excessive order");
    return v;
}

}  // namespace detail

// The sixth intersection of a conic through five (curve) points with the
// curve: the five known roots are divided out of the degree-6 resultant
// exactly, and the residual linear factor pins the sixth point. Tangencies
// are encoded by listing a point twice. Intersections at infinity are
// tracked through the degree drop of the resultant.
inline CubicPoint sixth_intersection(const WeierstrassCubic& curve, const PlaneConic& conic,
                                     const std::vector<CubicPoint>& five) {
    if (five.size() != 5) throw PreconditionError("sixth_intersection needs five points");
    std::size_t known_infinite = 0;
    for (const CubicPoint& p : five) {
        require_on_curve(curve, p, "sixth_intersection");
        if (!conic.contains(p.plane()))
            throw PreconditionError("sixth_intersection: conic misses input point " +
                                    p.to_string());
        if (p.is_infinity()) ++known_infinite;
    }

    Polynomial r = detail::conic_curve_resultant(curve, conic);
    if (r.is_zero())
        throw ComponentOverlapError("conic and cubic share a component");
    int64_t infinity_mult = 6 - r.degree();

    for (const CubicPoint& p : five) {
        if (p.is_infinity()) continue;
        Polynomial factor(std::vector<Rational>{-p.x(), Rational(1)});
        auto dm = Polynomial::divmod(r, factor);
        if (!dm.remainder.is_zero())
            throw ComponentOverlapError(
                "intersection multiplicities do not support the given five points "
                "(repeated point without tangency?)");
        r = std::move(dm.quotient);
    }

    int64_t residual_affine = r.degree();
    int64_t residual_infinite = infinity_mult - static_cast<int64_t>(known_infinite);
    if (residual_affine + residual_infinite != 1 || residual_affine < 0 || residual_infinite < 0)
        throw ComponentOverlapError("intersection count does not leave a unique sixth point");

    if (residual_infinite == 1) return CubicPoint::at_infinity();

    Rational x6 = -r[0] / r[1];
    Rational root;
    if (!curve.rhs(x6).square_root(&root))
        throw ComponentOverlapError(
            "residual x-coordinate does not lift to a rational curve point");

    // Candidate sixth points over x6, restricted to the conic.
    std::vector<CubicPoint> candidates;
    candidates.push_back(CubicPoint::affine(x6, root));
    if (!root.is_zero()) candidates.push_back(CubicPoint::affine(x6, -root));
    std::vector<CubicPoint> on_conic;
    for (const CubicPoint& c : candidates)
        if (conic.contains(c.plane())) on_conic.push_back(c);

    CubicPoint sixth = CubicPoint::at_infinity();
    if (on_conic.size() == 1) {
        sixth = on_conic[0];
    } else if (on_conic.size() == 2) {
        // Both branches meet the conic (it contains the vertical line at x6);
        // the sixth point is the branch whose local intersection multiplicity
        // exceeds its count among the known five.
        bool found = false;
        for (const CubicPoint& c : on_conic) {
            std::size_t known = 0;
            for (const CubicPoint& p : five)
                if (p == c) ++known;
            if (detail::branch_multiplicity(curve, conic, c) > known) {
                if (found)
                    throw ComponentOverlapError("sixth point is not uniquely determined");
                sixth = c;
                found = true;
            }
        }
        if (!found) throw ComponentOverlapError("no branch admits the sixth point");
    } else {
        throw ComponentOverlapError("residual x-coordinate misses the conic");
    }
    require_on_curve(curve, sixth, "sixth_intersection result");
    if (!conic.contains(sixth.plane()))
        throw InternalError("sixth intersection fails the conic equation");
    return sixth;
}

// Ternary cubic c0 X^3 + c1 X^2 Y + c2 X Y^2 + c3 Y^3 + c4 X^2 Z + c5 XYZ
// + c6 Y^2 Z + c7 X Z^2 + c8 Y Z^2 + c9 Z^3.
struct CubicForm {
    std::array<Rational, 10> coeffs;

    Rational evaluate(const PlanePoint& p) const {
        const Rational &X = p.x, &Y = p.y, &Z = p.z;
        return coeffs[0] * X * X * X + coeffs[1] * X * X * Y + coeffs[2] * X * Y * Y +
               coeffs[3] * Y * Y * Y + coeffs[4] * X * X * Z + coeffs[5] * X * Y * Z +
               coeffs[6] * Y * Y * Z + coeffs[7] * X * Z * Z + coeffs[8] * Y * Z * Z +
               coeffs[9] * Z * Z * Z;
    }

    bool contains(const PlanePoint& p) const { return evaluate(p).is_zero(); }

    // Coefficients as a polynomial in y (affine chart Z = 1), by y-degree.
    std::array<Polynomial, 4> y_coefficients() const {
        return {Polynomial(std::vector<Rational>{coeffs[9], coeffs[7], coeffs[4], coeffs[0]}),
                Polynomial(std::vector<Rational>{coeffs[8], coeffs[5], coeffs[1]}),
                Polynomial(std::vector<Rational>{coeffs[6], coeffs[2]}),
                Polynomial(std::vector<Rational>{coeffs[3]})};
    }
};

inline CubicForm cubic_from_lines(const PlaneLine& l1, const PlaneLine& l2,
                                  const PlaneLine& l3) {
    CubicForm f{};
    // Multiply the three linear forms; index by exponent of (X, Y, Z).
    std::array<std::array<Rational, 3>, 3> lines = {
        std::array<Rational, 3>{l1.alpha, l1.beta, l1.gamma},
        std::array<Rational, 3>{l2.alpha, l2.beta, l2.gamma},
        std::array<Rational, 3>{l3.alpha, l3.beta, l3.gamma}};
    auto index_of = [](int ex, int ey) {
        // Exponent triple (ex, ey, 3 - ex - ey) to the coefficient index.
        if (ex == 3) return 0;
        if (ex == 2 && ey == 1) return 1;
        if (ex == 1 && ey == 2) return 2;
        if (ey == 3) return 3;
        if (ex == 2) return 4;
        if (ex == 1 && ey == 1) return 5;
        if (ey == 2) return 6;
        if (ex == 1) return 7;
        if (ey == 1) return 8;
        return 9;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                int ex = (i == 0) + (j == 0) + (k == 0);
                int ey = (i == 1) + (j == 1) + (k == 1);
                f.coeffs[static_cast<std::size_t>(index_of(ex, ey))] +=
                    lines[0][static_cast<std::size_t>(i)] *
                    lines[1][static_cast<std::size_t>(j)] *
                    lines[2][static_cast<std::size_t>(k)];
            }
    return f;
}

namespace detail {

inline Polynomial cubic_pencil_resultant(const CubicForm& f, const CubicForm& g) {
    auto fy = f.y_coefficients();
    auto gy = g.y_coefficients();
    int fdeg = 3, gdeg = 3;
    while (fdeg > 0 && fy[static_cast<std::size_t>(fdeg)].is_zero()) --fdeg;
    while (gdeg > 0 && gy[static_cast<std::size_t>(gdeg)].is_zero()) --gdeg;
    if (fdeg == 0 || gdeg == 0)
        throw SpecialPositionError("pencil member degenerates in the y-direction");
    std::size_t n = static_cast<std::size_t>(fdeg + gdeg);
    std::vector<std::vector<Polynomial>> sylvester(n, std::vector<Polynomial>(n));
    for (std::size_t row = 0; row < static_cast<std::size_t>(gdeg); ++row)
        for (int c = 0; c <= fdeg; ++c)
            sylvester[row][row + static_cast<std::size_t>(c)] =
                fy[static_cast<std::size_t>(fdeg - c)];
    for (std::size_t row = 0; row < static_cast<std::size_t>(fdeg); ++row)
        for (int c = 0; c <= gdeg; ++c)
            sylvester[static_cast<std::size_t>(gdeg) + row][row + static_cast<std::size_t>(c)] =
                gy[static_cast<std::size_t>(gdeg - c)];
    return polynomial_determinant(std::move(sylvester));
}

}  // namespace detail

struct CayleyBacharachResult {
    PlanePoint ninth;
    CubicForm pencil_f;
    CubicForm pencil_g;
};

// Eight distinct plane points imposing independent conditions on cubics
// determine a pencil; its ninth base point is computed exactly and verified
// against both pencil generators.
inline CayleyBacharachResult cayley_bacharach_check(const std::vector<PlanePoint>& eight) {
    if (eight.size() != 8) throw PreconditionError("cayley_bacharach_check needs eight points");
    for (std::size_t i = 0; i < eight.size(); ++i)
        for (std::size_t j = i + 1; j < eight.size(); ++j)
            if (eight[i] == eight[j])
                throw PreconditionError("cayley_bacharach_check: duplicated point");

    RationalMatrix m;
    for (const PlanePoint& p : eight) {
        const Rational &X = p.x, &Y = p.y, &Z = p.z;
        m.push_back({X * X * X, X * X * Y, X * Y * Y, Y * Y * Y, X * X * Z, X * Y * Z, Y * Y * Z,
                     X * Z * Z, Y * Z * Z, Z * Z * Z});
    }
    auto basis = nullspace(std::move(m));
    if (basis.size() != 2)
        throw SpecialPositionError(
            "the eight points do not impose independent conditions on cubics (pencil dimension " +
            std::to_string(basis.size()) + ")");
    CubicForm f{}, g{};
    for (std::size_t i = 0; i < 10; ++i) {
        f.coeffs[i] = basis[0][i];
        g.coeffs[i] = basis[1][i];
    }

    Polynomial r = detail::cubic_pencil_resultant(f, g);
    if (r.is_zero())
        throw SpecialPositionError("pencil members share a component");

    std::size_t affine_known = 0;
    for (const PlanePoint& p : eight) {
        if (p.at_infinity()) continue;
        ++affine_known;
        Polynomial factor(std::vector<Rational>{-p.x, Rational(1)});
        auto dm = Polynomial::divmod(r, factor);
        if (!dm.remainder.is_zero())
            throw SpecialPositionError("resultant bookkeeping rejects the configuration");
        r = std::move(dm.quotient);
    }
    int64_t infinity_mult = 9 - static_cast<int64_t>(affine_known) - r.degree();
    if (infinity_mult < 0)
        throw SpecialPositionError("resultant bookkeeping rejects the configuration");

    CayleyBacharachResult out;
    out.pencil_f = f;
    out.pencil_g = g;
    if (r.degree() == 0) {
        // The ninth base point lies at infinity: common root of the leading
        // binary forms of f and g.
        Polynomial lf(std::vector<Rational>{f.coeffs[0], f.coeffs[1], f.coeffs[2], f.coeffs[3]});
        Polynomial lg(std::vector<Rational>{g.coeffs[0], g.coeffs[1], g.coeffs[2], g.coeffs[3]});
        Polynomial common = Polynomial::gcd(lf, lg);
        if (common.degree() != 1)
            throw SpecialPositionError("ninth base point at infinity is not unique");
        // common = t + y/x-coordinate ratio: root Y/X = -c0/c1 gives (1 : r : 0).
        out.ninth = PlanePoint(Rational(1), -common[0] / common[1], Rational(0));
    } else if (r.degree() == 1) {
        Rational x9 = -r[0] / r[1];
        // y from the gcd of the two cubics specialized at x9. Known base
        // points over the same x are divided out first.
        auto fy = f.y_coefficients();
        auto gy = g.y_coefficients();
        auto specialize = [&](const std::array<Polynomial, 4>& cy) {
            std::vector<Rational> c;
            for (const auto& p : cy) c.push_back(p.evaluate(x9));
            return Polynomial(std::move(c));
        };
        Polynomial common = Polynomial::gcd(specialize(fy), specialize(gy));
        for (const PlanePoint& p : eight) {
            if (p.at_infinity() || p.x != x9 || common.degree() < 1) continue;
            auto dm = Polynomial::divmod(common,
                                         Polynomial(std::vector<Rational>{-p.y, Rational(1)}));
            if (dm.remainder.is_zero()) common = std::move(dm.quotient);
        }
        if (common.degree() != 1)
            throw SpecialPositionError("ninth base point is not rationally unique over x = " +
                                       x9.to_string());
        Rational y9 = -common[0] / common[1];
        out.ninth = PlanePoint(std::move(x9), std::move(y9), Rational(1));
    } else {
        throw SpecialPositionError("more than one residual base point");
    }

    if (!f.contains(out.ninth) || !g.contains(out.ninth))
        throw InternalError("ninth base point fails a pencil generator");
    return out;
}

}  // namespace curveclass
