#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curveclass/checked_int.hpp"
#include "curveclass/errors.hpp"

namespace curveclass {

using std::int64_t;

// Exact integer coefficient vector in the basis of a surface model. The
// universal currency of the toolkit; immutable value semantics throughout.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<int64_t> coefficients)
        : coefficients_(std::move(coefficients)) {}

    static DivisorClass zero(std::size_t rank) {
        return DivisorClass(std::vector<int64_t>(rank, 0));
    }

    std::size_t rank() const { return coefficients_.size(); }
    int64_t operator[](std::size_t i) const { return coefficients_[i]; }
    const std::vector<int64_t>& coefficients() const { return coefficients_; }

    bool is_zero() const {
        for (int64_t c : coefficients_)
            if (c != 0) return false;
        return true;
    }

    DivisorClass operator+(const DivisorClass& o) const {
        check_rank(o);
        std::vector<int64_t> r(coefficients_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coefficients_[i], o.coefficients_[i]);
        return DivisorClass(std::move(r));
    }

    DivisorClass operator-(const DivisorClass& o) const {
        check_rank(o);
        std::vector<int64_t> r(coefficients_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(coefficients_[i], o.coefficients_[i]);
        return DivisorClass(std::move(r));
    }

    DivisorClass operator-() const {
        std::vector<int64_t> r(coefficients_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_neg(coefficients_[i]);
        return DivisorClass(std::move(r));
    }

    friend DivisorClass operator*(int64_t m, const DivisorClass& e) {
        std::vector<int64_t> r(e.coefficients_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(m, e.coefficients_[i]);
        return DivisorClass(std::move(r));
    }

    bool operator==(const DivisorClass& o) const { return coefficients_ == o.coefficients_; }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }

    // Canonical ordering used for every sorted class list in the toolkit.
    bool operator<(const DivisorClass& o) const { return coefficients_ < o.coefficients_; }

private:
    void check_rank(const DivisorClass& o) const {
        if (coefficients_.size() != o.coefficients_.size())
            throw DimensionError("divisor class rank mismatch: " +
                                 std::to_string(coefficients_.size()) + " vs " +
                                 std::to_string(o.coefficients_.size()));
    }

    std::vector<int64_t> coefficients_;
};

enum class SurfaceKind {
    RationalBlowup,      // CP^2 # k CP^2-bar, basis H, E1..Ek
    SphereProduct,       // S^2 x S^2, basis A, B
    RuledTrivialBlowup,  // S^2 x Sigma_h # k CP^2-bar, basis U, T, E1..Ek
    RuledNontrivial,     // nontrivial S^2 bundle over Sigma_h, basis U, T
};

// A surface preset: basis labels, intersection pairing and canonical class.
//
//   RationalBlowup(k):        H^2=1, Ei^2=-1,           K = -3H + sum Ei
//   SphereProduct:            A^2=B^2=0, A.B=1,         K = -2A - 2B
//   RuledTrivialBlowup(h,k):  U^2=T^2=0, U.T=1, Ei^2=-1 K = -2U + (2h-2)T + sum Ei
//   RuledNontrivial(h):       U^2=1, U.T=1, T^2=0,      K = -2U + (2h-1)T
class SurfaceModel {
public:
    static SurfaceModel rational_blowup(int64_t k) {
        if (k < 0) throw ModelError("rational_blowup needs k >= 0");
        SurfaceModel m;
        m.kind_ = SurfaceKind::RationalBlowup;
        m.k_ = k;
        m.basis_.push_back("H");
        for (int64_t i = 1; i <= k; ++i) m.basis_.push_back("E" + std::to_string(i));
        m.init_gram();
        m.gram_[0][0] = 1;
        for (std::size_t i = 1; i < m.rank(); ++i) m.gram_[i][i] = -1;
        std::vector<int64_t> kv(m.rank(), 1);
        kv[0] = -3;
        m.canonical_ = DivisorClass(std::move(kv));
        return m;
    }

    static SurfaceModel sphere_product() {
        SurfaceModel m;
        m.kind_ = SurfaceKind::SphereProduct;
        m.basis_ = {"A", "B"};
        m.init_gram();
        m.gram_[0][1] = m.gram_[1][0] = 1;
        m.canonical_ = DivisorClass({-2, -2});
        return m;
    }

    static SurfaceModel ruled_trivial_blowup(int64_t h, int64_t k) {
        if (h < 1) throw ModelError("ruled_trivial_blowup needs base genus h >= 1");
        if (k < 0) throw ModelError("ruled_trivial_blowup needs k >= 0");
        SurfaceModel m;
        m.kind_ = SurfaceKind::RuledTrivialBlowup;
        m.h_ = h;
        m.k_ = k;
        m.basis_ = {"U", "T"};
        for (int64_t i = 1; i <= k; ++i) m.basis_.push_back("E" + std::to_string(i));
        m.init_gram();
        m.gram_[0][1] = m.gram_[1][0] = 1;
        for (std::size_t i = 2; i < m.rank(); ++i) m.gram_[i][i] = -1;
        std::vector<int64_t> kv(m.rank(), 1);
        kv[0] = -2;
        kv[1] = 2 * h - 2;
        m.canonical_ = DivisorClass(std::move(kv));
        return m;
    }

    static SurfaceModel ruled_nontrivial(int64_t h) {
        if (h < 1) throw ModelError("ruled_nontrivial needs base genus h >= 1");
        SurfaceModel m;
        m.kind_ = SurfaceKind::RuledNontrivial;
        m.h_ = h;
        m.basis_ = {"U", "T"};
        m.init_gram();
        m.gram_[0][0] = 1;
        m.gram_[0][1] = m.gram_[1][0] = 1;
        m.canonical_ = DivisorClass({-2, 2 * h - 1});
        return m;
    }

    SurfaceKind kind() const { return kind_; }
    std::size_t rank() const { return basis_.size(); }
    int64_t blowup_count() const { return k_; }

    int64_t base_genus() const {
        if (!is_ruled()) throw ModelError("base genus is defined for ruled models only");
        return h_;
    }

    bool is_ruled() const {
        return kind_ == SurfaceKind::RuledTrivialBlowup || kind_ == SurfaceKind::RuledNontrivial;
    }

    bool is_rational() const {
        return kind_ == SurfaceKind::RationalBlowup || kind_ == SurfaceKind::SphereProduct;
    }

    const std::vector<std::string>& basis() const { return basis_; }

    int64_t gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }

    const DivisorClass& canonical_class() const { return canonical_; }

    // Index of a basis label; throws on unknown labels.
    std::size_t basis_index(const std::string& label) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == label) return i;
        throw ParseError("unknown basis label '" + label + "' on this surface");
    }

    DivisorClass basis_class(std::size_t i) const {
        std::vector<int64_t> v(rank(), 0);
        v.at(i) = 1;
        return DivisorClass(std::move(v));
    }

    DivisorClass basis_class(const std::string& label) const {
        return basis_class(basis_index(label));
    }

    DivisorClass zero_class() const { return DivisorClass::zero(rank()); }

    bool operator==(const SurfaceModel& o) const {
        return kind_ == o.kind_ && h_ == o.h_ && k_ == o.k_;
    }
    bool operator!=(const SurfaceModel& o) const { return !(*this == o); }

private:
    void init_gram() {
        gram_.assign(rank(), std::vector<int64_t>(rank(), 0));
    }

    SurfaceKind kind_ = SurfaceKind::RationalBlowup;
    int64_t h_ = 0;
    int64_t k_ = 0;
    std::vector<std::string> basis_;
    std::vector<std::vector<int64_t>> gram_;
    DivisorClass canonical_;
};

inline void require_rank(const SurfaceModel& model, const DivisorClass& e) {
    if (e.rank() != model.rank())
        throw DimensionError("class rank " + std::to_string(e.rank()) +
                             " does not match surface rank " + std::to_string(model.rank()));
}

// Intersection product e1^T . gram . e2; symmetric and bilinear.
inline int64_t pair(const SurfaceModel& model, const DivisorClass& e1, const DivisorClass& e2) {
    require_rank(model, e1);
    require_rank(model, e2);
    int64_t total = 0;
    for (std::size_t i = 0; i < model.rank(); ++i) {
        if (e1[i] == 0) continue;
        int64_t row = 0;
        for (std::size_t j = 0; j < model.rank(); ++j) {
            if (model.gram(i, j) == 0 || e2[j] == 0) continue;
            row = checked_add(row, checked_mul(model.gram(i, j), e2[j]));
        }
        total = checked_add(total, checked_mul(e1[i], row));
    }
    return total;
}

inline int64_t self_pair(const SurfaceModel& model, const DivisorClass& e) {
    return pair(model, e, e);
}

inline DivisorClass canonical_class(const SurfaceModel& model) {
    return model.canonical_class();
}

}  // namespace curveclass
