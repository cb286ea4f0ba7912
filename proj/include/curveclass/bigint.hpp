#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "curveclass/errors.hpp"

namespace curveclass {

// Arbitrary-precision signed integer, sign + little-endian base 2^32
// magnitude. Chains of chord-tangent steps square coordinate heights, so the
// cubic layer cannot run on fixed-width integers.
class BigInt {
public:
    BigInt() = default;

    BigInt(std::int64_t v) {  // NOLINT: implicit by design, mirrors int literals
        if (v == 0) return;
        sign_ = v > 0 ? 1 : -1;
        // Two chunks cover the full int64 range incl. INT64_MIN.
        std::uint64_t mag = v > 0 ? static_cast<std::uint64_t>(v)
                                  : ~static_cast<std::uint64_t>(v) + 1;
        mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
    }

    static BigInt from_string(const std::string& text) {
        std::size_t pos = 0;
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos >= text.size()) throw ParseError("empty integer literal");
        BigInt r;
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c < '0' || c > '9') throw ParseError("invalid digit in integer literal");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<std::uint32_t>(c - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_negative() const { return sign_ < 0; }

    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

    bool even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int cmp = compare_mag(a.mag_, b.mag_);
            if (cmp == 0) return BigInt();
            if (cmp > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division (quotient rounds toward zero, C semantics), so
    // (a/b)*b + a%b == a holds exactly.
    struct DivMod;
    static DivMod divmod(const BigInt& a, const BigInt& b);

    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int cmp = compare_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? cmp < 0 : cmp > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    BigInt pow(std::uint64_t n) const {
        BigInt base = *this;
        BigInt result = 1;
        while (n) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    // Floor of the square root of a nonnegative value, by Newton iteration.
    BigInt isqrt() const {
        if (sign_ < 0) throw ArithmeticError("isqrt of a negative value");
        if (sign_ == 0) return BigInt();
        std::size_t bits = bit_length();
        BigInt x = BigInt(1) << static_cast<unsigned>((bits + 1) / 2);
        for (;;) {
            BigInt y = (x + *this / x) / 2;
            if (y >= x) break;
            x = std::move(y);
        }
        return x;
    }

    bool is_perfect_square(BigInt* root = nullptr) const {
        if (sign_ < 0) return false;
        BigInt r = isqrt();
        if (r * r == *this) {
            if (root) *root = r;
            return true;
        }
        return false;
    }

    BigInt operator<<(unsigned bits) const {
        if (sign_ == 0) return BigInt();
        BigInt r = *this;
        unsigned words = bits / 32, rem = bits % 32;
        if (rem) {
            std::uint32_t carry = 0;
            for (auto& w : r.mag_) {
                std::uint64_t cur = (static_cast<std::uint64_t>(w) << rem) | carry;
                w = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = static_cast<std::uint32_t>(cur >> 32);
            }
            if (carry) r.mag_.push_back(carry);
        }
        r.mag_.insert(r.mag_.begin(), words, 0);
        return r;
    }

    std::size_t bit_length() const {
        if (mag_.empty()) return 0;
        std::uint32_t top = mag_.back();
        std::size_t bits = (mag_.size() - 1) * 32;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        std::uint64_t mag = magnitude_u64();
        if (sign_ >= 0) return mag <= 0x7fffffffffffffffull;
        return mag <= 0x8000000000000000ull;
    }

    std::int64_t to_int64() const {
        if (!fits_int64()) throw ArithmeticError("BigInt does not fit in int64");
        std::uint64_t mag = magnitude_u64();
        return sign_ >= 0 ? static_cast<std::int64_t>(mag)
                          : -static_cast<std::int64_t>(mag - 1) - 1;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> chunks;  // base 10^9, little endian
        BigInt tmp = abs();
        while (!tmp.is_zero()) {
            std::uint32_t rem = tmp.divmod_small_inplace(1000000000u);
            chunks.push_back(rem);
        }
        std::string out = sign_ < 0 ? "-" : "";
        out += std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

private:
    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    std::uint64_t magnitude_u64() const {
        std::uint64_t mag = 0;
        if (mag_.size() >= 1) mag = mag_[0];
        if (mag_.size() >= 2) mag |= static_cast<std::uint64_t>(mag_[1]) << 32;
        return mag;
    }

    void mul_small_inplace(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& w : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(w) * m + carry;
            w = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        trim();
        if (!mag_.empty() && sign_ == 0) sign_ = 1;
    }

    void add_small_inplace(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < mag_.size(); ++i) {
            std::uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        if (!mag_.empty()) sign_ = sign_ == 0 ? 1 : sign_;
    }

    // In-place magnitude division by a single chunk; returns the remainder.
    std::uint32_t divmod_small_inplace(std::uint32_t divisor) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag_[i];
            mag_[i] = static_cast<std::uint32_t>(cur / divisor);
            rem = cur % divisor;
        }
        trim();
        return static_cast<std::uint32_t>(rem);
    }

    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& longer = a.size() >= b.size() ? a : b;
        const auto& shorter = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(longer.size());
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < longer.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(longer[i]) + carry +
                                (i < shorter.size() ? shorter[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (std::int64_t{1} << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on normalized magnitudes (divisor of >= 2 chunks).
    static void knuth_divide(std::vector<std::uint32_t> u, std::vector<std::uint32_t> v,
                             std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        // Normalize so the divisor's top chunk has its high bit set.
        unsigned shift = 0;
        for (std::uint32_t top = v.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        auto shl = [&](std::vector<std::uint32_t>& w) {
            if (!shift) return;
            std::uint32_t carry = 0;
            for (auto& x : w) {
                std::uint64_t cur = (static_cast<std::uint64_t>(x) << shift) | carry;
                x = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = static_cast<std::uint32_t>(cur >> 32);
            }
            if (carry) w.push_back(carry);
        };
        shl(u);
        shl(v);
        std::size_t n = v.size(), m = u.size() >= n ? u.size() - n : 0;
        u.resize(u.size() + 1, 0);
        q.assign(m + 1, 0);
        const std::uint64_t base = std::uint64_t{1} << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / v[n - 1];
            std::uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // Multiply-subtract qhat * v from u[j .. j+n].
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
                if (t < 0) {
                    t += static_cast<std::int64_t>(base);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add v back.
                t += static_cast<std::int64_t>(base);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                    c2 = cur >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= static_cast<std::int64_t>(base) - 1;
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        // Remainder: low n chunks of u, shifted back.
        r.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
        if (shift) {
            std::uint32_t carry = 0;
            for (std::size_t i = r.size(); i-- > 0;) {
                std::uint32_t cur = r[i];
                r[i] = (cur >> shift) | carry;
                carry = cur << (32 - shift);
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }

    int sign_ = 0;
    std::vector<std::uint32_t> mag_;
};

struct BigInt::DivMod {
    BigInt quotient;
    BigInt remainder;
};

inline BigInt::DivMod BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw ArithmeticError("division by zero");
    int cmp = compare_mag(a.mag_, b.mag_);
    if (a.sign_ == 0 || cmp < 0) return {BigInt(), a};
    DivMod r;
    if (b.mag_.size() == 1) {
        std::uint64_t divisor = b.mag_[0];
        std::vector<std::uint32_t> q(a.mag_.size());
        std::uint64_t rem = 0;
        for (std::size_t i = a.mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.mag_[i];
            q[i] = static_cast<std::uint32_t>(cur / divisor);
            rem = cur % divisor;
        }
        r.quotient.mag_ = std::move(q);
        r.quotient.trim();
        if (rem) r.remainder.mag_.push_back(static_cast<std::uint32_t>(rem));
    } else {
        knuth_divide(a.mag_, b.mag_, r.quotient.mag_, r.remainder.mag_);
        r.quotient.trim();
        r.remainder.trim();
    }
    r.quotient.sign_ = r.quotient.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.remainder.sign_ = r.remainder.mag_.empty() ? 0 : a.sign_;
    return r;
}

inline BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).quotient; }
inline BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).remainder; }

}  // namespace curveclass
