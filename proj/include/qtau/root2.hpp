#pragma once

#include "qtau/rational.hpp"

#include <string>

namespace qtau {

// Element a + b*sqrt(2) of the quadratic extension Q(sqrt 2).
// Half-integer powers of 2 (from the Q-function normalization 2^{-l/2})
// land in the b component.
class Root2Number {
public:
    Root2Number() : a_(0), b_(0) {}
    Root2Number(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    /*implicit*/ Root2Number(const Rational& a) : a_(a), b_(0) {}

    static Root2Number zero() { return {}; }
    static Root2Number one() { return Root2Number(Rational(1), Rational(0)); }
    static Root2Number sqrt2() { return Root2Number(Rational(0), Rational(1)); }

    // 2^{h/2} for integer h (possibly negative): even h stays rational,
    // odd h picks up one factor of sqrt(2).
    static Root2Number pow2_half(long h) {
        long q = (h >= 0) ? h / 2 : -((-h + 1) / 2);
        long r = h - 2 * q;  // 0 or 1
        Rational p = pow_rational(rational(2), q);
        return r == 0 ? Root2Number(p, Rational(0)) : Root2Number(Rational(0), p);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return qtau::is_zero(a_) && qtau::is_zero(b_); }
    bool is_rational() const { return qtau::is_zero(b_); }

    Root2Number operator-() const { return Root2Number(-a_, -b_); }

    Root2Number& operator+=(const Root2Number& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Root2Number& operator-=(const Root2Number& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Root2Number& operator*=(const Root2Number& o) {
        // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 2 b1 b2 + (a1 b2 + a2 b1) r
        Rational a = a_ * o.a_ + 2 * b_ * o.b_;
        Rational b = a_ * o.b_ + o.a_ * b_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }

    friend Root2Number operator+(Root2Number x, const Root2Number& y) { return x += y; }
    friend Root2Number operator-(Root2Number x, const Root2Number& y) { return x -= y; }
    friend Root2Number operator*(Root2Number x, const Root2Number& y) { return x *= y; }

    // Exact inverse via the conjugate: (a + b r)(a - b r) = a^2 - 2 b^2.
    Root2Number inverse() const {
        Rational norm = a_ * a_ - 2 * b_ * b_;
        if (qtau::is_zero(norm)) throw std::domain_error("Root2Number: inverse of zero");
        return Root2Number(a_ / norm, -b_ / norm);
    }

    Root2Number& operator/=(const Root2Number& o) { return *this *= o.inverse(); }
    friend Root2Number operator/(Root2Number x, const Root2Number& y) { return x /= y; }

    Root2Number pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Root2Number acc = one(), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Root2Number& x, const Root2Number& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Root2Number& x, const Root2Number& y) { return !(x == y); }

    // "a", "b*sqrt2" or "(a + b*sqrt2)".
    std::string str() const;

private:
    Rational a_, b_;
};

inline bool is_zero(const Root2Number& x) { return x.is_zero(); }

}  // namespace qtau
