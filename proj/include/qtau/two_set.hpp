#pragma once

#include "qtau/poly.hpp"

namespace qtau {

// Monomial in two disjoint families of odd times, t and t'.
struct TwoSetMonomial {
    OddMonomial t;
    OddMonomial tp;

    int weight() const { return t.weight() + tp.weight(); }
    bool is_one() const { return t.is_one() && tp.is_one(); }

    TwoSetMonomial operator*(const TwoSetMonomial& o) const { return {t * o.t, tp * o.tp}; }

    friend bool operator<(const TwoSetMonomial& x, const TwoSetMonomial& y) {
        if (x.weight() != y.weight()) return x.weight() < y.weight();
        if (x.t != y.t) return x.t < y.t;
        return x.tp < y.tp;
    }
    friend bool operator==(const TwoSetMonomial& x, const TwoSetMonomial& y) {
        return x.t == y.t && x.tp == y.tp;
    }

    // The primed family renders as tp1, tp3, ...
    std::string str() const {
        if (is_one()) return "1";
        if (tp.is_one()) return t.str();
        std::string primed;
        for (size_t i = 0; i < tp.factors().size(); ++i) {
            const auto& [k, e] = tp.factors()[i];
            if (i) primed += '*';
            primed += "tp" + std::to_string(k);
            if (e > 1) primed += "^" + std::to_string(e);
        }
        return t.is_one() ? primed : t.str() + "*" + primed;
    }
};

// Polynomial in the two families with a joint weight cap
// (weight = weight_t + weight_t').
template <typename C>
class TwoSetPoly {
public:
    using Terms = std::map<TwoSetMonomial, C>;

    explicit TwoSetPoly(int joint_cap) : cap_(joint_cap) {
        if (joint_cap < 0) throw std::invalid_argument("TwoSetPoly: negative cap");
    }

    static TwoSetPoly zero(int cap) { return TwoSetPoly(cap); }
    static TwoSetPoly one(int cap) {
        TwoSetPoly p(cap);
        p.add_term({}, coeff_from_rational<C>(Rational(1)));
        return p;
    }
    // Embeds a one-family polynomial; family 0 is t, family 1 is t'.
    static TwoSetPoly embed(const Poly<C>& p, int family, int cap) {
        TwoSetPoly r(cap);
        for (const auto& [m, c] : p.terms())
            r.add_term(family == 0 ? TwoSetMonomial{m, {}} : TwoSetMonomial{{}, m}, c);
        return r;
    }
    // a(t) * b(t'), truncated at the joint cap.
    static TwoSetPoly outer(const Poly<C>& a, const Poly<C>& b, int cap) {
        TwoSetPoly r(cap);
        for (const auto& [ma, ca] : a.terms()) {
            if (ma.weight() > cap) continue;
            for (const auto& [mb, cb] : b.terms())
                r.add_term({ma, mb}, ca * cb);
        }
        return r;
    }

    int joint_cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TwoSetMonomial& m, const C& c) {
        if (m.weight() > cap_ || qtau::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (qtau::is_zero(it->second)) terms_.erase(it);
        }
    }

    C constant_term() const {
        auto it = terms_.find(TwoSetMonomial{});
        return it == terms_.end() ? C{} : it->second;
    }

    TwoSetPoly& operator+=(const TwoSetPoly& o) {
        require_same_cap(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    TwoSetPoly& operator-=(const TwoSetPoly& o) {
        require_same_cap(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend TwoSetPoly operator+(TwoSetPoly x, const TwoSetPoly& y) { return x += y; }
    friend TwoSetPoly operator-(TwoSetPoly x, const TwoSetPoly& y) { return x -= y; }

    friend TwoSetPoly operator*(const TwoSetPoly& x, const TwoSetPoly& y) {
        x.require_same_cap(y);
        TwoSetPoly r(x.cap_);
        for (const auto& [mx, cx] : x.terms_) {
            if (mx.weight() > x.cap_) continue;
            for (const auto& [my, cy] : y.terms_) {
                if (mx.weight() + my.weight() > x.cap_) continue;
                r.add_term(mx * my, cx * cy);
            }
        }
        return r;
    }
    TwoSetPoly& operator*=(const TwoSetPoly& o) { return *this = *this * o; }

    TwoSetPoly& scale(const C& c) {
        Terms scaled;
        if (!qtau::is_zero(c))
            for (const auto& [m, v] : terms_) {
                C nv = v * c;
                if (!qtau::is_zero(nv)) scaled.emplace(m, std::move(nv));
            }
        terms_ = std::move(scaled);
        return *this;
    }

    TwoSetPoly exp() const {
        if (!qtau::is_zero(constant_term()))
            throw std::invalid_argument("TwoSetPoly::exp: nonzero constant term");
        TwoSetPoly acc = one(cap_), pw = one(cap_);
        for (int n = 1; n <= cap_; ++n) {
            pw = pw * *this;
            if (pw.is_zero()) break;
            TwoSetPoly t = pw;
            t.scale(coeff_from_rational<C>(Rational(1) / factorial(n)));
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const TwoSetPoly& x, const TwoSetPoly& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const TwoSetPoly& x, const TwoSetPoly& y) { return !(x == y); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = detail::coeff_str(c);
            bool neg = detail::strip_leading_minus(cs);
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (m.is_one())
                out += cs;
            else if (cs == "1")
                out += m.str();
            else
                out += cs + "*" + m.str();
            first = false;
        }
        return out;
    }

private:
    void require_same_cap(const TwoSetPoly& o) const {
        if (cap_ != o.cap_) throw std::invalid_argument("TwoSetPoly: mismatched caps");
    }

    int cap_;
    Terms terms_;
};

using TwoSetQ = TwoSetPoly<Rational>;
using TwoSetS = TwoSetPoly<CoeffScalar>;

}  // namespace qtau
