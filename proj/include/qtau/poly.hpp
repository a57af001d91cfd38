#pragma once

#include "qtau/monomial.hpp"
#include "qtau/root2.hpp"
#include "qtau/scalar.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace qtau {

template <typename C>
C coeff_from_rational(const Rational& r);

template <>
inline Rational coeff_from_rational<Rational>(const Rational& r) {
    return r;
}
template <>
inline Root2Number coeff_from_rational<Root2Number>(const Rational& r) {
    return Root2Number(r);
}
template <>
inline CoeffScalar coeff_from_rational<CoeffScalar>(const Rational& r) {
    return CoeffScalar::of(r);
}

// Sparse polynomial in the odd time variables over coefficient ring C,
// truncated by total t-weight (deg t_k = k).  Ring operations drop any
// monomial whose weight exceeds the cap; caps never extend silently.
template <typename C>
class Poly {
public:
    using Terms = std::map<OddMonomial, C>;

    explicit Poly(int weight_cap) : cap_(weight_cap) {
        if (weight_cap < 0) throw std::invalid_argument("Poly: negative weight cap");
    }

    static Poly zero(int cap) { return Poly(cap); }
    static Poly one(int cap) {
        Poly p(cap);
        p.add_term(OddMonomial::one(), coeff_from_rational<C>(Rational(1)));
        return p;
    }
    static Poly term(const OddMonomial& m, const C& c, int cap) {
        Poly p(cap);
        p.add_term(m, c);
        return p;
    }
    static Poly var(int k, int cap) {
        return term(OddMonomial::var(k), coeff_from_rational<C>(Rational(1)), cap);
    }

    int weight_cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() &&
               terms_.begin()->second == coeff_from_rational<C>(Rational(1));
    }

    C coefficient(const OddMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C{} : it->second;
    }
    C constant_term() const { return coefficient(OddMonomial::one()); }

    void add_term(const OddMonomial& m, const C& c) {
        if (m.weight() > cap_ || qtau::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (qtau::is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(cap_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        require_same_cap(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same_cap(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }

    friend Poly operator*(const Poly& x, const Poly& y) {
        x.require_same_cap(y);
        Poly r(x.cap_);
        for (const auto& [mx, cx] : x.terms_) {
            if (mx.weight() > x.cap_) continue;
            for (const auto& [my, cy] : y.terms_) {
                if (mx.weight() + my.weight() > x.cap_) continue;
                r.add_term(mx * my, cx * cy);
            }
        }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const C& c) {
        if (qtau::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        Terms scaled;
        for (const auto& [m, v] : terms_) {
            C nv = v * c;
            if (!qtau::is_zero(nv)) scaled.emplace(m, std::move(nv));
        }
        terms_ = std::move(scaled);
        return *this;
    }
    Poly scaled(const C& c) const {
        Poly r = *this;
        r.scale(c);
        return r;
    }

    // exp(p) = sum p^n / n!; requires zero constant term so the series
    // terminates at the weight cap.
    Poly exp() const {
        if (!qtau::is_zero(constant_term()))
            throw std::invalid_argument("Poly::exp: nonzero constant term");
        Poly acc = one(cap_);
        Poly pw = one(cap_);
        for (int n = 1; n <= cap_; ++n) {
            pw = pw * *this;
            if (pw.is_zero()) break;
            acc += pw.scaled(coeff_from_rational<C>(Rational(1) / factorial(n)));
        }
        return acc;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly acc = one(cap_), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Partial derivative d/dt_k.
    Poly diff(int k) const {
        Poly r(cap_);
        OddMonomial dk = OddMonomial::var(k);
        for (const auto& [m, c] : terms_) {
            auto q = m.divide_with_falling(dk);
            if (q) r.add_term(q->first, c * coeff_from_rational<C>(q->second));
        }
        return r;
    }

    // t_k -> c * t_k for every k: each monomial scales by c^degree.
    Poly rescale_times(const C& c) const {
        Poly r(cap_);
        for (const auto& [m, v] : terms_) {
            C factor = coeff_from_rational<C>(Rational(1));
            for (int i = 0; i < m.degree(); ++i) factor = factor * c;
            r.add_term(m, v * factor);
        }
        return r;
    }

    // Exact evaluation at a finitely supported point; missing variables are 0.
    C specialize(const std::map<int, C>& point) const {
        C acc{};
        for (const auto& [m, c] : terms_) {
            C v = c;
            bool dead = false;
            for (const auto& [k, e] : m.factors()) {
                auto it = point.find(k);
                if (it == point.end() || qtau::is_zero(it->second)) {
                    dead = true;
                    break;
                }
                for (int i = 0; i < e; ++i) v = v * it->second;
            }
            if (!dead) acc += v;
        }
        return acc;
    }

    Poly truncated(int new_cap) const {
        Poly r(new_cap);
        for (const auto& [m, c] : terms_) r.add_term(m, c);
        return r;
    }

    template <typename D>
    Poly<D> convert(const std::function<D(const C&)>& f) const {
        Poly<D> r(cap_);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    int max_weight() const {
        int w = 0;
        for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
        return w;
    }
    bool is_homogeneous(int w) const {
        for (const auto& [m, c] : terms_)
            if (m.weight() != w) return false;
        return true;
    }

    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    // Canonical text, terms in (weight, lex) order: "4/3*t1^3 - 4*t3".
    std::string str() const;

private:
    void require_same_cap(const Poly& o) const {
        if (cap_ != o.cap_) throw std::invalid_argument("Poly: mismatched weight caps");
    }

    int cap_;
    Terms terms_;
};

namespace detail {

inline std::string coeff_str(const Rational& r) { return to_string(r); }
inline std::string coeff_str(const Root2Number& v) { return v.str(); }
inline std::string coeff_str(const CoeffScalar& c) { return c.str(); }

// True when the rendered coefficient starts with a bare minus sign that the
// term joiner can absorb ("- 4*t3").
inline bool strip_leading_minus(std::string& s) {
    if (!s.empty() && s[0] == '-') {
        s.erase(0, 1);
        return true;
    }
    return false;
}

}  // namespace detail

template <typename C>
std::string Poly<C>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = detail::coeff_str(c);
        bool neg = detail::strip_leading_minus(cs);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
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

using PolyQ = Poly<Rational>;
using PolyS = Poly<CoeffScalar>;

inline PolyS to_symbolic(const PolyQ& p) {
    PolyS r(p.weight_cap());
    for (const auto& [m, c] : p.terms()) r.add_term(m, CoeffScalar::of(c));
    return r;
}

inline PolyS to_symbolic(const PolyQ& p, const Root2Number& scale) {
    PolyS r(p.weight_cap());
    for (const auto& [m, c] : p.terms()) r.add_term(m, CoeffScalar::of(Root2Number(c) * scale));
    return r;
}

}  // namespace qtau
