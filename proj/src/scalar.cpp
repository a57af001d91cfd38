#include "qtau/scalar.hpp"

#include <algorithm>

namespace qtau {

std::string Root2Number::str() const {
    if (is_rational()) return to_string(a_);
    std::string rad = (b_ == 1) ? "sqrt2" : (b_ == -1 ? "-sqrt2" : to_string(b_) + "*sqrt2");
    if (qtau::is_zero(a_)) return rad;
    std::string s = "(" + to_string(a_);
    s += (sgn(b_) < 0) ? " - " : " + ";
    Rational babs = abs(b_);
    s += (babs == 1) ? "sqrt2" : to_string(babs) + "*sqrt2";
    return s + ")";
}

CoeffScalar CoeffScalar::of(const Root2Number& v) {
    CoeffScalar c;
    if (!v.is_zero()) c.terms_.push_back({Key{}, v});
    return c;
}

CoeffScalar CoeffScalar::monomial(const Root2Number& v, int beta_exp, int nu_exp) {
    if (nu_exp < 0) throw std::invalid_argument("CoeffScalar: nu exponent must be nonnegative");
    CoeffScalar c;
    if (!v.is_zero()) c.terms_.push_back({Key{beta_exp, nu_exp}, v});
    return c;
}

bool CoeffScalar::beta_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.first.beta == 0; });
}

bool CoeffScalar::nu_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.nu == 0; });
}

bool CoeffScalar::sqrt2_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.second.is_rational(); });
}

int CoeffScalar::max_nu_degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.first.nu);
    return d;
}

Root2Number CoeffScalar::constant_value() const {
    if (terms_.empty()) return Root2Number::zero();
    if (!is_constant()) throw std::domain_error("CoeffScalar: not a beta/nu-free constant");
    return terms_[0].second;
}

Rational CoeffScalar::rational_value() const {
    if (!is_rational()) throw std::domain_error("CoeffScalar: not rational");
    return terms_.empty() ? Rational(0) : terms_[0].second.a();
}

void CoeffScalar::insert(const Key& k, const Root2Number& v) {
    if (v.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, const Key& key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {k, v});
    }
}

CoeffScalar CoeffScalar::operator-() const {
    CoeffScalar r = *this;
    for (Term& t : r.terms_) t.second = -t.second;
    return r;
}

CoeffScalar& CoeffScalar::operator+=(const CoeffScalar& o) {
    for (const Term& t : o.terms_) insert(t.first, t.second);
    return *this;
}

CoeffScalar& CoeffScalar::operator-=(const CoeffScalar& o) {
    for (const Term& t : o.terms_) insert(t.first, -t.second);
    return *this;
}

CoeffScalar operator*(const CoeffScalar& x, const CoeffScalar& y) {
    CoeffScalar r;
    for (const CoeffScalar::Term& tx : x.terms_)
        for (const CoeffScalar::Term& ty : y.terms_)
            r.insert(CoeffScalar::Key{tx.first.beta + ty.first.beta, tx.first.nu + ty.first.nu},
                     tx.second * ty.second);
    return r;
}

CoeffScalar& CoeffScalar::scale(const Root2Number& v) {
    if (v.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.second *= v;
    return *this;
}

CoeffScalar CoeffScalar::pow(int e) const {
    if (e < 0) {
        if (terms_.size() != 1)
            throw std::domain_error("CoeffScalar: negative power of a non-monomial");
        const Term& t = terms_[0];
        if (t.first.nu != 0 && e != 0)
            throw std::domain_error("CoeffScalar: nu exponents cannot be negative");
        return monomial(t.second.pow(e), t.first.beta * e, 0);
    }
    CoeffScalar acc = one(), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Root2Number CoeffScalar::specialize(const Root2Number& beta0, const Root2Number& nu0) const {
    if (beta0.is_zero()) throw std::domain_error("CoeffScalar: beta is a Laurent symbol, beta0 != 0 required");
    Root2Number acc;
    for (const Term& t : terms_)
        acc += t.second * beta0.pow(t.first.beta) * nu0.pow(t.first.nu);
    return acc;
}

std::string CoeffScalar::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : terms_) {
        std::string piece = t.second.str();
        if (t.first.beta != 0)
            piece += "*beta" + (t.first.beta == 1 ? "" : "^" + std::to_string(t.first.beta));
        if (t.first.nu != 0)
            piece += "*nu" + (t.first.nu == 1 ? "" : "^" + std::to_string(t.first.nu));
        if (!first) s += " + ";
        s += piece;
        first = false;
    }
    if (terms_.size() > 1 || terms_[0].first != Key{}) return "(" + s + ")";
    return s;
}

std::string HbarExp::str() const {
    if (thirds % 3 == 0) return std::to_string(thirds / 3);
    return std::to_string(thirds) + "/3";
}

}  // namespace qtau
