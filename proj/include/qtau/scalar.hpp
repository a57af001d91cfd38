#pragma once

#include "qtau/root2.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace qtau {

// Coefficient in Q(sqrt2)[nu][beta, beta^-1]: a finitely supported map
// (beta exponent, nu exponent) -> Root2Number.  beta is a Laurent symbol
// (negative exponents allowed), nu = N^2 is an ordinary polynomial symbol.
class CoeffScalar {
public:
    struct Key {
        int beta = 0;
        int nu = 0;
        auto operator<=>(const Key&) const = default;
    };
    using Term = std::pair<Key, Root2Number>;

    CoeffScalar() = default;

    static CoeffScalar zero() { return {}; }
    static CoeffScalar one() { return of(Root2Number::one()); }
    static CoeffScalar of(const Rational& r) { return of(Root2Number(r)); }
    static CoeffScalar of(const Root2Number& v);
    // value * beta^be * nu^ne
    static CoeffScalar monomial(const Root2Number& v, int beta_exp, int nu_exp);
    static CoeffScalar beta_pow(int e) { return monomial(Root2Number::one(), e, 0); }
    static CoeffScalar nu_pow(int e) { return monomial(Root2Number::one(), 0, e); }

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_[0].first == Key{} && terms_[0].second.is_rational());
    }
    bool is_constant() const {  // free of beta and nu (may carry sqrt2)
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Key{});
    }
    bool beta_free() const;
    bool nu_free() const;
    bool sqrt2_free() const;
    int max_nu_degree() const;

    // Requires is_constant(); the Root2Number value (zero if empty).
    Root2Number constant_value() const;
    // Requires is_rational().
    Rational rational_value() const;

    CoeffScalar operator-() const;
    CoeffScalar& operator+=(const CoeffScalar& o);
    CoeffScalar& operator-=(const CoeffScalar& o);
    friend CoeffScalar operator+(CoeffScalar x, const CoeffScalar& y) { return x += y; }
    friend CoeffScalar operator-(CoeffScalar x, const CoeffScalar& y) { return x -= y; }
    friend CoeffScalar operator*(const CoeffScalar& x, const CoeffScalar& y);
    CoeffScalar& operator*=(const CoeffScalar& o) { return *this = *this * o; }
    CoeffScalar& scale(const Root2Number& v);

    CoeffScalar pow(int e) const;

    friend bool operator==(const CoeffScalar& x, const CoeffScalar& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const CoeffScalar& x, const CoeffScalar& y) { return !(x == y); }

    // Ring homomorphism beta -> beta0 (nonzero), nu -> nu0.
    Root2Number specialize(const Root2Number& beta0, const Root2Number& nu0) const;

    std::string str() const;

private:
    void insert(const Key& k, const Root2Number& v);
    std::vector<Term> terms_;  // sorted by Key, no zero values
};

inline bool is_zero(const CoeffScalar& x) { return x.is_zero(); }

// Exact hbar exponent with denominator dividing 3, stored in thirds.
struct HbarExp {
    long thirds = 0;

    static HbarExp whole(long n) { return HbarExp{3 * n}; }
    bool is_whole() const { return thirds % 3 == 0; }

    HbarExp operator+(HbarExp o) const { return HbarExp{thirds + o.thirds}; }
    auto operator<=>(const HbarExp&) const = default;

    std::string str() const;  // "2", "5/3", "-1/3"
};

}  // namespace qtau
