#pragma once

#include "qtau/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtau {

// Monomial in the odd time variables t1, t3, t5, ...  Factors are kept
// sorted by index; weight of t_k is k.
class OddMonomial {
public:
    using Factor = std::pair<int, int>;  // (odd index k, exponent e > 0)

    OddMonomial() = default;

    static OddMonomial one() { return {}; }
    static OddMonomial var(int k, int e = 1);
    static OddMonomial of(std::vector<Factor> factors);  // sorted, validated

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int weight() const { return weight_; }
    // Number of variables counting multiplicity (polynomial degree).
    int degree() const {
        int d = 0;
        for (const Factor& f : factors_) d += f.second;
        return d;
    }
    int exponent_of(int k) const;

    OddMonomial operator*(const OddMonomial& o) const;

    // If `den` divides this monomial, returns the quotient and the exact
    // falling-factorial factor prod_k e_k!/(e_k - d_k)! picked up by
    // applying the derivative monomial d/dt^den.  Otherwise nullopt.
    std::optional<std::pair<OddMonomial, Rational>> divide_with_falling(
        const OddMonomial& den) const;

    // Canonical order: by weight, then within a weight class the monomial
    // with the larger exponent at the smallest index comes first
    // (t1^3 precedes t3).  This is the report/CLI print order.
    friend bool operator<(const OddMonomial& x, const OddMonomial& y);
    friend bool operator==(const OddMonomial& x, const OddMonomial& y) {
        return x.factors_ == y.factors_;
    }
    friend bool operator!=(const OddMonomial& x, const OddMonomial& y) { return !(x == y); }

    std::string str() const;  // "t1^3*t3", "1" for the unit

private:
    std::vector<Factor> factors_;
    int weight_ = 0;
};

// All monomials in odd variables with weight exactly w (equivalently the
// partitions of w into odd parts), in canonical order.
std::vector<OddMonomial> odd_monomials_of_weight(int w);

// All monomials of weight <= max_weight, in canonical order.
std::vector<OddMonomial> odd_monomials_up_to(int max_weight);

}  // namespace qtau
