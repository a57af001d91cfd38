#pragma once

#include "qtau/two_set.hpp"

namespace qtau {

// Finitely supported Laurent object in an auxiliary variable z whose
// coefficients are two-set polynomials.  Declared z-bounds are recorded at
// construction and enforced on every insertion and multiplication, so an
// undersized truncation window fails loudly instead of dropping terms.
template <typename C>
class LaurentZ {
public:
    LaurentZ(int zmin_cap, int zmax_cap, int joint_cap)
        : zmin_(zmin_cap), zmax_(zmax_cap), joint_cap_(joint_cap) {
        if (zmin_ > zmax_) throw std::invalid_argument("LaurentZ: empty z-range");
    }

    static LaurentZ one(int zmin, int zmax, int joint_cap) {
        LaurentZ r(zmin, zmax, joint_cap);
        r.add_term(0, TwoSetPoly<C>::one(joint_cap));
        return r;
    }

    int zmin_cap() const { return zmin_; }
    int zmax_cap() const { return zmax_; }
    int joint_cap() const { return joint_cap_; }
    const std::map<int, TwoSetPoly<C>>& coefficients() const { return coeffs_; }

    void add_term(int zpow, const TwoSetPoly<C>& p) {
        if (p.is_zero()) return;
        if (zpow < zmin_ || zpow > zmax_)
            throw std::invalid_argument("LaurentZ: z-power outside declared bounds");
        auto [it, fresh] = coeffs_.try_emplace(zpow, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    TwoSetPoly<C> coefficient(int zpow) const {
        auto it = coeffs_.find(zpow);
        return it == coeffs_.end() ? TwoSetPoly<C>::zero(joint_cap_) : it->second;
    }

    LaurentZ& operator+=(const LaurentZ& o) {
        for (const auto& [p, c] : o.coeffs_) add_term(p, c);
        return *this;
    }

    friend LaurentZ operator*(const LaurentZ& x, const LaurentZ& y) {
        if (x.joint_cap_ != y.joint_cap_)
            throw std::invalid_argument("LaurentZ: mismatched joint caps");
        LaurentZ r(x.zmin_ + y.zmin_, x.zmax_ + y.zmax_, x.joint_cap_);
        for (const auto& [px, cx] : x.coeffs_)
            for (const auto& [py, cy] : y.coeffs_) {
                TwoSetPoly<C> prod = cx * cy;
                if (!prod.is_zero()) r.add_term(px + py, prod);
            }
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [p, c] : coeffs_) {
            if (!first) out += " + ";
            out += "z^" + std::to_string(p) + "*(" + c.str() + ")";
            first = false;
        }
        return out;
    }

private:
    int zmin_, zmax_, joint_cap_;
    std::map<int, TwoSetPoly<C>> coeffs_;
};

}  // namespace qtau
