#pragma once

#include "qtau/poly.hpp"

#include <map>

namespace qtau {

// Finitely supported series in hbar (exponents with denominator dividing 3)
// with odd-time polynomial coefficients.  All components share one weight
// cap; the hbar truncation order is carried in thirds.
class HbarSeries {
public:
    HbarSeries(int weight_cap, long max_thirds)
        : weight_cap_(weight_cap), max_thirds_(max_thirds) {}

    static HbarSeries one(int weight_cap, long max_thirds) {
        HbarSeries s(weight_cap, max_thirds);
        s.set_component(HbarExp{0}, PolyS::one(weight_cap));
        return s;
    }

    int weight_cap() const { return weight_cap_; }
    long max_thirds() const { return max_thirds_; }
    const std::map<HbarExp, PolyS>& components() const { return comps_; }

    PolyS component(HbarExp h) const {
        auto it = comps_.find(h);
        return it == comps_.end() ? PolyS::zero(weight_cap_) : it->second;
    }
    PolyS component_whole(long n) const { return component(HbarExp::whole(n)); }

    void set_component(HbarExp h, PolyS p) {
        if (h.thirds > max_thirds_ || p.is_zero()) return;
        comps_.insert_or_assign(h, std::move(p));
    }
    void add_component(HbarExp h, const PolyS& p) {
        if (h.thirds > max_thirds_ || p.is_zero()) return;
        auto it = comps_.find(h);
        if (it == comps_.end()) {
            comps_.emplace(h, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    bool is_zero() const { return comps_.empty(); }
    bool is_one() const {
        return comps_.size() == 1 && comps_.begin()->first == HbarExp{0} &&
               comps_.begin()->second.is_one();
    }

    HbarSeries operator-() const {
        HbarSeries r(weight_cap_, max_thirds_);
        for (const auto& [h, p] : comps_) r.comps_.emplace(h, -p);
        return r;
    }
    HbarSeries& operator+=(const HbarSeries& o) {
        for (const auto& [h, p] : o.comps_) add_component(h, p);
        return *this;
    }
    HbarSeries& operator-=(const HbarSeries& o) {
        for (const auto& [h, p] : o.comps_) add_component(h, -p);
        return *this;
    }
    friend HbarSeries operator+(HbarSeries x, const HbarSeries& y) { return x += y; }
    friend HbarSeries operator-(HbarSeries x, const HbarSeries& y) { return x -= y; }

    friend HbarSeries operator*(const HbarSeries& x, const HbarSeries& y) {
        if (x.weight_cap_ != y.weight_cap_)
            throw std::invalid_argument("HbarSeries: mismatched weight caps");
        HbarSeries r(x.weight_cap_, std::min(x.max_thirds_, y.max_thirds_));
        for (const auto& [hx, px] : x.comps_)
            for (const auto& [hy, py] : y.comps_) {
                if (hx.thirds + hy.thirds > r.max_thirds_) continue;
                r.add_component(hx + hy, px * py);
            }
        return r;
    }

    // Formal logarithm; requires the hbar^0 component to be exactly 1 and
    // every other component to sit at a positive exponent.
    HbarSeries log() const {
        if (!component(HbarExp{0}).is_one())
            throw std::invalid_argument("HbarSeries::log: constant term must be 1");
        HbarSeries x = *this;
        x.comps_.erase(HbarExp{0});
        long min_pos = 0;
        for (const auto& [h, p] : x.comps_) {
            if (h.thirds <= 0) throw std::invalid_argument("HbarSeries::log: nonpositive hbar exponent");
            min_pos = (min_pos == 0) ? h.thirds : std::min(min_pos, h.thirds);
        }
        HbarSeries acc(weight_cap_, max_thirds_);
        if (min_pos == 0) return acc;  // series was exactly 1
        HbarSeries pw = x;
        Rational sign(1);
        for (long n = 1; n * min_pos <= max_thirds_; ++n) {
            HbarSeries t = pw;
            t.scale(CoeffScalar::of(sign / rational(n)));
            acc += t;
            sign = -sign;
            pw = pw * x;
            if (pw.is_zero()) break;
        }
        return acc;
    }

    HbarSeries& scale(const CoeffScalar& c) {
        std::map<HbarExp, PolyS> out;
        if (!qtau::is_zero(c))
            for (auto& [h, p] : comps_) {
                PolyS np = p.scaled(c);
                if (!np.is_zero()) out.emplace(h, std::move(np));
            }
        comps_ = std::move(out);
        return *this;
    }

    // t_k -> c*t_k in every component.
    HbarSeries rescale_times(const CoeffScalar& c) const {
        HbarSeries r(weight_cap_, max_thirds_);
        for (const auto& [h, p] : comps_) r.set_component(h, p.rescale_times(c));
        return r;
    }

    friend bool operator==(const HbarSeries& x, const HbarSeries& y) {
        return x.comps_ == y.comps_;
    }
    friend bool operator!=(const HbarSeries& x, const HbarSeries& y) { return !(x == y); }

    std::string str() const {
        if (comps_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [h, p] : comps_) {
            if (!first) out += " + ";
            if (h.thirds == 0)
                out += "(" + p.str() + ")";
            else
                out += "h^(" + h.str() + ")*(" + p.str() + ")";
            first = false;
        }
        return out;
    }

private:
    int weight_cap_;
    long max_thirds_;
    std::map<HbarExp, PolyS> comps_;
};

}  // namespace qtau
