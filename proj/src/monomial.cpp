#include "qtau/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtau {

OddMonomial OddMonomial::var(int k, int e) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("OddMonomial: index must be odd positive");
    if (e < 1) throw std::invalid_argument("OddMonomial: exponent must be positive");
    OddMonomial m;
    m.factors_.push_back({k, e});
    m.weight_ = k * e;
    return m;
}

OddMonomial OddMonomial::of(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    OddMonomial m;
    for (const Factor& f : factors) {
        if (f.first < 1 || f.first % 2 == 0 || f.second < 1)
            throw std::invalid_argument("OddMonomial: bad factor");
        if (!m.factors_.empty() && m.factors_.back().first == f.first)
            throw std::invalid_argument("OddMonomial: duplicate index");
        m.factors_.push_back(f);
        m.weight_ += f.first * f.second;
    }
    return m;
}

int OddMonomial::exponent_of(int k) const {
    for (const Factor& f : factors_) {
        if (f.first == k) return f.second;
        if (f.first > k) break;
    }
    return 0;
}

OddMonomial OddMonomial::operator*(const OddMonomial& o) const {
    OddMonomial r;
    r.weight_ = weight_ + o.weight_;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
            r.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    return r;
}

std::optional<std::pair<OddMonomial, Rational>> OddMonomial::divide_with_falling(
    const OddMonomial& den) const {
    OddMonomial q;
    Rational falling(1);
    auto a = factors_.begin();
    for (const Factor& d : den.factors_) {
        while (a != factors_.end() && a->first < d.first) {
            q.factors_.push_back(*a);
            q.weight_ += a->first * a->second;
            ++a;
        }
        if (a == factors_.end() || a->first != d.first || a->second < d.second)
            return std::nullopt;
        for (int i = 0; i < d.second; ++i) falling *= rational(a->second - i);
        if (a->second > d.second) {
            q.factors_.push_back({a->first, a->second - d.second});
            q.weight_ += a->first * (a->second - d.second);
        }
        ++a;
    }
    while (a != factors_.end()) {
        q.factors_.push_back(*a);
        q.weight_ += a->first * a->second;
        ++a;
    }
    return std::make_pair(std::move(q), std::move(falling));
}

bool operator<(const OddMonomial& x, const OddMonomial& y) {
    if (x.weight_ != y.weight_) return x.weight_ < y.weight_;
    auto a = x.factors_.begin(), b = y.factors_.begin();
    while (a != x.factors_.end() && b != y.factors_.end()) {
        if (a->first != b->first) return a->first < b->first;  // present index beats absent (exp 0)
        if (a->second != b->second) return a->second > b->second;
        ++a, ++b;
    }
    // One is a prefix of the other; with equal weight that can only happen
    // for equal monomials, but keep the comparison total regardless.
    return (a != x.factors_.end());
}

std::string OddMonomial::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += '*';
        s += "t" + std::to_string(factors_[i].first);
        if (factors_[i].second > 1) s += "^" + std::to_string(factors_[i].second);
    }
    return s;
}

namespace {

void monomials_rec(int remaining, int max_index, std::vector<OddMonomial::Factor>& acc,
                   std::vector<OddMonomial>& out) {
    if (remaining == 0) {
        out.push_back(OddMonomial::of(acc));
        return;
    }
    for (int k = std::min(max_index, remaining); k >= 1; k -= 2) {
        if (k % 2 == 0) --k;
        for (int e = remaining / k; e >= 1; --e) {
            acc.push_back({k, e});
            monomials_rec(remaining - k * e, k - 2, acc, out);
            acc.pop_back();
        }
    }
}

}  // namespace

std::vector<OddMonomial> odd_monomials_of_weight(int w) {
    if (w < 0) throw std::invalid_argument("odd_monomials_of_weight: negative weight");
    std::vector<OddMonomial> out;
    std::vector<OddMonomial::Factor> acc;
    int start = (w % 2 == 0) ? w - 1 : w;
    monomials_rec(w, std::max(start, 1), acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OddMonomial> odd_monomials_up_to(int max_weight) {
    std::vector<OddMonomial> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto level = odd_monomials_of_weight(w);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace qtau
