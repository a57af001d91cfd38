#include "qtau/partitions.hpp"

#include <sstream>
#include <stdexcept>

namespace qtau {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 0;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (*it <= prev) throw std::invalid_argument("StrictPartition: parts must be strictly decreasing and positive");
        prev = *it;
    }
    for (int p : parts_) weight_ += p;
}

StrictPartition StrictPartition::parse(const std::string& text) {
    if (text.empty() || text == "-") return {};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("StrictPartition: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return StrictPartition(std::move(parts));
}

StrictPartition StrictPartition::doubled() const {
    std::vector<int> d = parts_;
    for (int& p : d) p *= 2;
    return StrictPartition(std::move(d));
}

std::string StrictPartition::str() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // Largest-first recursion yields lexicographic-descending output.
        acc.push_back(p);
        enumerate_rec(remaining - p, p - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> enumerate_strict(int weight) {
    if (weight < 0) throw std::invalid_argument("enumerate_strict: negative weight");
    std::vector<StrictPartition> out;
    std::vector<int> acc;
    enumerate_rec(weight, weight, acc, out);
    return out;
}

std::vector<StrictPartition> enumerate_strict_up_to(int max_weight) {
    std::vector<StrictPartition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto level = enumerate_strict(w);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Root2Number hook_eval_delta1(const StrictPartition& lambda) {
    const auto& l = lambda.parts();
    Rational frac(1);
    for (int p : l) frac /= factorial(static_cast<unsigned>(p));
    for (size_t k = 0; k < l.size(); ++k)
        for (size_t m = k + 1; m < l.size(); ++m)
            frac *= Rational(l[k] - l[m]) / Rational(l[k] + l[m]);
    // 2^{|lambda| - len/2} = 2^{(2|lambda| - len)/2}
    Root2Number pw = Root2Number::pow2_half(2L * lambda.weight() - lambda.length());
    pw *= Root2Number(frac);
    return pw;
}

}  // namespace qtau
