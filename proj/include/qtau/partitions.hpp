#pragma once

#include "qtau/root2.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qtau {

// Partition with strictly decreasing positive parts; the index set of the
// Schur Q-functions.  Immutable value type.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    static StrictPartition empty() { return {}; }
    // Parses "4,2,1"; "-" (or "") is the empty partition.
    static StrictPartition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool is_empty() const { return parts_.empty(); }

    // (2*l1, ..., 2*l_len); strictness is preserved.
    StrictPartition doubled() const;

    // "4,2,1"; the empty partition prints as "-".
    std::string str() const;

    // Total order: by weight, then lexicographically descending parts.
    // Matches the deterministic enumeration order.
    friend bool operator<(const StrictPartition& x, const StrictPartition& y) {
        if (x.weight_ != y.weight_) return x.weight_ < y.weight_;
        return x.parts_ > y.parts_;  // lex-descending within a weight class
    }
    friend bool operator==(const StrictPartition& x, const StrictPartition& y) {
        return x.parts_ == y.parts_;
    }
    friend bool operator!=(const StrictPartition& x, const StrictPartition& y) {
        return !(x == y);
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All strict partitions of exactly the given weight, lexicographic-descending:
// 6 -> (6), (5,1), (4,2), (3,2,1).  Weight 0 yields just the empty partition.
std::vector<StrictPartition> enumerate_strict(int weight);

// All strict partitions with 0 <= weight <= max_weight, ordered by weight
// then lexicographic-descending.
std::vector<StrictPartition> enumerate_strict_up_to(int max_weight);

// Q_lambda(delta_{k,1}) in the paper normalization, via the hook-type
// closed form 2^{|l| - len/2} * prod 1/l_j! * prod_{k<m} (l_k-l_m)/(l_k+l_m).
// The half-integer 2-power lands in the sqrt2 part.
Root2Number hook_eval_delta1(const StrictPartition& lambda);

}  // namespace qtau
