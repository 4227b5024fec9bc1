#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hz/numbers.hpp"

namespace hz {

/// Integer partition in canonical form: weakly decreasing positive parts.
/// Encodes Young diagrams, cycle types and ramification profiles alike.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "3,1,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    Partition conjugate() const;

    // (part value, multiplicity) pairs, parts descending.
    std::vector<std::pair<int, int>> multiplicities() const;

    std::string str() const;

    // Ordering used for all deterministic output: weight ascending, then
    // reverse-lexicographic within a weight, so that (3) < (2,1) < (1,1,1).
    bool operator<(const Partition& o) const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of d in reverse-lexicographic order, (d) first, (1^d) last.
std::vector<Partition> partitions_of(int d);

// z_Delta = prod_i m_i! i^{m_i}, the order of the automorphism group of the
// Young diagram; equals d!/|C_Delta|.
Integer z_of(const Partition& delta);

// Number of permutations in S_d of cycle type Delta: d!/z_Delta.
Integer class_size(const Partition& delta);

// Pochhammer symbol (x)_lambda = (x)_{l1} (x-1)_{l2} ... (x-l+1)_{l_l} built
// from rising factorials (y)_k = y(y+1)...(y+k-1); empty partition gives 1.
Rational content_pochhammer(const Rational& x, const Partition& lambda);

}  // namespace hz
