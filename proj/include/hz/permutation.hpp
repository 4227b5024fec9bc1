#pragma once

#include <vector>

#include "hz/partition.hpp"

namespace hz {

/// Permutation of {0, ..., m-1} stored as its image array.
/// Composition convention, fixed globally: (p*q)(x) = p(q(x)) -- the right
/// factor acts first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int m);
    static Permutation transposition(int m, int a, int b);
    // Cycles over 0-based points; points not mentioned are fixed.
    static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;

    // Cycles in order of smallest unvisited point; fixed points included.
    std::vector<std::vector<int>> cycles() const;
    Partition cycle_type() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }

private:
    std::vector<int> img_;
};

// (p*q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

// q p q^{-1}.
Permutation conjugate(const Permutation& p, const Permutation& q);

}  // namespace hz
