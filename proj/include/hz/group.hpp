#pragma once

#include <vector>

#include "hz/permutation.hpp"

namespace hz {

/// Fully materialized S_d for exhaustive enumeration: elements in
/// lexicographic order of image arrays, per-element inverse and conjugacy
/// class, and (for d <= 6) a dense multiplication table.
///
/// Only what enumeration needs lives here; d is capped at 8.
class SymmetricGroup {
public:
    static const SymmetricGroup& get(int d);  // cached, immutable

    int degree() const { return d_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

    int index_of(const Permutation& p) const;  // Lehmer rank
    int identity_index() const { return 0; }
    int inverse(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
    int compose(int p, int q) const;  // element(p) * element(q)

    // Conjugacy classes indexed like partitions_of(d) (reverse-lex order).
    const std::vector<Partition>& classes() const { return classes_; }
    int class_of(int i) const { return class_of_[static_cast<std::size_t>(i)]; }
    int class_index(const Partition& type) const;
    const std::vector<int>& class_members(int c) const
    {
        return members_[static_cast<std::size_t>(c)];
    }
    int representative(int c) const { return members_[static_cast<std::size_t>(c)].front(); }

private:
    explicit SymmetricGroup(int d);

    int d_;
    std::vector<Permutation> elements_;
    std::vector<int> inverse_;
    std::vector<int> class_of_;
    std::vector<Partition> classes_;
    std::vector<std::vector<int>> members_;
    std::vector<int> mult_;  // dense table when small enough, else empty
};

}  // namespace hz
