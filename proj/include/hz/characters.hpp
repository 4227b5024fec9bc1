#pragma once

#include <string>
#include <vector>

#include "hz/partition.hpp"

namespace hz {

/// Complete integer character table of S_d: rows are irreducibles lambda,
/// columns are classes Delta, both in reverse-lexicographic order.
class CharacterTable {
public:
    // Low-level constructor from raw data (used by tests for negative
    // controls); build() and get() are the normal entry points.
    CharacterTable(int degree, std::vector<Partition> partitions,
                   std::vector<std::vector<long long>> chi);

    static CharacterTable build(int d);       // Murnaghan-Nakayama recursion
    static const CharacterTable& get(int d);  // cached; capped by config

    int degree() const { return d_; }
    int size() const { return static_cast<int>(partitions_.size()); }
    const std::vector<Partition>& partitions() const { return partitions_; }
    int index_of(const Partition& p) const;

    long long chi(int lambda, int delta) const
    {
        return chi_[static_cast<std::size_t>(lambda)][static_cast<std::size_t>(delta)];
    }
    long long chi(const Partition& lambda, const Partition& delta) const;

    // dim lambda = chi_lambda((1^d)).
    const Integer& dim(int lambda) const { return dims_[static_cast<std::size_t>(lambda)]; }

    // phi_lambda(Delta) = |C_Delta| chi_lambda(Delta) / dim lambda.
    Rational normalized(int lambda, int delta) const;
    Rational normalized(const Partition& lambda, const Partition& delta) const;

private:
    int d_;
    std::vector<Partition> partitions_;
    std::vector<std::vector<long long>> chi_;
    std::vector<Integer> dims_;
};

// chi_lambda(Delta) for a single pair, via the cached table.
long long character_value(const Partition& lambda, const Partition& delta);

// Number of standard Young tableaux of shape lambda (hook-length formula);
// exact at any weight, independent of the table cap.
Integer dimension(const Partition& lambda);

// phi_lambda(Delta); weights of lambda and Delta must agree.
Rational normalized_character(const Partition& lambda, const Partition& delta);

struct OrthReport {
    bool pass = true;
    std::string detail;  // first counterexample when !pass
};

// Checks both orthogonality relations exactly:
//   sum_lambda (dim/d!)^2 phi_lambda(mu) phi_lambda(Delta) = delta_{mu,Delta}/z_Delta
//   (dim lambda/d!)(dim mu/d!) sum_Delta z_Delta phi_lambda(Delta) phi_mu(Delta) = delta_{lambda,mu}
OrthReport verify_orthogonality(const CharacterTable& table);
OrthReport verify_orthogonality(int d);

}  // namespace hz
