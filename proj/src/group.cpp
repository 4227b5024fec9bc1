#include "hz/group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace hz {

namespace {
constexpr int kMaxDegree = 8;
constexpr int kMultTableMaxDegree = 6;  // 720^2 ints
}  // namespace

SymmetricGroup::SymmetricGroup(int d) : d_(d)
{
    if (d < 0 || d > kMaxDegree)
        throw resource_limit_error("symmetric group enumeration is capped at degree " +
                                   std::to_string(kMaxDegree));
    std::vector<int> img(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) img[static_cast<std::size_t>(i)] = i;
    do {
        elements_.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));

    classes_ = partitions_of(d);
    members_.resize(classes_.size());
    std::map<Partition, int> class_idx;
    for (std::size_t c = 0; c < classes_.size(); ++c) class_idx[classes_[c]] = static_cast<int>(c);

    inverse_.resize(elements_.size());
    class_of_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        inverse_[i] = index_of(elements_[i].inverse());
        int c = class_idx.at(elements_[i].cycle_type());
        class_of_[i] = c;
        members_[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
    }

    if (d <= kMultTableMaxDegree) {
        std::size_t n = elements_.size();
        mult_.resize(n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                mult_[p * n + q] = index_of(hz::compose(elements_[p], elements_[q]));
    }
}

const SymmetricGroup& SymmetricGroup::get(int d)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end())
        it = cache.emplace(d, std::unique_ptr<SymmetricGroup>(new SymmetricGroup(d))).first;
    return *it->second;
}

int SymmetricGroup::index_of(const Permutation& p) const
{
    // Lehmer code: rank in lexicographic order of image arrays.
    long long fact[kMaxDegree + 1];
    fact[0] = 1;
    for (int k = 1; k <= d_; ++k) fact[k] = fact[k - 1] * k;
    long long rank = 0;
    for (int i = 0; i < d_; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < d_; ++j)
            if (p(j) < p(i)) ++smaller;
        rank += smaller * fact[d_ - 1 - i];
    }
    return static_cast<int>(rank);
}

int SymmetricGroup::compose(int p, int q) const
{
    if (!mult_.empty())
        return mult_[static_cast<std::size_t>(p) * elements_.size() + static_cast<std::size_t>(q)];
    return index_of(hz::compose(elements_[static_cast<std::size_t>(p)],
                                elements_[static_cast<std::size_t>(q)]));
}

int SymmetricGroup::class_index(const Partition& type) const
{
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (classes_[c] == type) return static_cast<int>(c);
    throw argument_error("cycle type has wrong weight for this group");
}

}  // namespace hz
