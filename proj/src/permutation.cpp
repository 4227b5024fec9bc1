#include "hz/permutation.hpp"

#include <algorithm>

namespace hz {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images))
{
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            throw argument_error("image array is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int m)
{
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = i;
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::transposition(int m, int a, int b)
{
    Permutation p = identity(m);
    std::swap(p.img_[static_cast<std::size_t>(a)], p.img_[static_cast<std::size_t>(b)]);
    return p;
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles)
{
    Permutation p = identity(m);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= m) throw argument_error("cycle point out of range");
            p.img_[static_cast<std::size_t>(from)] = to;
        }
    }
    // re-validate: overlapping cycles would break bijectivity
    return Permutation(std::move(p.img_));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < size(); ++i)
        if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> cyc;
        int x = i;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            cyc.push_back(x);
            x = img_[static_cast<std::size_t>(x)];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Partition Permutation::cycle_type() const
{
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lens));
}

Permutation compose(const Permutation& p, const Permutation& q)
{
    if (p.size() != q.size()) throw argument_error("size mismatch in composition");
    std::vector<int> img(static_cast<std::size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) img[static_cast<std::size_t>(x)] = p(q(x));
    Permutation r;
    r = Permutation(std::move(img));
    return r;
}

Permutation conjugate(const Permutation& p, const Permutation& q)
{
    return compose(compose(q, p), q.inverse());
}

}  // namespace hz
