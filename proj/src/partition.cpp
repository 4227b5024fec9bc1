#include "hz/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace hz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p <= 0) throw argument_error("partition parts must be positive");
    }
    std::sort(parts_.rbegin(), parts_.rend());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw argument_error("bad partition syntax: '" + std::string(text) + "'");
        parts.push_back(value);
        pos = end + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const
{
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(cols));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const
{
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::string Partition::str() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

bool Partition::operator<(const Partition& o) const
{
    if (weight_ != o.weight_) return weight_ < o.weight_;
    return parts_ > o.parts_;  // larger leading parts come first
}

std::vector<Partition> partitions_of(int d)
{
    if (d < 0) throw argument_error("partitions_of requires d >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(d, d == 0 ? 1 : d);
    return out;
}

Integer z_of(const Partition& delta)
{
    Integer z = 1;
    for (auto [part, mult] : delta.multiplicities()) {
        z *= factorial(static_cast<unsigned>(mult));
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                      static_cast<unsigned long>(mult));
        z *= pw;
    }
    return z;
}

Integer class_size(const Partition& delta)
{
    Integer num = factorial(static_cast<unsigned>(delta.weight()));
    Integer z = z_of(delta);
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
    if (r != 0) throw internal_error("z_Delta does not divide d!");
    return q;
}

Rational content_pochhammer(const Rational& x, const Partition& lambda)
{
    Rational result = 1;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Rational base = x - Rational(static_cast<long>(i));
        for (int k = 0; k < parts[i]; ++k) result *= base + Rational(k);
    }
    return result;
}

}  // namespace hz
