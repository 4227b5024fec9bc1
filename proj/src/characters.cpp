#include "hz/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "hz/config.hpp"

namespace hz {

namespace {

// One Murnaghan-Nakayama evaluation: strip parts of delta off the shape in
// order, summing signs over border-strip removals.  Shapes are handled
// through their beta-sets {lambda_j + (L-1-j)}: removing a border strip of
// length r is beta -> beta - r when the target value is free.
class MnEvaluator {
public:
    explicit MnEvaluator(const std::vector<int>& delta) : delta_(delta) {}

    long long eval(const std::vector<int>& shape, std::size_t pos)
    {
        if (pos == delta_.size()) return 1;  // shape is empty here by weight count
        auto key = std::make_pair(shape, pos);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        int r = delta_[pos];
        std::vector<int> beta(shape.size());
        int len = static_cast<int>(shape.size());
        for (int j = 0; j < len; ++j)
            beta[static_cast<std::size_t>(j)] = shape[static_cast<std::size_t>(j)] + (len - 1 - j);

        long long total = 0;
        for (int j = 0; j < len; ++j) {
            int b = beta[static_cast<std::size_t>(j)];
            int target = b - r;
            if (target < 0) continue;
            bool occupied = false;
            int between = 0;
            for (int k = 0; k < len; ++k) {
                int v = beta[static_cast<std::size_t>(k)];
                if (v == target) occupied = true;
                if (v > target && v < b) ++between;
            }
            if (occupied) continue;
            std::vector<int> nb = beta;
            nb[static_cast<std::size_t>(j)] = target;
            std::sort(nb.rbegin(), nb.rend());
            std::vector<int> nshape;
            for (int k = 0; k < len; ++k) {
                int part = nb[static_cast<std::size_t>(k)] - (len - 1 - k);
                if (part > 0) nshape.push_back(part);
            }
            long long sub = eval(nshape, pos + 1);
            total += (between % 2 == 0) ? sub : -sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    const std::vector<int>& delta_;
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo_;
};

}  // namespace

CharacterTable::CharacterTable(int degree, std::vector<Partition> partitions,
                               std::vector<std::vector<long long>> chi)
    : d_(degree), partitions_(std::move(partitions)), chi_(std::move(chi))
{
    int idx_trivial_class = size() - 1;  // (1^d) is last in reverse-lex order
    for (int l = 0; l < size(); ++l) dims_.push_back(Integer(chi_[static_cast<std::size_t>(l)][static_cast<std::size_t>(idx_trivial_class)]));
}

CharacterTable CharacterTable::build(int d)
{
    auto parts = partitions_of(d);
    std::vector<std::vector<long long>> chi(parts.size(), std::vector<long long>(parts.size()));
    for (std::size_t c = 0; c < parts.size(); ++c) {
        MnEvaluator mn(parts[c].parts());
        for (std::size_t l = 0; l < parts.size(); ++l)
            chi[l][c] = mn.eval(parts[l].parts(), 0);
    }
    CharacterTable table(d, std::move(parts), std::move(chi));
    // Cross-check the recursion against the hook-length formula.
    for (int l = 0; l < table.size(); ++l)
        if (table.dim(l) != dimension(table.partitions()[static_cast<std::size_t>(l)]))
            throw internal_error("character table dimension mismatch at degree " +
                                 std::to_string(d));
    return table;
}

const CharacterTable& CharacterTable::get(int d)
{
    if (d < 0) throw argument_error("negative degree");
    if (d > config::character_table_cap())
        throw resource_limit_error("character table degree " + std::to_string(d) +
                                   " exceeds cap " + std::to_string(config::character_table_cap()));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end())
        it = cache.emplace(d, std::make_unique<CharacterTable>(build(d))).first;
    return *it->second;
}

int CharacterTable::index_of(const Partition& p) const
{
    for (int i = 0; i < size(); ++i)
        if (partitions_[static_cast<std::size_t>(i)] == p) return i;
    throw argument_error("partition " + p.str() + " has wrong weight for this table");
}

long long CharacterTable::chi(const Partition& lambda, const Partition& delta) const
{
    return chi(index_of(lambda), index_of(delta));
}

Rational CharacterTable::normalized(int lambda, int delta) const
{
    Rational phi(class_size(partitions_[static_cast<std::size_t>(delta)]) * chi(lambda, delta),
                 dim(lambda));
    phi.canonicalize();
    return phi;
}

Rational CharacterTable::normalized(const Partition& lambda, const Partition& delta) const
{
    return normalized(index_of(lambda), index_of(delta));
}

long long character_value(const Partition& lambda, const Partition& delta)
{
    if (lambda.weight() != delta.weight())
        throw argument_error("character arguments must have equal weight");
    return CharacterTable::get(lambda.weight()).chi(lambda, delta);
}

Integer dimension(const Partition& lambda)
{
    if (lambda.empty()) return 1;
    Partition conj = lambda.conjugate();
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            hooks *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
    Integer num = factorial(static_cast<unsigned>(lambda.weight()));
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
    if (r != 0) throw internal_error("hook product does not divide d!");
    return q;
}

Rational normalized_character(const Partition& lambda, const Partition& delta)
{
    if (lambda.weight() != delta.weight())
        throw argument_error("normalized character requires |lambda| = |Delta|");
    return CharacterTable::get(lambda.weight()).normalized(lambda, delta);
}

OrthReport verify_orthogonality(const CharacterTable& table)
{
    const int n = table.size();
    const auto& parts = table.partitions();
    const Integer dfact = factorial(static_cast<unsigned>(table.degree()));

    std::vector<Rational> dim_over_dfact;
    std::vector<Integer> z;
    for (int i = 0; i < n; ++i) {
        dim_over_dfact.push_back(rational_of(table.dim(i), dfact));
        z.push_back(z_of(parts[static_cast<std::size_t>(i)]));
    }

    // First relation: class-wise.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Rational sum = 0;
            for (int l = 0; l < n; ++l)
                sum += dim_over_dfact[static_cast<std::size_t>(l)] *
                       dim_over_dfact[static_cast<std::size_t>(l)] * table.normalized(l, a) *
                       table.normalized(l, b);
            Rational expect = a == b ? rational_of(1, z[static_cast<std::size_t>(a)]) : Rational(0);
            if (sum != expect) {
                return {false, "first orthogonality fails at mu=" + parts[static_cast<std::size_t>(a)].str() +
                                   " Delta=" + parts[static_cast<std::size_t>(b)].str() + ": got " +
                                   to_string(sum) + ", expected " + to_string(expect)};
            }
        }
    }

    // Second relation: representation-wise.
    for (int l = 0; l < n; ++l) {
        for (int m = 0; m < n; ++m) {
            Rational sum = 0;
            for (int c = 0; c < n; ++c)
                sum += Rational(z[static_cast<std::size_t>(c)]) * table.normalized(l, c) *
                       table.normalized(m, c);
            sum *= dim_over_dfact[static_cast<std::size_t>(l)] *
                   dim_over_dfact[static_cast<std::size_t>(m)];
            Rational expect = l == m ? 1 : 0;
            if (sum != expect) {
                return {false, "second orthogonality fails at lambda=" +
                                   parts[static_cast<std::size_t>(l)].str() + " mu=" +
                                   parts[static_cast<std::size_t>(m)].str() + ": got " +
                                   to_string(sum) + ", expected " + to_string(expect)};
            }
        }
    }
    return {};
}

OrthReport verify_orthogonality(int d) { return verify_orthogonality(CharacterTable::get(d)); }

}  // namespace hz
