#include "gysin/oracle.hpp"

#include <random>
#include <stdexcept>

#include "gysin/lattice.hpp"

namespace gysin {

namespace {

void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::string describe(const std::vector<std::size_t>& sizes, const std::vector<int>& degrees)
{
    std::string s = "{";
    for (std::size_t i = 0; i < sizes.size(); ++i)
        s += (i ? ", " : "") + std::to_string(sizes[i]) + "@" + std::to_string(degrees[i]);
    return s + "}";
}

BalanceCase run_case(const TModule& m, std::string description, std::size_t expected_blocks)
{
    BalanceCase c;
    c.description = std::move(description);
    const auto balance = check_bar_tau_balance(m);
    c.bar_dim = balance.bar_dim;
    c.tau_dim = balance.tau_dim;
    c.blocks = jordan_type(m).blocks.size();
    c.pass = balance.pass && c.bar_dim == c.blocks && (expected_blocks == 0 || c.blocks == expected_blocks);
    return c;
}

// Random graded module: total dimension m, degrees uniform in 0..max_degree,
// t a uniformly random shift-one map.
TModule random_module(std::mt19937_64& rng, std::size_t m, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::map<int, std::size_t> dims;
    for (std::size_t i = 0; i < m; ++i)
        ++dims[deg(rng)];
    const GradedSpace space = GradedSpace::from_dims(dims, "b");
    GradedMap t(space, space, 1);
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k + 1 < space.degree_bound(); ++k)
        for (std::size_t r = 0; r < space.dim(k + 1); ++r)
            for (std::size_t c = 0; c < space.dim(k); ++c)
                if (coin(rng))
                    t.block(k).set(r, c);
    return {space, t};
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_jordan_types(int n)
{
    if (n < 1 || n > 20)
        throw std::out_of_range("partition size must be in 1..20, got " + std::to_string(n));
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    partitions(static_cast<std::size_t>(n), static_cast<std::size_t>(n), cur, out);
    return out;
}

TModule module_from_blocks(const std::vector<std::size_t>& sizes, const std::vector<int>& base_degrees)
{
    if (sizes.size() != base_degrees.size())
        throw std::invalid_argument("one base degree per block is required");
    std::vector<BasisElement> basis;
    std::vector<std::pair<std::size_t, std::size_t>> steps;  // global index -> t-image index
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t a = 0; a < sizes[b]; ++a) {
            if (a + 1 < sizes[b])
                steps.emplace_back(basis.size(), basis.size() + 1);
            basis.push_back({"t^" + std::to_string(a) + "g" + std::to_string(b), base_degrees[b] + static_cast<int>(a)});
        }
    const GradedSpace space(std::move(basis));
    gf2::Matrix dense(space.total_dim(), space.total_dim());
    for (auto [from, to] : steps)
        dense.set(to, from);
    return {space, GradedMap::from_dense(dense, space, space, 1)};
}

BalanceSweep exhaustive_bar_tau_check(int max_dim, std::uint64_t seed, std::size_t random_per_dim)
{
    if (max_dim < 1 || max_dim > 12)
        throw std::out_of_range("max_dim must be in 1..12, got " + std::to_string(max_dim));
    BalanceSweep s;
    s.max_dim = max_dim;
    s.seed = seed;
    for (int m = 1; m <= max_dim; ++m)
        for (const auto& p : enumerate_jordan_types(m)) {
            const std::vector<int> degrees(p.size(), 0);
            auto c = run_case(module_from_blocks(p, degrees), describe(p, degrees), p.size());
            ++s.partition_cases;
            if (!c.pass)
                s.failures.push_back(std::move(c));
        }
    std::mt19937_64 rng(seed);
    for (int m = 1; m <= max_dim; ++m)
        for (std::size_t i = 0; i < random_per_dim; ++i) {
            const auto mod = random_module(rng, static_cast<std::size_t>(m), 4);
            auto c = run_case(mod, "random dim " + std::to_string(m) + " #" + std::to_string(i) + " seed " +
                                       std::to_string(seed),
                              0);
            ++s.random_cases;
            if (!c.pass)
                s.failures.push_back(std::move(c));
        }
    return s;
}

ShortExactSeq random_ses(std::uint64_t seed, int max_dim, SubShape shape)
{
    if (max_dim < 1 || max_dim > 16)
        throw std::out_of_range("max_dim must be in 1..16, got " + std::to_string(max_dim));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, max_dim);
    const TModule b = random_module(rng, static_cast<std::size_t>(size(rng)), 5);

    GradedSubspace seed_space(b.space);
    if (shape == SubShape::everything) {
        for (int k = 0; k < b.space.degree_bound(); ++k)
            for (std::size_t j = 0; j < b.space.dim(k); ++j)
                seed_space.insert(k, gf2::BitVec::unit(b.space.dim(k), j));
    } else if (shape == SubShape::random) {
        std::uniform_int_distribution<int> count(0, 3);
        std::uniform_int_distribution<int> degree(0, b.space.degree_bound() - 1);
        std::bernoulli_distribution coin(0.5);
        for (int g = count(rng); g > 0; --g) {
            const int k = degree(rng);
            gf2::BitVec v(b.space.dim(k));
            for (std::size_t j = 0; j < v.size(); ++j)
                v.set(j, coin(rng));
            seed_space.insert(k, v);
        }
    }
    const GradedSubspace sub = closure(b, seed_space);
    const SubObject a = make_sub(b.space, sub);
    const QuotientObject c = make_quotient(b.space, sub);
    return {TModule{a.space, *restrict_map(b.t, a, a)}, b, TModule{c.space, *induced_map(b.t, c, c)}, a.inclusion,
            c.projection};
}

LesSweep tor_les_sweep(std::uint64_t seed, std::size_t count, int max_dim)
{
    LesSweep s;
    s.seed = seed;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t case_seed = seed + i;
        ++s.cases;
        try {
            const TorLes les = tor_les(random_ses(case_seed, max_dim));
            if (les.exact())
                ++s.exact;
            for (const auto& f : les.findings)
                s.failures.push_back("seed " + std::to_string(case_seed) + ": " + f.spot + " degree " +
                                     std::to_string(f.degree) + ": " + f.message);
        } catch (const InvalidSequence& e) {
            s.failures.push_back("seed " + std::to_string(case_seed) + ": " + e.what());
        }
    }
    return s;
}

SubgroupCounts count_subgroups_oracle(int d)
{
    if (d < 0 || d > 4)
        throw std::out_of_range("brute-force subgroup count needs 0 <= d <= 4, got " + std::to_string(d));
    const unsigned n = 1U << d;
    // Subsets of the nonzero vectors; the subgroup is that subset plus 0.
    std::vector<std::uint32_t> groups;
    for (std::uint32_t s = 0; s < (1U << (n - 1)); ++s) {
        const std::uint32_t members = (s << 1) | 1U;  // bit v set iff vector v is in the subset
        bool closed = true;
        for (unsigned x = 0; x < n && closed; ++x)
            for (unsigned y = 0; y < n && closed; ++y)
                if (((members >> x) & 1U) && ((members >> y) & 1U) && !((members >> (x ^ y)) & 1U))
                    closed = false;
        if (closed)
            groups.push_back(members);
    }
    SubgroupCounts out;
    out.per_rank.assign(static_cast<std::size_t>(d) + 1, 0);
    for (auto g : groups) {
        const int r = __builtin_ctz(static_cast<unsigned>(__builtin_popcount(g)));
        ++out.per_rank[static_cast<std::size_t>(r)];
    }
    out.total = groups.size();
    for (auto u : groups)
        for (auto w : groups)
            if ((u & w) == u && __builtin_popcount(w) == 2 * __builtin_popcount(u))
                ++out.covering_pairs;
    return out;
}

SubgroupCounts count_subgroups_lattice(int d)
{
    const SubgroupLattice lattice(d);
    SubgroupCounts out;
    out.per_rank.assign(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& s : lattice.subgroups())
        ++out.per_rank[static_cast<std::size_t>(s.rank())];
    out.total = lattice.subgroups().size();
    out.covering_pairs = lattice.covering_pairs().size();
    return out;
}

}  // namespace gysin
