// Brute-force oracles and seeded generators for property checks.

#ifndef GYSIN_ORACLE_HPP
#define GYSIN_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gysin/modules.hpp"

namespace gysin {

// All partitions of n (1 <= n <= 20), parts descending, partitions in reverse
// lexicographic order ({n} first). Throws std::out_of_range otherwise.
std::vector<std::vector<std::size_t>> enumerate_jordan_types(int n);

// Direct sum of blocks F2[t]/t^size with generators in the given degrees.
TModule module_from_blocks(const std::vector<std::size_t>& sizes, const std::vector<int>& base_degrees);

struct BalanceCase {
    std::string description;
    std::size_t bar_dim = 0;
    std::size_t tau_dim = 0;
    std::size_t blocks = 0;
    bool pass = false;
};

struct BalanceSweep {
    int max_dim = 0;
    std::uint64_t seed = 0;
    std::size_t partition_cases = 0;
    std::size_t random_cases = 0;
    std::vector<BalanceCase> failures;

    bool passed() const { return failures.empty(); }
};

// Every partition of every m <= max_dim with generators in degree 0, then
// random_per_dim random graded nilpotent modules per dimension (degrees 0..4).
// Each case checks dim bar = dim tau = number of Jordan blocks.
// Throws std::out_of_range unless 1 <= max_dim <= 12.
BalanceSweep exhaustive_bar_tau_check(int max_dim, std::uint64_t seed, std::size_t random_per_dim = 100);

enum class SubShape { random, zero, everything };

// Random module B (total dimension 1..max_dim), A the t-closure of random
// vectors (or 0, or B), C = B/A. Deterministic in the seed.
// Throws std::out_of_range unless 1 <= max_dim <= 16.
ShortExactSeq random_ses(std::uint64_t seed, int max_dim, SubShape shape = SubShape::random);

struct LesSweep {
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t exact = 0;
    std::vector<std::string> failures;  // "seed <s>: <spot> degree <k>: <message>"

    bool passed() const { return failures.empty() && exact == cases; }
};

// tor_les on `count` sequences random_ses(seed + i, max_dim).
LesSweep tor_les_sweep(std::uint64_t seed, std::size_t count, int max_dim);

struct SubgroupCounts {
    std::vector<std::size_t> per_rank;
    std::size_t total = 0;
    std::size_t covering_pairs = 0;
};

// Subspaces of F2^d found as subsets of F2^d closed under addition (d <= 4).
SubgroupCounts count_subgroups_oracle(int d);
// The same counts read off SubgroupLattice.
SubgroupCounts count_subgroups_lattice(int d);

}  // namespace gysin

#endif  // GYSIN_ORACLE_HPP
