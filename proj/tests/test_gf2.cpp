#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gysin/gf2.hpp"

using namespace gysin::gf2;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, rng() & 1U);
    return m;
}

BitVec from_mask(std::size_t n, std::uint64_t mask)
{
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, (mask >> i) & 1U);
    return v;
}

// Rank as log2 of the number of distinct images m*x over all x.
std::size_t brute_rank(const Matrix& m)
{
    std::set<std::vector<std::size_t>> seen;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.cols()); ++x)
        seen.insert((m * from_mask(m.cols(), x)).to_indices());
    std::size_t r = 0;
    while ((std::size_t{1} << r) < seen.size())
        ++r;
    return r;
}

std::size_t brute_kernel_size(const Matrix& m)
{
    std::size_t n = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.cols()); ++x)
        n += (m * from_mask(m.cols(), x)).is_zero();
    return n;
}

}  // namespace

TEST(BitVec, BasicOps)
{
    BitVec v(130);
    EXPECT_TRUE(v.is_zero());
    EXPECT_EQ(v.first_set(), 130u);
    v.set(3);
    v.set(129);
    EXPECT_EQ(v.popcount(), 2u);
    EXPECT_EQ(v.first_set(), 3u);
    EXPECT_EQ(v.to_indices(), (std::vector<std::size_t>{3, 129}));
    v.flip(3);
    EXPECT_FALSE(v.get(3));
    BitVec w = BitVec::unit(130, 129);
    EXPECT_TRUE(v.dot(w));
    EXPECT_TRUE((v ^ w).is_zero());
    EXPECT_EQ(BitVec({1, 0, 1}).to_indices(), (std::vector<std::size_t>{0, 2}));
}

TEST(Matrix, MultiplyAndTranspose)
{
    Matrix a{{1, 1, 0}, {0, 1, 1}};
    Matrix b{{1, 0}, {1, 1}, {0, 1}};
    Matrix ab = a * b;
    EXPECT_EQ(ab, (Matrix{{0, 1}, {1, 0}}));
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(a * BitVec({1, 1, 1}), BitVec({0, 0}));
    EXPECT_EQ(Matrix::identity(3) * b, b);
}

TEST(Matrix, RankMatchesImageCount)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 7;
        const std::size_t c = 1 + rng() % 8;
        const Matrix m = random_matrix(rng, r, c);
        ASSERT_EQ(rank(m), brute_rank(m)) << m.to_string();
        EXPECT_EQ(image_basis(m).size(), rank(m));
    }
}

TEST(Matrix, KernelBasisSpansExactKernel)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 8);
        const auto k = kernel_basis(m);
        for (const auto& v : k)
            EXPECT_TRUE((m * v).is_zero());
        EXPECT_EQ(Subspace(m.cols(), k).dim(), k.size());
        EXPECT_EQ(std::size_t{1} << k.size(), brute_kernel_size(m));
    }
}

TEST(Matrix, SolveFindsPreimagesExactlyInColumnSpace)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
        std::set<std::vector<std::size_t>> reachable;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.cols()); ++x)
            reachable.insert((m * from_mask(m.cols(), x)).to_indices());
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << m.rows()); ++b) {
            const BitVec bv = from_mask(m.rows(), b);
            const auto x = solve(m, bv);
            EXPECT_EQ(x.has_value(), reachable.count(bv.to_indices()) == 1);
            if (x) {
                EXPECT_EQ(m * *x, bv);
            }
        }
    }
    EXPECT_THROW(solve(Matrix(2, 2), BitVec(3)), std::invalid_argument);
}

TEST(Matrix, RrefIsDeterministicAndIdempotent)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = random_matrix(rng, 5, 7);
        const Matrix r = rref(m);
        EXPECT_EQ(rref(r), r);
        EXPECT_EQ(rank(r), rank(m));
    }
}

TEST(Subspace, InsertReduceCoords)
{
    Subspace s(4);
    EXPECT_TRUE(s.insert(BitVec({1, 1, 0, 0})));
    EXPECT_TRUE(s.insert(BitVec({0, 1, 1, 0})));
    EXPECT_FALSE(s.insert(BitVec({1, 0, 1, 0})));
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_TRUE(s.contains(BitVec({1, 0, 1, 0})));
    EXPECT_FALSE(s.contains(BitVec({0, 0, 0, 1})));
    EXPECT_FALSE(s.coords(BitVec({0, 0, 0, 1})).has_value());
    const auto c = s.coords(BitVec({1, 0, 1, 0}));
    ASSERT_TRUE(c.has_value());
    BitVec back(4);
    for (auto i : c->to_indices())
        back ^= s.basis()[i];
    EXPECT_EQ(back, BitVec({1, 0, 1, 0}));
    EXPECT_EQ(s.complement_columns().size(), 2u);
    EXPECT_EQ(s, Subspace(4, std::vector<BitVec>{BitVec({1, 0, 1, 0}), BitVec({0, 1, 1, 0})}));
}
