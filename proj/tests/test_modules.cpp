#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gysin/algebra.hpp"
#include "gysin/builders.hpp"
#include "gysin/modules.hpp"
#include "gysin/oracle.hpp"

using namespace gysin;
using gf2::BitVec;
using gf2::Matrix;

namespace {

// Block-size multiset from ranks of powers of t: #blocks of size >= k is
// rank(t^(k-1)) - rank(t^k).
std::vector<std::size_t> parts_from_ranks(const TModule& m)
{
    const auto n = m.space.total_dim();
    const Matrix t = m.t.to_dense(m.space, m.space);
    std::vector<std::size_t> ranks{n};
    Matrix p = Matrix::identity(n);
    while (ranks.back() != 0) {
        p = t * p;
        ranks.push_back(gf2::rank(p));
    }
    std::vector<std::size_t> parts;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const std::size_t at_least_k = ranks[k - 1] - ranks[k];
        const std::size_t at_least_next = k < ranks.size() - 1 ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t i = 0; i < at_least_k - at_least_next; ++i)
            parts.push_back(k);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

// Span of w(x) over all words w in the operators of length <= dim.
gf2::Subspace word_span(const HWModule& m, const BitVec& x)
{
    std::vector<Matrix> ops;
    for (const auto& op : m.ops)
        ops.push_back(op.to_dense(m.space, m.space));
    gf2::Subspace span(m.space.total_dim());
    std::vector<BitVec> layer{x};
    for (std::size_t len = 0; len <= m.space.total_dim(); ++len) {
        std::vector<BitVec> next;
        for (const auto& v : layer) {
            span.insert(v);
            for (const auto& op : ops)
                next.push_back(op * v);
        }
        layer = std::move(next);
        if (layer.size() > 4096)
            break;
    }
    return span;
}

std::size_t total(const GradedSpace& e) { return e.total_dim(); }

}  // namespace

TEST(JordanType, BlocksRoundTrip)
{
    const auto m = module_from_blocks({5, 4, 1}, {0, 1, 3});
    const auto j = jordan_type(m);
    EXPECT_EQ(j.parts(), (std::vector<std::size_t>{5, 4, 1}));
    EXPECT_EQ(j.total(), 10u);
    EXPECT_EQ(j.to_string(), "{5@0, 4@1, 1@3}");
    const auto bal = check_bar_tau_balance(m);
    EXPECT_TRUE(bal.pass);
    EXPECT_EQ(bal.bar_dim, 3u);
    EXPECT_EQ(bal.tau_dim, 3u);
    EXPECT_EQ(total(bar(m).space), 3u);
    EXPECT_EQ(total(tau(m).space), 3u);
    EXPECT_EQ(tau(m).space.dim(4), 2u);  // tops of the 5- and 4-blocks
    EXPECT_EQ(tau(m).space.dim(3), 1u);
}

TEST(JordanType, MatchesRankSequenceOnRandomModules)
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto s = random_ses(seed, 12);
        const auto j = jordan_type(s.b);
        ASSERT_EQ(j.parts(), parts_from_ranks(s.b)) << "seed " << seed;
        const auto bal = check_bar_tau_balance(s.b);
        EXPECT_TRUE(bal.pass);
        EXPECT_EQ(bal.bar_dim, j.blocks.size());
        // Generators span a complement of tM.
        gf2::Subspace gens(s.b.space.total_dim());
        for (const auto& b : j.blocks)
            gens.insert(b.generator);
        EXPECT_EQ(gens.dim(), j.blocks.size());
    }
}

TEST(TModule, ValidateRejectsWrongShift)
{
    const auto e = GradedSpace::from_dims(std::vector<std::size_t>{1, 1});
    TModule m{e, GradedMap::identity(e)};
    EXPECT_THROW(m.validate(), std::invalid_argument);
    EXPECT_NO_THROW(TModule::zero_action(e).validate());
}

TEST(HWModule, SubmoduleGeneratedMatchesWordEnumeration)
{
    const auto f = build_product_spheres({1, 2});
    for (const auto& a : f.algebras) {
        const auto m = module_of(a);
        EXPECT_TRUE(m.commutation_failures().empty());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const BitVec x = BitVec::unit(a.dim(), i);
            const auto sub = submodule_generated(m, x);
            const gf2::Subspace expected = word_span(m, x);
            ASSERT_EQ(sub.space.total_dim(), expected.dim()) << a.subgroup.key() << " generator " << i;
            for (std::size_t b = 0; b < sub.space.total_dim(); ++b) {
                const auto col = sub.inclusion.to_dense(sub.space, m.space).column(b);
                EXPECT_TRUE(expected.contains(col));
            }
        }
    }
    const auto m = module_of(f.top());
    BitVec mixed(f.top().dim());
    mixed.set(0);
    mixed.set(f.top().dim() - 1);
    EXPECT_THROW(submodule_generated(m, mixed), std::invalid_argument);
}

TEST(HWModule, BarAllOfTopIsOneDimensionalForFreeActions)
{
    // K_V = F2[t1, t2] / (t1^3, t2^4) for the coordinate action on S^2 x S^3.
    const auto f = build_product_spheres({2, 3});
    EXPECT_EQ(f.top().dim(), 12u);
    const auto q = bar_all(module_of(f.top()));
    EXPECT_EQ(q.space.total_dim(), 1u);
}

TEST(TorLes, ExactWithAlternatingDimensions)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        for (auto shape : {SubShape::random, SubShape::zero, SubShape::everything}) {
            const auto s = random_ses(seed, 10, shape);
            ASSERT_TRUE(s.violations().empty());
            const auto les = tor_les(s);
            EXPECT_TRUE(les.exact()) << "seed " << seed;
            EXPECT_EQ(les.delta.shift(), 1);
            const long long alt = static_cast<long long>(total(les.tau_a.space)) -
                                  static_cast<long long>(total(les.tau_b.space)) +
                                  static_cast<long long>(total(les.tau_c.space)) -
                                  static_cast<long long>(total(les.bar_a.space)) +
                                  static_cast<long long>(total(les.bar_b.space)) -
                                  static_cast<long long>(total(les.bar_c.space));
            EXPECT_EQ(alt, 0) << "seed " << seed;
            if (shape == SubShape::zero) {
                EXPECT_EQ(total(les.tau_a.space), 0u);
                EXPECT_TRUE(les.delta.is_zero());
            }
            if (shape == SubShape::everything) {
                EXPECT_EQ(total(s.c.space), 0u);
            }
        }
    }
}

TEST(TorLes, RejectsNonExactInput)
{
    auto s = random_ses(3, 8, SubShape::everything);
    ASSERT_GT(s.a.space.total_dim(), 0u);
    s.inj = GradedMap(s.a.space, s.b.space, 0);  // no longer injective
    EXPECT_FALSE(s.violations().empty());
    EXPECT_THROW(tor_les(s), InvalidSequence);
}

TEST(TorLes, ConnectingMapOnSingleBlock)
{
    // 0 -> t.F2[t]/t^3 -> F2[t]/t^3 -> F2 -> 0: delta sends the generator of
    // tau(F2) to the class of t in bar(A).
    const auto b = module_from_blocks({3}, {0});
    const auto a_space = GradedSpace({{"t", 1}, {"t2", 2}});
    Matrix ta(2, 2);
    ta.set(1, 0);
    TModule a{a_space, GradedMap::from_dense(ta, a_space, a_space, 1)};
    const auto c_space = GradedSpace({{"1", 0}});
    TModule c = TModule::zero_action(c_space);
    Matrix inj(3, 2);
    inj.set(1, 0);
    inj.set(2, 1);
    Matrix surj(1, 3);
    surj.set(0, 0);
    ShortExactSeq s{a, b, c, GradedMap::from_dense(inj, a_space, b.space, 0),
                    GradedMap::from_dense(surj, b.space, c_space, 0)};
    const auto les = tor_les(s);
    EXPECT_TRUE(les.exact());
    EXPECT_EQ(les.delta.rank(), 1u);
    EXPECT_EQ(total(les.bar_b.space), 1u);
    EXPECT_EQ(total(les.tau_b.space), 1u);
}
