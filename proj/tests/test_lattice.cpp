#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "gysin/lattice.hpp"

using namespace gysin;

namespace {

// Gaussian binomial [d choose k] at q = 2.
std::size_t gaussian(int d, int k)
{
    std::size_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (std::size_t{1} << (d - i)) - 1;
        den *= (std::size_t{1} << (i + 1)) - 1;
    }
    return num / den;
}

// Subsets of F2^d closed under addition and containing 0, as sorted element sets.
std::set<std::set<Mask>> brute_subspaces(int d)
{
    std::set<std::set<Mask>> out;
    const Mask n = Mask{1} << d;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        if (!(bits & 1U))
            continue;
        bool closed = true;
        for (Mask a = 0; a < n && closed; ++a)
            for (Mask b = 0; b < n && closed; ++b)
                if (((bits >> a) & 1U) && ((bits >> b) & 1U) && !((bits >> (a ^ b)) & 1U))
                    closed = false;
        if (!closed)
            continue;
        std::set<Mask> s;
        for (Mask a = 0; a < n; ++a)
            if ((bits >> a) & 1U)
                s.insert(a);
        out.insert(s);
    }
    return out;
}

}  // namespace

TEST(Lattice, MatchesBruteForceSubspaces)
{
    for (int d = 0; d <= 3; ++d) {
        const auto expected = brute_subspaces(d);
        SubgroupLattice lat(d);
        std::set<std::set<Mask>> got;
        for (const auto& s : lat.subgroups()) {
            const auto el = s.elements();
            got.insert({el.begin(), el.end()});
        }
        EXPECT_EQ(got, expected) << "d=" << d;
    }
}

TEST(Lattice, CountsMatchGaussianBinomials)
{
    for (int d = 0; d <= 5; ++d) {
        SubgroupLattice lat(d);
        std::size_t total = 0, pairs = 0;
        for (int k = 0; k <= d; ++k) {
            total += gaussian(d, k);
            pairs += gaussian(d, k) * ((std::size_t{1} << k) - 1);
        }
        EXPECT_EQ(lat.subgroups().size(), total) << "d=" << d;
        EXPECT_EQ(lat.covering_pairs().size(), pairs) << "d=" << d;
    }
    EXPECT_EQ(SubgroupLattice(1).subgroups().size(), 2u);
    EXPECT_EQ(SubgroupLattice(2).subgroups().size(), 5u);
    EXPECT_EQ(SubgroupLattice(3).subgroups().size(), 16u);
    EXPECT_EQ(SubgroupLattice(3).covering_pairs().size(), 35u);
}

TEST(Lattice, CoveringPairsHaveQuotientFunctionalWithKernelSub)
{
    SubgroupLattice lat(3);
    for (const auto& p : lat.covering_pairs()) {
        EXPECT_EQ(p.sub.rank() + 1, p.sup.rank());
        EXPECT_TRUE(p.sup.contains(p.sub));
        EXPECT_EQ(p.quotient_functional.over, p.sup);
        for (Mask v : p.sup.elements())
            EXPECT_EQ(p.quotient_functional.evaluate(v), !p.sub.contains(v));
        EXPECT_TRUE(lat.pair_index(p.sub, p.sup).has_value());
    }
    EXPECT_EQ(lat.zero().rank(), 0);
    EXPECT_EQ(lat.top().rank(), 3);
    for (std::size_t i = 0; i < lat.subgroups().size(); ++i)
        EXPECT_EQ(lat.index_of(lat.subgroups()[i]), i);
}

TEST(Subgroup, CanonicalKeys)
{
    const Mask gens[] = {3, 1};
    const auto s = canonical_form(2, gens);
    EXPECT_EQ(s.key(), "[1,2]");
    const Mask diag[] = {3};
    EXPECT_EQ(canonical_form(2, diag).key(), "[3]");
    EXPECT_EQ(canonical_form(3, {}).key(), "[]");
    const Mask good[] = {1, 2};
    EXPECT_EQ(subgroup_from_key(2, good), s);
    const Mask bad[] = {3, 2};
    try {
        subgroup_from_key(2, bad);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("non-canonical subgroup key"), std::string::npos);
    }
    const Mask wide[] = {4};
    EXPECT_THROW(canonical_form(2, wide), std::invalid_argument);
}

TEST(Subgroup, RestrictH1AgreesWithEvaluation)
{
    SubgroupLattice lat(3);
    for (const auto& w : lat.subgroups()) {
        for (Mask c = 0; c < w.order(); ++c) {
            const H1Element x{w, c};
            for (const auto& u : lat.subgroups()) {
                if (!w.contains(u))
                    continue;
                const auto r = restrict_h1(x, u);
                for (Mask v : u.elements())
                    ASSERT_EQ(r.evaluate(v), x.evaluate(v));
            }
        }
    }
    const Mask l[] = {1};
    const Mask m[] = {2};
    EXPECT_THROW(restrict_h1(H1Element{canonical_form(2, l), 1}, canonical_form(2, m)), std::invalid_argument);
}
