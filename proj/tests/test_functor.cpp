#include <gtest/gtest.h>

#include "gysin/builders.hpp"
#include "gysin/functor.hpp"

using namespace gysin;
using gf2::BitVec;

namespace {

std::vector<Finding> with_check(const VerificationReport& r, const std::string& check)
{
    std::vector<Finding> out;
    for (const auto& f : r.findings)
        if (f.check == check)
            out.push_back(f);
    return out;
}

std::string first_message(const VerificationReport& r)
{
    return r.findings.empty() ? "" : r.findings.front().check + " " + r.findings.front().location + ": " +
                                         r.findings.front().message;
}

}  // namespace

TEST(ReferenceExample, VerifiesAndInvariants)
{
    const auto f = build_reference_example();
    const auto r = verify_functor(f);
    EXPECT_TRUE(r.passed()) << first_message(r);
    ASSERT_EQ(r.invariants.size(), 2u);
    EXPECT_EQ(r.invariants[0].total_dim, 8u);
    EXPECT_EQ(r.invariants[1].total_dim, 17u);
    for (const auto& row : r.invariants) {
        EXPECT_EQ(row.norm, 6);
        EXPECT_TRUE(row.connected);
        EXPECT_TRUE(row.biconnected);
    }
    const auto table = invariants_report(f);
    ASSERT_EQ(table.pairs.size(), 1u);
    // bar = <mu, z1, z2, z1z2>, tau = <t^4mu, t^3z1, t^3z2, t^3z1z2>
    EXPECT_EQ(table.pairs[0].bar_dims, (std::map<int, std::size_t>{{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    EXPECT_EQ(table.pairs[0].tau_dims, (std::map<int, std::size_t>{{4, 2}, {5, 1}, {6, 1}}));
    EXPECT_TRUE(table.alarms.empty());
}

TEST(ReferenceExample, BarSequenceIsExact)
{
    const auto f = build_reference_example();
    const auto s = derive_bar_sequence(f, f.edges[0]);
    EXPECT_TRUE(s.exact()) << first_message(s.report);
    EXPECT_EQ(s.bar.space.total_dim() + s.tau.space.total_dim(), f.bottom().dim());
}

TEST(ReferenceExample, TransferMutationLocated)
{
    auto f = build_reference_example();
    auto& psi = f.edges[0].psi;
    // x4 -> t^4 mu removed; x4 lives in degree 4, local index 0, t^4mu local index 0.
    psi.block(4).set(0, 0, false);
    const auto r = verify_functor(f);
    EXPECT_FALSE(r.passed());
    const auto found = with_check(r, "gysin.ker_psi");
    ASSERT_FALSE(found.empty());
    EXPECT_EQ(found.front().location, "[]<[1]");
    EXPECT_EQ(found.front().degree, 4);
}

TEST(ReferenceExample, RestrictionModuleOnlyRelaxation)
{
    auto f = build_reference_example();
    auto& k0 = f.algebras[0];
    k0.set_product(1, 2, BitVec(8));
    k0.set_product(2, 1, BitVec(8));
    const auto strict = verify_functor(f);
    EXPECT_FALSE(strict.passed());
    EXPECT_FALSE(with_check(strict, "edge.rho_multiplicative").empty());
    VerifyOptions relaxed;
    relaxed.rho_module_only = true;
    const auto r = verify_functor(f, relaxed);
    EXPECT_TRUE(r.passed()) << first_message(r);
}

TEST(ReferenceExample, NoObstructions)
{
    const auto f = build_reference_example();
    const auto a = augmentation_obstruction(f, f.lattice.top());
    EXPECT_TRUE(a.applicable);
    EXPECT_FALSE(a.triggered);
    EXPECT_EQ(a.value, 4);
    const auto u = unit_norm_obstruction(f, f.lattice.top());
    EXPECT_TRUE(u.applicable);
    EXPECT_FALSE(u.triggered);
    EXPECT_EQ(u.value, 4);
    EXPECT_EQ(u.bound, 6);
    EXPECT_THROW(augmentation_obstruction(f, f.lattice.zero()), std::invalid_argument);
}

TEST(ReferenceExample, ConjectureAndEvenDimension)
{
    const auto f = build_reference_example();
    const auto c = check_conjecture(f);
    EXPECT_TRUE(c.holds);
    EXPECT_TRUE(c.hypothesis);
    EXPECT_EQ(c.bound, 2u);
    EXPECT_EQ(c.total_dim, 8u);
    const auto e = check_even_dimension(f);
    EXPECT_TRUE(e.applicable);
    EXPECT_TRUE(e.even);
    EXPECT_EQ(e.dim, 8u);
}

TEST(SphereModel, VerifiesAndTriggersObstructions)
{
    for (int n : {1, 2, 3, 7}) {
        const auto f = build_sphere_model(n);
        const auto r = verify_functor(f);
        EXPECT_TRUE(r.passed()) << "n=" << n << " " << first_message(r);
        EXPECT_EQ(f.bottom().dim(), 2u);
        EXPECT_EQ(f.top().dim(), static_cast<std::size_t>(n + 1));
        EXPECT_TRUE(augmentation_obstruction(f, f.lattice.top()).triggered);
        const auto u = unit_norm_obstruction(f, f.lattice.top());
        EXPECT_TRUE(u.applicable);
        EXPECT_TRUE(u.triggered);
        EXPECT_EQ(u.value, n);
    }
    EXPECT_THROW(build_sphere_model(0), std::invalid_argument);
}

TEST(SphereModel, AgreesWithKoszulModel)
{
    for (int n : {1, 2, 5}) {
        const auto a = build_sphere_model(n);
        const auto b = build_product_spheres({n});
        ASSERT_EQ(a.algebras.size(), b.algebras.size());
        for (std::size_t i = 0; i < a.algebras.size(); ++i) {
            EXPECT_EQ(a.algebras[i].space.dims(), b.algebras[i].space.dims());
            EXPECT_EQ(a.algebras[i].h_images.size(), b.algebras[i].h_images.size());
        }
        EXPECT_EQ(a.edges[0].rho.rank(), b.edges[0].rho.rank());
        EXPECT_EQ(a.edges[0].psi.rank(), b.edges[0].psi.rank());
        EXPECT_TRUE(verify_functor(b).passed());
    }
}

TEST(ProductSpheres, HigherRankVerify)
{
    const auto f2 = build_product_spheres({1, 2});
    EXPECT_EQ(f2.bottom().dim(), 4u);
    auto r = verify_functor(f2);
    EXPECT_TRUE(r.passed()) << first_message(r);
    EXPECT_TRUE(verify_path_independence(f2).passed());
    const auto c2 = check_conjecture(f2);
    EXPECT_TRUE(c2.hypothesis);
    EXPECT_TRUE(c2.holds);
    EXPECT_EQ(c2.bound, 4u);

    const auto f3 = build_product_spheres({1, 1, 2});
    EXPECT_EQ(f3.bottom().dim(), 8u);
    VerifyOptions opts;
    opts.threads = 2;
    r = verify_functor(f3, opts);
    EXPECT_TRUE(r.passed()) << first_message(r);
    EXPECT_EQ(r.invariants.size(), 16u);
    const auto c3 = check_conjecture(f3);
    EXPECT_TRUE(c3.hypothesis);
    EXPECT_TRUE(c3.holds);
    EXPECT_EQ(c3.bound, 8u);
    EXPECT_FALSE(check_even_dimension(f3).applicable && !check_even_dimension(f3).even);
}

TEST(ProductSpheres, BarSequenceDimensionIdentity)
{
    const auto f = build_product_spheres({2, 3});
    for (const auto& e : f.edges) {
        const auto s = derive_bar_sequence(f, e);
        EXPECT_TRUE(s.exact()) << pair_label(e.pair);
        EXPECT_EQ(s.bar.space.total_dim() + s.tau.space.total_dim(), f.algebra(e.pair.sub).dim());
    }
}

TEST(ProductSpheres, DiagonalCharacterRankOne)
{
    // Z/2 flipping both factors of S^1 x S^2.
    const auto f = build_product_spheres({1, 2}, 1, {1, 1});
    const auto r = verify_functor(f);
    EXPECT_TRUE(r.passed()) << first_message(r);
    EXPECT_EQ(f.bottom().dim(), 4u);
    EXPECT_EQ(f.top().dim(), 4u);  // free action: total cohomology of the quotient
    EXPECT_THROW(build_product_spheres({1, 2}, 2, {1, 1}), std::invalid_argument);
}

TEST(ProductSpheres, PathIndependenceDetectsTamperedRestriction)
{
    auto f = build_product_spheres({1, 1});
    ASSERT_TRUE(verify_path_independence(f).passed());
    // Zero rho in degree 1 on one edge out of the top.
    for (auto& e : f.edges)
        if (e.pair.sup == f.lattice.top() && e.pair.sub.key() == "[1]") {
            e.rho = GradedMap(f.top().space, f.algebra(e.pair.sub).space, 0);
            break;
        }
    EXPECT_FALSE(verify_path_independence(f).passed());
}

TEST(GysinFunctor, CheckCompleteRejectsMissingEdge)
{
    auto f = build_reference_example();
    f.edges.clear();
    EXPECT_THROW(f.check_complete(), IncompleteLattice);
    EXPECT_THROW(verify_functor(f), IncompleteLattice);
}

TEST(Report, SortDedupesAndSeverity)
{
    VerificationReport r;
    r.fail("b", "[1]", 2, "m");
    r.fail("a", "[1]", 1, "m");
    r.fail("b", "[1]", 2, "m");
    r.add({"n", "[]", -1, "note", Severity::note});
    r.sort();
    ASSERT_EQ(r.findings.size(), 3u);
    EXPECT_EQ(r.findings[0].check, "a");
    EXPECT_EQ(r.findings[1].check, "b");
    EXPECT_EQ(r.findings[2].location, "[]");
    EXPECT_EQ(r.failure_count(), 2u);
    VerificationReport notes;
    notes.add({"n", "[]", -1, "note", Severity::note});
    EXPECT_TRUE(notes.passed());
}
