#include <gtest/gtest.h>

#include <map>

#include "gysin/builders.hpp"

using namespace gysin;

namespace {

using Poly = std::map<int, std::size_t>;

Poly times(const Poly& a, const Poly& b)
{
    Poly out;
    for (auto [da, ka] : a)
        for (auto [db, kb] : b)
            out[da + db] += ka * kb;
    return out;
}

// 1 + x + ... + x^n: cohomology of RP^n, the orbit space of one antipodal factor.
Poly truncated(int n)
{
    Poly p;
    for (int i = 0; i <= n; ++i)
        p[i] = 1;
    return p;
}

// 1 + x^n: cohomology of a sphere left fixed.
Poly sphere(int n) { return {{0, 1}, {n, 1}}; }

}  // namespace

TEST(KoszulModel, CoordinateSubgroupsMatchOrbitSpaces)
{
    const std::vector<int> dims{1, 2, 3};
    const auto f = build_product_spheres(dims);
    ASSERT_EQ(f.rank(), 3);
    for (const auto& w : f.lattice.subgroups()) {
        // Only subgroups spanned by coordinate vectors have a product orbit space.
        bool coordinate = true;
        for (Mask r : w.rows())
            coordinate = coordinate && (r & (r - 1)) == 0;
        if (!coordinate)
            continue;
        Poly expected{{0, 1}};
        for (int i = 0; i < 3; ++i)
            expected = times(expected, w.contains(Mask{1} << i) ? truncated(dims[i]) : sphere(dims[i]));
        EXPECT_EQ(f.algebra(w).space.dims(), expected) << w.key();
    }
}

TEST(KoszulModel, EveryTermSatisfiesPoincareDuality)
{
    // Each term is the mod-2 cohomology of a closed 5-manifold S^2 x S^3 / W.
    const auto f = build_product_spheres({2, 3});
    const int top = 5;  // dimension of S^2 x S^3
    for (const auto& a : f.algebras) {
        const auto d = a.space.dims();
        EXPECT_TRUE(is_biconnected(a.space)) << a.subgroup.key();
        EXPECT_EQ(static_cast<int>(norm(a.space)), top) << a.subgroup.key();
        for (auto [deg, k] : d)
            EXPECT_EQ(a.space.dim(top - deg), k) << a.subgroup.key() << " degree " << deg;
    }
}

TEST(KoszulModel, RejectsNonFreeAction)
{
    // Rank 2 on a single sphere: the kernel of the character fixes every point.
    EXPECT_THROW(build_product_spheres({2}, 2, {1}), std::invalid_argument);
    EXPECT_THROW(build_product_spheres({0}), std::invalid_argument);
}

TEST(KoszulModel, BasisNamesAndUnit)
{
    const auto f = build_product_spheres({1, 2});
    for (const auto& a : f.algebras) {
        EXPECT_EQ(a.space.element(a.unit).degree, 0);
        EXPECT_EQ(a.h_images.size(), static_cast<std::size_t>(a.subgroup.rank()));
    }
    EXPECT_EQ(f.bottom().space.dims(), (Poly{{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
}
