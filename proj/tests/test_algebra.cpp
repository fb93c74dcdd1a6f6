#include <gtest/gtest.h>

#include <map>

#include "gysin/algebra.hpp"
#include "gysin/builders.hpp"

using namespace gysin;
using gf2::BitVec;

namespace {

bool has_check(const VerificationReport& r, const std::string& check)
{
    for (const auto& f : r.findings)
        if (f.check == check)
            return true;
    return false;
}

// Degree census of F2[t, z1, z2] / (z1^2, z2^2, t^5, t^4 z1, t^4 z2) with
// |t| = |z1| = 1, |z2| = 2, read off the monomial basis.
std::map<int, std::size_t> presentation_dims()
{
    std::map<int, std::size_t> dims;
    for (int b = 0; b <= 1; ++b)
        for (int c = 0; c <= 1; ++c)
            for (int a = 0; a < 8; ++a) {
                if (a >= 5 || (a >= 4 && (b || c)))
                    continue;
                ++dims[a + b + 2 * c];
            }
    return dims;
}

}  // namespace

TEST(ReferenceExample, AlgebrasVerify)
{
    const auto f = build_reference_example();
    for (const auto& a : f.algebras) {
        const auto r = verify_algebra(a);
        EXPECT_TRUE(r.passed()) << a.subgroup.key() << ": " << (r.findings.empty() ? "" : r.findings[0].message);
    }
}

TEST(ReferenceExample, TopMatchesPresentation)
{
    const auto f = build_reference_example();
    const auto dims = presentation_dims();
    std::size_t n = 0;
    for (auto [d, k] : dims)
        n += k;
    EXPECT_EQ(n, 17u);
    EXPECT_EQ(f.top().space.dims(), dims);
    EXPECT_EQ(f.top().dim(), 17u);
    EXPECT_EQ(f.bottom().dim(), 8u);
    EXPECT_EQ(norm(f.top().space), 6u);
    EXPECT_EQ(norm(f.bottom().space), 6u);
    // t^4 * mu is the last nonzero power of t.
    const auto& kw = f.top();
    BitVec t = kw.h_images[0];
    BitVec p = kw.unit_vector();
    int k = 0;
    while (!p.is_zero()) {
        p = kw.multiply(t, p);
        ++k;
    }
    EXPECT_EQ(k, 5);
}

TEST(ReferenceExample, ProductRelationInBottom)
{
    const auto f = build_reference_example();
    const auto& k0 = f.bottom();
    // x2 * y4 = x1 * x5
    EXPECT_EQ(k0.product(2, 5), k0.product(1, 6));
    EXPECT_EQ(k0.product(2, 5), BitVec::unit(8, 7));
    EXPECT_TRUE(k0.product(4, 4).is_zero());
}

TEST(VerifyAlgebra, DetectsUnitViolation)
{
    auto a = build_reference_example().bottom();
    a.set_product(0, 1, BitVec(8));
    const auto r = verify_algebra(a);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(has_check(r, "algebra.unit"));
    EXPECT_EQ(r.findings.front().location, "[]");
}

TEST(VerifyAlgebra, DetectsDegreeAndAssociativity)
{
    auto a = build_reference_example().top();
    // t * t = t^3 breaks degree; (t * t) * t != t * (t * t) fails too.
    a.set_product(1, 1, BitVec::unit(17, 3));
    const auto r = verify_algebra(a);
    EXPECT_TRUE(has_check(r, "algebra.degree"));
}

TEST(VerifyAlgebra, DetectsAssociativityFailure)
{
    auto a = build_reference_example().top();
    // z1 * z2 = 0 one way round only: (z1 * z2) * t vs z1 * (z2 * t).
    a.set_product(5, 9, BitVec(17));
    const auto r = verify_algebra(a);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(has_check(r, "algebra.assoc") || has_check(r, "algebra.central"));
}

TEST(VerifyAlgebra, HImageChecks)
{
    auto a = build_reference_example().top();
    a.h_images[0] = BitVec::unit(17, 9);  // z2 has degree 2
    EXPECT_TRUE(has_check(verify_algebra(a), "algebra.h_image"));
    a.h_images.clear();
    EXPECT_TRUE(has_check(verify_algebra(a), "algebra.h_image"));
}

TEST(GradedAlgebra, LeftMultiplication)
{
    const auto f = build_reference_example();
    const auto& kw = f.top();
    const auto t = kw.left_multiplication(kw.h_images[0], 1);
    EXPECT_EQ(t.shift(), 1);
    EXPECT_EQ(t.rank(), 13u);  // 17 minus the four tops t^4mu, t^3z1, t^3z2, t^3z1z2
    EXPECT_THROW(kw.left_multiplication(kw.h_images[0], 2), GradingError);
    const auto m = module_of(kw);
    ASSERT_EQ(m.ops.size(), 1u);
    EXPECT_EQ(m.ops[0], t);
}
