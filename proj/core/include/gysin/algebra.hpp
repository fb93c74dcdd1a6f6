// Finite graded unital GF(2)-algebras carrying an H*W-structure, given by the
// images of the degree-one generators of H*W.

#ifndef GYSIN_ALGEBRA_HPP
#define GYSIN_ALGEBRA_HPP

#include <vector>

#include "gysin/graded.hpp"
#include "gysin/lattice.hpp"
#include "gysin/modules.hpp"
#include "gysin/report.hpp"

namespace gysin {

struct GradedAlgebra {
    Subgroup subgroup;
    GradedSpace space;
    std::size_t unit = 0;
    // Structure constants: mul[i * n + j] = e_i * e_j as a global vector.
    std::vector<gf2::BitVec> mul;
    // One global vector per canonical dual-basis form of `subgroup`.
    std::vector<gf2::BitVec> h_images;

    // Zero structure constants over `space`; fill with set_product.
    static GradedAlgebra with_space(Subgroup subgroup, GradedSpace space, std::size_t unit);

    std::size_t dim() const noexcept { return space.total_dim(); }
    const gf2::BitVec& product(std::size_t i, std::size_t j) const { return mul.at(i * dim() + j); }
    void set_product(std::size_t i, std::size_t j, gf2::BitVec v) { mul.at(i * dim() + j) = std::move(v); }
    gf2::BitVec multiply(const gf2::BitVec& x, const gf2::BitVec& y) const;
    gf2::BitVec unit_vector() const { return gf2::BitVec::unit(dim(), unit); }
    // Left multiplication by x as a graded map of the given degree shift.
    GradedMap left_multiplication(const gf2::BitVec& x, int shift) const;

    friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;
};

VerificationReport verify_algebra(const GradedAlgebra& a);

// ops[j] = left multiplication by h_images[j].
HWModule module_of(const GradedAlgebra& a);

}  // namespace gysin

#endif  // GYSIN_ALGEBRA_HPP
