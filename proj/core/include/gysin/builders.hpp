// Builtin Gysin functors.

#ifndef GYSIN_BUILDERS_HPP
#define GYSIN_BUILDERS_HPP

#include <vector>

#include "gysin/functor.hpp"

namespace gysin {

// Rank-one functor with K_0 on {iota, x1, x2, x1x2, x4, y4, x5, x1x5}
// (x2*y4 = x1*x5) and K_{Z/2} = F2[t, z1, z2] / (z1^2, z2^2, t^5, t^4 z1, t^4 z2).
GysinFunctor build_reference_example();

// Rank-one model of the antipodal action on S^n: K_{Z/2} = F2[t]/t^(n+1),
// K_0 with classes in degrees 0 and n. Throws std::invalid_argument for n < 1.
GysinFunctor build_sphere_model(int n);

// Equivariant cohomology of (Z/2)^rank acting on S^{n_1} x ... x S^{n_k},
// where v acts antipodally on factor i iff characters[i](v) = 1. Computed from
// the Koszul complex F2[t_1..t_r] (x) Lambda(s_1..s_k), d(s_i) = chi_i^(n_i+1).
// Throws std::invalid_argument unless the action is free.
GysinFunctor build_product_spheres(const std::vector<int>& dims, int rank, const std::vector<Mask>& characters);
// Coordinate characters: rank = dims.size(), factor i flipped by coordinate i.
GysinFunctor build_product_spheres(const std::vector<int>& dims);

}  // namespace gysin

#endif  // GYSIN_BUILDERS_HPP
