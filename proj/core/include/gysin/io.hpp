// On-disk functor format (JSON):
//
//   {"rank": d,
//    "subgroups": [{"key": [rows], "basis": [{"name": .., "degree": ..}],
//                   "unit": i, "mul": [[i, j, [k, ...]], ...],
//                   "h_images": [[k, ...], ...]}],
//    "edges": [{"sub_key": [rows], "sup_key": [rows],
//               "rho": [[0/1, ...], ...], "psi": [[0/1, ...], ...]}]}
//
// mul lists the nonzero products only. h_images holds one list of global
// basis indices (all of degree one) per canonical dual-basis form. rho has
// rows = K_U basis and columns = K_W basis; psi the reverse.

#ifndef GYSIN_IO_HPP
#define GYSIN_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "gysin/functor.hpp"

namespace gysin {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural load: completeness, canonical keys, dimensions, gradedness of
// rho and psi. Throws ParseError.
GysinFunctor parse_functor(std::string_view text);
GysinFunctor parse_functor_file(const std::string& path);

std::string emit_functor(const GysinFunctor& f);
// Throws std::runtime_error when the file cannot be written.
void write_functor_file(const GysinFunctor& f, const std::string& path);

}  // namespace gysin

#endif  // GYSIN_IO_HPP
