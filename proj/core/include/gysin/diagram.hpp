// The 3x3 diagram built from the unit submodule of K_W on a rank-two top
// subgroup W and a covering pair U < W:
//
//   Im(jbar)    -> M'    -> psi(M')
//      |            |          |
//   bar(K_W)    -> K_U   -> tau(K_W)
//      |            |          |
//   bar(C_W)    -> K_U/M' -> Q
//
// C_W = K_W / <unit>, jbar: bar(<unit>) -> bar(K_W), M' the submodule of K_U
// generated by its unit (plus a generator reaching the norm of K_U when the
// unit alone does not), Q = tau(K_W) / psi(M').

#ifndef GYSIN_DIAGRAM_HPP
#define GYSIN_DIAGRAM_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gysin/functor.hpp"
#include "gysin/modules.hpp"

namespace gysin {

struct DiagramCell {
    std::string name;
    GradedSpace space;
};

struct UnitDiagram {
    std::array<std::array<DiagramCell, 3>, 3> cells;  // [row][column], 0-based
    // Jordan types of C_W and <unit_W> under t, and of M' and K_U/M' under
    // the generator of H*U.
    std::vector<std::pair<std::string, JordanType>> jordan;
    std::vector<LesFinding> les_findings;
    VerificationReport report;

    bool passed() const { return report.passed(); }
};

// Cells in findings are named "D[r,c]" with 1-based row and column.
// Throws std::invalid_argument unless the edge's larger subgroup has rank 2.
UnitDiagram build_unit_diagram(const GysinFunctor& f, const GysinEdge& e);

}  // namespace gysin

#endif  // GYSIN_DIAGRAM_HPP
