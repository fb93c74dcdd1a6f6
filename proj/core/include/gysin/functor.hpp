// Gysin functors: one algebra per subgroup, restriction and transfer maps on
// every covering pair, and the checks and derived invariants built on them.

#ifndef GYSIN_FUNCTOR_HPP
#define GYSIN_FUNCTOR_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gysin/algebra.hpp"
#include "gysin/lattice.hpp"
#include "gysin/report.hpp"
#include "gysin/subquotient.hpp"

namespace gysin {

struct GysinEdge {
    CoveringPair pair;
    GradedMap rho;  // K_W -> K_U
    GradedMap psi;  // K_U -> K_W

    friend bool operator==(const GysinEdge& a, const GysinEdge& b)
    {
        return a.pair.sub == b.pair.sub && a.pair.sup == b.pair.sup && a.rho == b.rho && a.psi == b.psi;
    }
};

struct IncompleteLattice : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GysinFunctor {
    explicit GysinFunctor(int rank = 0) : lattice(rank) {}

    SubgroupLattice lattice;
    std::vector<GradedAlgebra> algebras;  // indexed like lattice.subgroups()
    std::vector<GysinEdge> edges;         // indexed like lattice.covering_pairs()

    int rank() const noexcept { return lattice.rank(); }
    const GradedAlgebra& algebra(const Subgroup& w) const;
    const GradedAlgebra& bottom() const { return algebra(lattice.zero()); }
    const GradedAlgebra& top() const { return algebra(lattice.top()); }
    const GysinEdge& edge(const Subgroup& sub, const Subgroup& sup) const;

    // Throws IncompleteLattice unless every subgroup and covering pair is
    // present, in lattice order, with maps of matching shape.
    void check_complete() const;

    friend bool operator==(const GysinFunctor& a, const GysinFunctor& b)
    {
        return a.rank() == b.rank() && a.algebras == b.algebras && a.edges == b.edges;
    }
};

// "[U]<[W]"
std::string pair_label(const CoveringPair& p);

struct VerifyOptions {
    // Require only H*W-linearity of rho, not multiplicativity.
    bool rho_module_only = false;
    unsigned threads = 1;
    // Stop scheduling further checks after the first failing one.
    bool fail_fast = false;
};

VerificationReport verify_edge_exactness(const GysinFunctor& f, const GysinEdge& e, const VerifyOptions& opts = {});

// Multiplication by the quotient functional of the pair, acting on K_W.
TModule gysin_t(const GysinFunctor& f, const GysinEdge& e);

// 0 -> bar(K_W) -> K_U -> tau(K_W) -> 0 induced by rho and psi.
struct BarSequence {
    QuotientObject bar;
    SubObject tau;
    GradedMap rho_bar;  // bar -> K_U
    GradedMap psi_hat;  // K_U -> tau
    VerificationReport report;

    bool exact() const { return report.passed(); }
};

BarSequence derive_bar_sequence(const GysinFunctor& f, const GysinEdge& e);

// Composites of rho along every maximal chain between U and W agree.
VerificationReport verify_path_independence(const GysinFunctor& f);

VerificationReport verify_functor(const GysinFunctor& f, const VerifyOptions& opts = {});

SubgroupInvariants subgroup_invariants(const GradedAlgebra& a);

struct PairDims {
    std::string sub, sup;
    std::map<int, std::size_t> bar_dims, tau_dims;
};

struct InvariantsTable {
    std::vector<SubgroupInvariants> rows;
    std::vector<PairDims> pairs;
    // A bi-connected K_0 forces every K_W bi-connected of the same norm.
    std::vector<Finding> alarms;
};

InvariantsTable invariants_report(const GysinFunctor& f);

struct EvenDimensionVerdict {
    bool applicable = false;
    std::size_t dim = 0;
    bool even = true;
    std::string label;  // set on failure
};

EvenDimensionVerdict check_even_dimension(const GysinFunctor& f);

struct ObstructionVerdict {
    bool applicable = false;
    bool triggered = false;
    long long value = 0;  // quantity compared against `bound`
    long long bound = 0;
    std::string detail;
};

// Triggered when K_w modulo the whole augmentation ideal is one-dimensional.
// `w` must be the top subgroup.
ObstructionVerdict augmentation_obstruction(const GysinFunctor& f, const Subgroup& w);
// Triggered when the submodule generated by the unit reaches the norm of K_w.
// Applicable only when K_0 is bi-connected.
ObstructionVerdict unit_norm_obstruction(const GysinFunctor& f, const Subgroup& w);

struct ConjectureVerdict {
    std::size_t total_dim = 0;
    std::size_t bound = 0;
    bool holds = true;
    bool hypothesis = false;  // connectivity hypothesis for ranks 1..3
    std::string label;        // set on violation
};

ConjectureVerdict check_conjecture(const GysinFunctor& f);

}  // namespace gysin

#endif  // GYSIN_FUNCTOR_HPP
