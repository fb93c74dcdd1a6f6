// Finite graded modules over F2[t] (one nilpotent degree-raising operator)
// and over H*W (commuting degree-one operators, one per dual basis form).

#ifndef GYSIN_MODULES_HPP
#define GYSIN_MODULES_HPP

#include <string>
#include <vector>

#include "gysin/graded.hpp"
#include "gysin/lattice.hpp"
#include "gysin/subquotient.hpp"

namespace gysin {

struct TModule {
    GradedSpace space;
    GradedMap t;  // shift +1

    static TModule zero_action(const GradedSpace& space);
    // Throws std::invalid_argument if t is not a shift-+1 endomorphism of space.
    void validate() const;
};

struct HWModule {
    Subgroup subgroup;
    GradedSpace space;
    std::vector<GradedMap> ops;  // ops[j] acts as the j-th dual basis form

    // Pairs (i, j) and degrees where ops[i] and ops[j] fail to commute.
    std::vector<std::string> commutation_failures() const;
};

struct JordanBlock {
    std::size_t size = 0;  // k + 1 for a block F2[t]/<t^{k+1}>
    int base_degree = 0;
    gf2::BitVec generator;  // global coordinates in the module space

    friend bool operator==(const JordanBlock& a, const JordanBlock& b)
    {
        return a.size == b.size && a.base_degree == b.base_degree;
    }
};

struct JordanType {
    std::vector<JordanBlock> blocks;  // sizes descending, then base degree ascending

    std::vector<std::size_t> parts() const;
    std::size_t total() const;
    std::string to_string() const;
};

QuotientObject bar(const TModule& m);
SubObject tau(const TModule& m);
JordanType jordan_type(const TModule& m);

struct BarTauBalance {
    bool pass = false;
    std::size_t bar_dim = 0;
    std::size_t tau_dim = 0;
};
// Tor_0 and Tor_1 of a finite F2[t]-module have the same total dimension.
BarTauBalance check_bar_tau_balance(const TModule& m);

// Smallest ops-closed subspace containing x.
SubObject submodule_generated(const HWModule& m, const Element& x);
// Overload taking a global vector; throws std::invalid_argument if x is not homogeneous.
SubObject submodule_generated(const HWModule& m, const gf2::BitVec& global);
// Same, generated by several homogeneous elements.
GradedSubspace closure(const HWModule& m, const GradedSubspace& seed);
GradedSubspace closure(const TModule& m, const GradedSubspace& seed);

TModule restrict_to_t(const HWModule& m, const H1Element& f);

// Quotient of an HWModule by all ops at once (the full augmentation ideal).
QuotientObject bar_all(const HWModule& m);

struct ShortExactSeq {
    TModule a, b, c;
    GradedMap inj;   // a -> b
    GradedMap surj;  // b -> c

    // Empty when the sequence is a valid short exact sequence of F2[t]-modules.
    std::vector<std::string> violations() const;
};

struct InvalidSequence : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LesFinding {
    std::string spot;  // e.g. "tauB", "barA", "delta"
    int degree = 0;
    std::string message;
};

// 0 -> tauA -> tauB -> tauC --delta--> barA -> barB -> barC -> 0, where delta
// raises degree by one.
struct TorLes {
    SubObject tau_a, tau_b, tau_c;
    QuotientObject bar_a, bar_b, bar_c;
    GradedMap tau_ab, tau_bc, delta, bar_ab, bar_bc;
    std::vector<LesFinding> findings;

    bool exact() const { return findings.empty(); }
};

TorLes tor_les(const ShortExactSeq& s);

}  // namespace gysin

#endif  // GYSIN_MODULES_HPP
