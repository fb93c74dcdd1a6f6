// Subgroups of V = (Z/2Z)^d, their covering relations, and degree-one
// cohomology H^1(W) = Hom(W, F2).
//
// A subgroup is keyed by the reduced row echelon form of a spanning set.
// Rows are bitmasks with coordinate 0 as the least significant bit; the pivot
// of a row is its lowest set bit and rows are sorted by pivot.

#ifndef GYSIN_LATTICE_HPP
#define GYSIN_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gysin {

inline constexpr int kMaxLatticeRank = 6;

using Mask = std::uint32_t;

class Subgroup {
public:
    Subgroup() = default;

    int ambient_rank() const noexcept { return ambient_rank_; }
    int rank() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<Mask>& rows() const noexcept { return rows_; }
    std::size_t order() const noexcept { return std::size_t{1} << rows_.size(); }

    bool contains(Mask v) const noexcept;
    bool contains(const Subgroup& other) const noexcept;
    // Coordinates of a member in the canonical basis (bit j = coefficient of row j).
    std::optional<Mask> coords(Mask v) const noexcept;
    // All 2^rank elements, enumerated by coordinate mask.
    std::vector<Mask> elements() const;

    // "[1,2]"
    std::string key() const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    // Rank first, then lexicographic on rows.
    friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

private:
    friend Subgroup canonical_form(int ambient_rank, std::span<const Mask> generators);
    int ambient_rank_ = 0;
    std::vector<Mask> rows_;
};

Subgroup canonical_form(int ambient_rank, std::span<const Mask> generators);
// Validates that `rows` is already canonical; throws std::invalid_argument otherwise.
Subgroup subgroup_from_key(int ambient_rank, std::span<const Mask> rows);

// A linear form on a subgroup, in the basis dual to its canonical rows.
struct H1Element {
    Subgroup over;
    Mask coords = 0;

    bool evaluate(Mask v) const;  // v must lie in `over`
    bool is_zero() const noexcept { return coords == 0; }
    friend bool operator==(const H1Element&, const H1Element&) = default;
};

// Restriction i*: H^1(W) -> H^1(U) along U <= W.
H1Element restrict_h1(const H1Element& x, const Subgroup& u);

struct CoveringPair {
    Subgroup sub;  // U
    Subgroup sup;  // W
    H1Element quotient_functional;  // nonzero on W, kernel exactly U
};

class SubgroupLattice {
public:
    explicit SubgroupLattice(int d);

    int rank() const noexcept { return d_; }
    const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
    const std::vector<CoveringPair>& covering_pairs() const noexcept { return pairs_; }
    std::optional<std::size_t> index_of(const Subgroup& s) const;
    std::optional<std::size_t> pair_index(const Subgroup& sub, const Subgroup& sup) const;
    const Subgroup& zero() const { return subgroups_.front(); }
    const Subgroup& top() const { return subgroups_.back(); }

private:
    int d_;
    std::vector<Subgroup> subgroups_;
    std::vector<CoveringPair> pairs_;
};

std::vector<Subgroup> enumerate_subgroups(int d);
std::vector<CoveringPair> covering_pairs(std::span<const Subgroup> lattice);

}  // namespace gysin

#endif  // GYSIN_LATTICE_HPP
