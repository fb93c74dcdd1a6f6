#include "gysin/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "gysin/gf2.hpp"

namespace gysin {

namespace {

void check_rank(int d)
{
    if (d < 0 || d > 31)
        throw std::invalid_argument("ambient rank " + std::to_string(d) + " out of range");
}

Mask pivot_bit(Mask row) { return row & (~row + 1); }

}  // namespace

bool Subgroup::contains(Mask v) const noexcept { return coords(v).has_value(); }

bool Subgroup::contains(const Subgroup& other) const noexcept
{
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](Mask r) { return contains(r); });
}

std::optional<Mask> Subgroup::coords(Mask v) const noexcept
{
    Mask c = 0;
    Mask rest = v;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (rest & pivot_bit(rows_[j])) {
            rest ^= rows_[j];
            c |= Mask{1} << j;
        }
    }
    if (rest != 0)
        return std::nullopt;
    return c;
}

std::vector<Mask> Subgroup::elements() const
{
    std::vector<Mask> out;
    out.reserve(order());
    for (Mask c = 0; c < order(); ++c) {
        Mask v = 0;
        for (std::size_t j = 0; j < rows_.size(); ++j)
            if ((c >> j) & 1U)
                v ^= rows_[j];
        out.push_back(v);
    }
    return out;
}

std::string Subgroup::key() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(rows_[i]);
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b)
{
    if (auto c = a.ambient_rank_ <=> b.ambient_rank_; c != 0)
        return c;
    if (auto c = a.rank() <=> b.rank(); c != 0)
        return c;
    return a.rows_ <=> b.rows_;
}

Subgroup canonical_form(int ambient_rank, std::span<const Mask> generators)
{
    check_rank(ambient_rank);
    const auto d = static_cast<std::size_t>(ambient_rank);
    std::vector<gf2::BitVec> rows;
    for (Mask g : generators) {
        if (ambient_rank < 32 && (g >> ambient_rank) != 0)
            throw std::invalid_argument("generator " + std::to_string(g) + " has bits beyond rank " +
                                        std::to_string(ambient_rank));
        gf2::BitVec v(d);
        for (std::size_t c = 0; c < d; ++c)
            v.set(c, (g >> c) & 1U);
        rows.push_back(std::move(v));
    }
    const auto reduced = gf2::rref(gf2::Matrix::from_rows(std::move(rows), d));
    Subgroup s;
    s.ambient_rank_ = ambient_rank;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        Mask m = 0;
        for (auto c : reduced.row(r).to_indices())
            m |= Mask{1} << c;
        if (m != 0)
            s.rows_.push_back(m);
    }
    return s;
}

Subgroup subgroup_from_key(int ambient_rank, std::span<const Mask> rows)
{
    Subgroup s = canonical_form(ambient_rank, rows);
    if (!std::equal(s.rows().begin(), s.rows().end(), rows.begin(), rows.end())) {
        std::string k = "[";
        for (std::size_t i = 0; i < rows.size(); ++i)
            k += (i ? "," : "") + std::to_string(rows[i]);
        throw std::invalid_argument("non-canonical subgroup key " + k + "]; canonical form is " + s.key());
    }
    return s;
}

bool H1Element::evaluate(Mask v) const
{
    const auto c = over.coords(v);
    if (!c)
        throw std::invalid_argument("vector " + std::to_string(v) + " is not in subgroup " + over.key());
    return (std::popcount(*c & coords) & 1) != 0;
}

H1Element restrict_h1(const H1Element& x, const Subgroup& u)
{
    if (!x.over.contains(u))
        throw std::invalid_argument("restriction target " + u.key() + " is not contained in " + x.over.key());
    H1Element out{u, 0};
    for (std::size_t i = 0; i < u.rows().size(); ++i)
        if (x.evaluate(u.rows()[i]))
            out.coords |= Mask{1} << i;
    return out;
}

std::vector<Subgroup> enumerate_subgroups(int d)
{
    if (d < 0 || d > kMaxLatticeRank)
        throw std::invalid_argument("rank " + std::to_string(d) + " outside supported range 0.." +
                                    std::to_string(kMaxLatticeRank));
    std::set<Subgroup> seen;
    std::vector<Subgroup> frontier{canonical_form(d, {})};
    seen.insert(frontier.front());
    const Mask n = Mask{1} << d;
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& s : frontier) {
            for (Mask v = 1; v < n; ++v) {
                if (s.contains(v))
                    continue;
                std::vector<Mask> gens = s.rows();
                gens.push_back(v);
                auto bigger = canonical_form(d, gens);
                if (seen.insert(bigger).second)
                    next.push_back(std::move(bigger));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<CoveringPair> covering_pairs(std::span<const Subgroup> lattice)
{
    std::vector<CoveringPair> out;
    for (const auto& w : lattice) {
        const Mask forms = static_cast<Mask>(w.order());
        std::vector<CoveringPair> here;
        for (Mask f = 1; f < forms; ++f) {
            H1Element form{w, f};
            std::vector<Mask> kernel;
            for (Mask v : w.elements())
                if (!form.evaluate(v))
                    kernel.push_back(v);
            here.push_back({canonical_form(w.ambient_rank(), kernel), w, form});
        }
        std::sort(here.begin(), here.end(), [](const CoveringPair& a, const CoveringPair& b) { return a.sub < b.sub; });
        out.insert(out.end(), here.begin(), here.end());
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CoveringPair& a, const CoveringPair& b) { return a.sup < b.sup; });
    return out;
}

SubgroupLattice::SubgroupLattice(int d) : d_(d), subgroups_(enumerate_subgroups(d)), pairs_(gysin::covering_pairs(subgroups_))
{
}

std::optional<std::size_t> SubgroupLattice::index_of(const Subgroup& s) const
{
    auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), s);
    if (it == subgroups_.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - subgroups_.begin());
}

std::optional<std::size_t> SubgroupLattice::pair_index(const Subgroup& sub, const Subgroup& sup) const
{
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i].sub == sub && pairs_[i].sup == sup)
            return i;
    return std::nullopt;
}

}  // namespace gysin
