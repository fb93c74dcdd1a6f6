#include "gysin/subquotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace gysin {

GradedSubspace::GradedSubspace(const GradedSpace& ambient) : GradedSubspace(dims_vector(ambient)) {}

GradedSubspace::GradedSubspace(std::vector<std::size_t> ambient_dims)
{
    parts_.reserve(ambient_dims.size());
    for (auto n : ambient_dims)
        parts_.emplace_back(n);
}

std::size_t GradedSubspace::ambient_dim(int degree) const noexcept
{
    return degree < 0 || degree >= degree_bound() ? 0 : parts_[static_cast<std::size_t>(degree)].ambient();
}

std::size_t GradedSubspace::dim(int degree) const noexcept
{
    return degree < 0 || degree >= degree_bound() ? 0 : parts_[static_cast<std::size_t>(degree)].dim();
}

std::size_t GradedSubspace::total_dim() const noexcept
{
    std::size_t n = 0;
    for (const auto& p : parts_)
        n += p.dim();
    return n;
}

const gf2::Subspace& GradedSubspace::part(int degree) const
{
    if (degree < 0 || degree >= degree_bound())
        return empty_;
    return parts_[static_cast<std::size_t>(degree)];
}

bool GradedSubspace::insert(int degree, const gf2::BitVec& v)
{
    if (degree < 0 || degree >= degree_bound()) {
        if (!v.is_zero())
            throw std::invalid_argument("insert into a degree with zero ambient dimension");
        return false;
    }
    return parts_[static_cast<std::size_t>(degree)].insert(v);
}

bool GradedSubspace::contains(int degree, const gf2::BitVec& v) const
{
    if (degree < 0 || degree >= degree_bound())
        return v.is_zero();
    return parts_[static_cast<std::size_t>(degree)].contains(v);
}

bool GradedSubspace::contains(const GradedSubspace& other) const
{
    for (int k = 0; k < other.degree_bound(); ++k)
        for (const auto& v : other.part(k).basis())
            if (!contains(k, v))
                return false;
    return true;
}

GradedSubspace image(const GradedMap& f)
{
    GradedSubspace out(f.target_dims());
    for (int k = 0; k < f.source_degree_bound(); ++k)
        for (auto& v : gf2::image_basis(f.block(k)))
            out.insert(k + f.shift(), v);
    return out;
}

GradedSubspace kernel(const GradedMap& f)
{
    GradedSubspace out(f.source_dims());
    for (int k = 0; k < f.source_degree_bound(); ++k)
        for (auto& v : gf2::kernel_basis(f.block(k)))
            out.insert(k, v);
    return out;
}

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b)
{
    GradedSubspace out = a;
    for (int k = 0; k < b.degree_bound(); ++k)
        for (const auto& v : b.part(k).basis())
            out.insert(k, v);
    return out;
}

GradedSubspace image_of(const GradedMap& f, const GradedSubspace& s)
{
    GradedSubspace out(f.target_dims());
    for (int k = 0; k < s.degree_bound(); ++k)
        for (const auto& v : s.part(k).basis())
            out.insert(k + f.shift(), f.apply(k, v));
    return out;
}

GradedSubspace preimage(const GradedMap& f, const GradedSubspace& t)
{
    GradedSubspace out(f.source_dims());
    for (int k = 0; k < f.source_degree_bound(); ++k) {
        // Kernel of (source -> target / T): compose the block with reduction mod T.
        const auto& part = t.part(k + f.shift());
        const auto& b = f.block(k);
        const auto complement = part.complement_columns();
        gf2::Matrix reduced(complement.size(), b.cols());
        for (std::size_t c = 0; c < b.cols(); ++c) {
            const auto img = part.reduce(b.column(c));
            for (std::size_t i = 0; i < complement.size(); ++i)
                if (img.get(complement[i]))
                    reduced.set(i, c);
        }
        for (auto& v : gf2::kernel_basis(reduced))
            out.insert(k, v);
    }
    return out;
}

namespace {

std::string support_name(const GradedSpace& ambient, int degree, const gf2::BitVec& v)
{
    std::string name;
    const auto& idx = ambient.indices_in_degree(degree);
    for (auto i : v.to_indices()) {
        if (!name.empty())
            name += "+";
        name += ambient.element(idx[i]).name;
    }
    return name.empty() ? "0" : name;
}

}  // namespace

std::optional<gf2::BitVec> SubObject::coords(int degree, const gf2::BitVec& ambient) const
{
    return sub.part(degree).coords(ambient);
}

SubObject make_sub(const GradedSpace& ambient, const GradedSubspace& sub, const std::string& label)
{
    std::vector<BasisElement> basis;
    for (int k = 0; k < sub.degree_bound(); ++k)
        for (const auto& v : sub.part(k).basis())
            basis.push_back({label.empty() ? support_name(ambient, k, v) : label + support_name(ambient, k, v), k});
    SubObject out{GradedSpace(std::move(basis)), {}, sub};
    out.inclusion = GradedMap(out.space, ambient, 0);
    for (int k = 0; k < out.space.degree_bound(); ++k) {
        const auto& rows = sub.part(k).basis();
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (auto i : rows[j].to_indices())
                out.inclusion.block(k).set(i, j);
    }
    return out;
}

QuotientObject make_quotient(const GradedSpace& ambient, const GradedSubspace& sub)
{
    std::vector<BasisElement> basis;
    std::vector<std::vector<std::size_t>> complements(static_cast<std::size_t>(ambient.degree_bound()));
    for (int k = 0; k < ambient.degree_bound(); ++k) {
        const auto& part = sub.part(k);
        auto cols = part.ambient() == ambient.dim(k) ? part.complement_columns()
                                                      : gf2::Subspace(ambient.dim(k)).complement_columns();
        for (auto c : cols)
            basis.push_back({"[" + ambient.element(ambient.indices_in_degree(k)[c]).name + "]", k});
        complements[static_cast<std::size_t>(k)] = std::move(cols);
    }
    QuotientObject out{GradedSpace(std::move(basis)), {}, {}, sub};
    out.projection = GradedMap(ambient, out.space, 0);
    out.section = GradedMap(out.space, ambient, 0);
    for (int k = 0; k < ambient.degree_bound(); ++k) {
        const auto& cols = complements[static_cast<std::size_t>(k)];
        const auto& part = sub.part(k);
        for (std::size_t j = 0; j < ambient.dim(k); ++j) {
            const auto r = part.ambient() == ambient.dim(k) ? part.reduce(gf2::BitVec::unit(ambient.dim(k), j))
                                                            : gf2::BitVec::unit(ambient.dim(k), j);
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (r.get(cols[i]))
                    out.projection.block(k).set(i, j);
        }
        for (std::size_t i = 0; i < cols.size(); ++i)
            out.section.block(k).set(cols[i], i);
    }
    return out;
}

std::optional<GradedMap> restrict_map(const GradedMap& f, const SubObject& src, const SubObject& tgt)
{
    GradedMap out(src.space, tgt.space, f.shift());
    for (int k = 0; k < src.space.degree_bound(); ++k) {
        const auto& basis = src.sub.part(k).basis();
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto c = tgt.coords(k + f.shift(), f.apply(k, basis[j]));
            if (!c)
                return std::nullopt;
            for (auto i : c->to_indices())
                out.block(k).set(i, j);
        }
    }
    return out;
}

std::optional<GradedMap> induced_map(const GradedMap& f, const QuotientObject& src, const QuotientObject& tgt)
{
    for (int k = 0; k < src.sub.degree_bound(); ++k)
        for (const auto& v : src.sub.part(k).basis())
            if (!tgt.sub.contains(k + f.shift(), f.apply(k, v)))
                return std::nullopt;
    return compose(tgt.projection, compose(f, src.section));
}

bool injective_at(const GradedMap& f, int degree) { return gf2::rank(f.block(degree)) == f.source_dim(degree); }

bool surjective_at(const GradedMap& f, int degree)
{
    return gf2::rank(f.block(degree - f.shift())) == f.target_dim(degree);
}

bool exact_at(const GradedMap& f, const GradedMap& g, int degree)
{
    const auto& fb = f.block(degree - f.shift());
    const auto& gb = g.block(degree);
    const std::size_t middle = g.source_dim(degree);
    if (f.target_dim(degree) != middle)
        throw std::invalid_argument("exact_at: maps do not share a middle object in degree " + std::to_string(degree));
    if (middle == 0)
        return true;
    const std::size_t rf = fb.cols() == 0 ? 0 : gf2::rank(fb);
    const std::size_t rg = gb.rows() == 0 ? 0 : gf2::rank(gb);
    if (rf + rg != middle)
        return false;
    if (fb.cols() == 0 || gb.rows() == 0)
        return true;
    return (gb * fb).is_zero();
}

std::vector<int> exactness_failures(const GradedMap& f, const GradedMap& g)
{
    std::vector<int> out;
    const int bound = std::max(g.source_degree_bound(), f.target_degree_bound());
    for (int k = 0; k < bound; ++k)
        if (!exact_at(f, g, k))
            out.push_back(k);
    return out;
}

std::vector<int> injectivity_failures(const GradedMap& f)
{
    std::vector<int> out;
    for (int k = 0; k < f.source_degree_bound(); ++k)
        if (!injective_at(f, k))
            out.push_back(k);
    return out;
}

std::vector<int> surjectivity_failures(const GradedMap& f)
{
    std::vector<int> out;
    for (int k = 0; k < f.target_degree_bound(); ++k)
        if (!surjective_at(f, k))
            out.push_back(k);
    return out;
}

std::vector<int> commutativity_failures(const GradedMap& g, const GradedMap& f, const GradedMap& h,
                                        const GradedMap& k)
{
    const auto left = compose(g, f);
    const auto right = compose(h, k);
    std::vector<int> out;
    const int bound = std::max(left.source_degree_bound(), right.source_degree_bound());
    for (int d = 0; d < bound; ++d) {
        const auto& a = left.block(d);
        const auto& b = right.block(d);
        if (!((a.is_zero() && b.is_zero()) || a == b))
            out.push_back(d);
    }
    return out;
}

}  // namespace gysin
