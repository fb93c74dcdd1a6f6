#include "gysin/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace gysin {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)), local_(basis_.size())
{
    for (std::size_t g = 0; g < basis_.size(); ++g) {
        const int d = basis_[g].degree;
        if (d < 0)
            throw std::invalid_argument("negative degree " + std::to_string(d) + " for basis element '" +
                                        basis_[g].name + "'");
        if (static_cast<std::size_t>(d) >= by_degree_.size())
            by_degree_.resize(static_cast<std::size_t>(d) + 1);
        local_[g] = by_degree_[static_cast<std::size_t>(d)].size();
        by_degree_[static_cast<std::size_t>(d)].push_back(g);
    }
}

GradedSpace GradedSpace::from_dims(const std::vector<std::size_t>& dims, const std::string& prefix)
{
    std::vector<BasisElement> basis;
    for (std::size_t k = 0; k < dims.size(); ++k)
        for (std::size_t i = 0; i < dims[k]; ++i)
            basis.push_back({prefix + std::to_string(k) + "_" + std::to_string(i), static_cast<int>(k)});
    return GradedSpace(std::move(basis));
}

GradedSpace GradedSpace::from_dims(const std::map<int, std::size_t>& dims, const std::string& prefix)
{
    std::vector<std::size_t> v;
    for (const auto& [k, n] : dims) {
        if (k < 0)
            throw std::invalid_argument("negative degree in dimension map");
        if (static_cast<std::size_t>(k) >= v.size())
            v.resize(static_cast<std::size_t>(k) + 1, 0);
        v[static_cast<std::size_t>(k)] = n;
    }
    return from_dims(v, prefix);
}

std::size_t GradedSpace::dim(int degree) const noexcept
{
    if (degree < 0 || degree >= degree_bound())
        return 0;
    return by_degree_[static_cast<std::size_t>(degree)].size();
}

std::map<int, std::size_t> GradedSpace::dims() const
{
    std::map<int, std::size_t> out;
    for (int k = 0; k < degree_bound(); ++k)
        if (dim(k) != 0)
            out[k] = dim(k);
    return out;
}

const std::vector<std::size_t>& GradedSpace::indices_in_degree(int degree) const
{
    static const std::vector<std::size_t> none;
    if (degree < 0 || degree >= degree_bound())
        return none;
    return by_degree_[static_cast<std::size_t>(degree)];
}

gf2::BitVec GradedSpace::to_global(const Element& e) const
{
    const auto& idx = indices_in_degree(e.degree);
    if (e.coords.size() != idx.size())
        throw std::invalid_argument("element has " + std::to_string(e.coords.size()) + " coordinates, degree " +
                                    std::to_string(e.degree) + " has dimension " + std::to_string(idx.size()));
    gf2::BitVec g(total_dim());
    for (auto i : e.coords.to_indices())
        g.set(idx[i]);
    return g;
}

gf2::BitVec GradedSpace::to_local(const gf2::BitVec& global, int degree) const
{
    gf2::BitVec local(dim(degree));
    for (auto g : global.to_indices()) {
        if (basis_.at(g).degree != degree)
            throw GradingError("component '" + basis_[g].name + "' has degree " + std::to_string(basis_[g].degree) +
                               ", expected " + std::to_string(degree));
        local.set(local_[g]);
    }
    return local;
}

int GradedSpace::homogeneous_degree(const gf2::BitVec& global) const
{
    int degree = -1;
    for (auto g : global.to_indices()) {
        if (degree == -1)
            degree = basis_.at(g).degree;
        else if (basis_[g].degree != degree)
            return -1;
    }
    return degree;
}

std::size_t norm(const GradedSpace& e)
{
    if (e.is_zero())
        throw std::domain_error("norm undefined on zero space");
    return static_cast<std::size_t>(e.degree_bound() - 1);
}

std::size_t total_dim(const GradedSpace& e) { return e.total_dim(); }

bool is_connected(const GradedSpace& e) { return e.dim(0) == 1; }

bool is_biconnected(const GradedSpace& e) { return is_connected(e) && e.dim(static_cast<int>(norm(e))) == 1; }

std::vector<std::size_t> dims_vector(const GradedSpace& e)
{
    std::vector<std::size_t> v(static_cast<std::size_t>(e.degree_bound()));
    for (int k = 0; k < e.degree_bound(); ++k)
        v[static_cast<std::size_t>(k)] = e.dim(k);
    return v;
}

GradedMap::GradedMap(const GradedSpace& source, const GradedSpace& target, int shift)
    : GradedMap(dims_vector(source), dims_vector(target), shift)
{
}

GradedMap::GradedMap(std::vector<std::size_t> source_dims, std::vector<std::size_t> target_dims, int shift)
    : source_dims_(std::move(source_dims)), target_dims_(std::move(target_dims)), shift_(shift)
{
    while (!source_dims_.empty() && source_dims_.back() == 0)
        source_dims_.pop_back();
    while (!target_dims_.empty() && target_dims_.back() == 0)
        target_dims_.pop_back();
    // Blocks also cover empty source degrees below the top target degree, so
    // every block has its true (target x source) shape.
    const int count = std::max(source_degree_bound(), target_degree_bound() - shift_);
    for (int k = 0; k < count; ++k)
        blocks_.emplace_back(target_dim(k + shift_), source_dim(k));
}

std::size_t GradedMap::source_dim(int degree) const noexcept
{
    if (degree < 0 || degree >= source_degree_bound())
        return 0;
    return source_dims_[static_cast<std::size_t>(degree)];
}

std::size_t GradedMap::target_dim(int degree) const noexcept
{
    if (degree < 0 || degree >= target_degree_bound())
        return 0;
    return target_dims_[static_cast<std::size_t>(degree)];
}

const gf2::Matrix& GradedMap::block(int degree) const
{
    if (degree < 0 || degree >= static_cast<int>(blocks_.size()))
        return empty_;
    return blocks_[static_cast<std::size_t>(degree)];
}

gf2::Matrix& GradedMap::block(int degree)
{
    if (degree < 0 || degree >= static_cast<int>(blocks_.size()))
        throw std::out_of_range("no block at source degree " + std::to_string(degree));
    return blocks_[static_cast<std::size_t>(degree)];
}

gf2::BitVec GradedMap::apply(int degree, const gf2::BitVec& local) const
{
    if (degree < 0 || degree >= static_cast<int>(blocks_.size())) {
        if (!local.is_zero())
            throw std::invalid_argument("nonzero vector in empty source degree");
        return gf2::BitVec(target_dim(degree + shift_));
    }
    return block(degree) * local;
}

GradedMap GradedMap::from_dense(const gf2::Matrix& dense, const GradedSpace& source, const GradedSpace& target,
                                int shift)
{
    if (dense.rows() != target.total_dim() || dense.cols() != source.total_dim())
        throw std::invalid_argument("matrix is " + std::to_string(dense.rows()) + "x" + std::to_string(dense.cols()) +
                                    ", expected " + std::to_string(target.total_dim()) + "x" +
                                    std::to_string(source.total_dim()));
    GradedMap m(source, target, shift);
    for (std::size_t r = 0; r < dense.rows(); ++r) {
        for (auto c : dense.row(r).to_indices()) {
            const auto& s = source.element(c);
            const auto& t = target.element(r);
            if (t.degree != s.degree + shift)
                throw GradingError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") maps '" + s.name +
                                   "' (degree " + std::to_string(s.degree) + ") to '" + t.name + "' (degree " +
                                   std::to_string(t.degree) + "), expected degree shift " + std::to_string(shift));
            m.block(s.degree).set(target.local_index(r), source.local_index(c));
        }
    }
    return m;
}

GradedMap GradedMap::identity(const GradedSpace& space)
{
    GradedMap m(space, space, 0);
    for (int k = 0; k < space.degree_bound(); ++k)
        m.block(k) = gf2::Matrix::identity(space.dim(k));
    return m;
}

gf2::Matrix GradedMap::to_dense(const GradedSpace& source, const GradedSpace& target) const
{
    gf2::Matrix dense(target.total_dim(), source.total_dim());
    for (int k = 0; k < source_degree_bound(); ++k) {
        const auto& b = block(k);
        const auto& cols = source.indices_in_degree(k);
        const auto& rows = target.indices_in_degree(k + shift_);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (auto c : b.row(r).to_indices())
                dense.set(rows[r], cols[c]);
    }
    return dense;
}

std::size_t GradedMap::rank() const
{
    std::size_t r = 0;
    for (const auto& b : blocks_)
        r += gf2::rank(b);
    return r;
}

bool GradedMap::is_zero() const
{
    return std::all_of(blocks_.begin(), blocks_.end(), [](const gf2::Matrix& b) { return b.is_zero(); });
}

GradedMap compose(const GradedMap& g, const GradedMap& f)
{
    std::vector<std::size_t> src(static_cast<std::size_t>(f.source_degree_bound()));
    for (int k = 0; k < f.source_degree_bound(); ++k)
        src[static_cast<std::size_t>(k)] = f.source_dim(k);
    std::vector<std::size_t> tgt(static_cast<std::size_t>(g.target_degree_bound()));
    for (int k = 0; k < g.target_degree_bound(); ++k)
        tgt[static_cast<std::size_t>(k)] = g.target_dim(k);
    GradedMap out(src, tgt, f.shift() + g.shift());
    for (int k = 0; k < f.source_degree_bound(); ++k) {
        const int mid = k + f.shift();
        if (f.target_dim(mid) != g.source_dim(mid))
            throw std::invalid_argument("compose: dimension mismatch in degree " + std::to_string(mid));
        if (f.source_dim(k) == 0 || g.source_dim(mid) == 0 || out.target_dim(mid + g.shift()) == 0)
            continue;
        out.block(k) = g.block(mid) * f.block(k);
    }
    return out;
}

GradedMap operator+(const GradedMap& a, const GradedMap& b)
{
    if (a.shift() != b.shift() || a.source_degree_bound() != b.source_degree_bound())
        throw std::invalid_argument("sum of incompatible graded maps");
    GradedMap out = a;
    for (int k = 0; k < a.source_degree_bound(); ++k)
        out.block(k) = a.block(k) + b.block(k);
    return out;
}

bool check_graded(const gf2::Matrix& dense, const GradedSpace& source, const GradedSpace& target, int shift)
{
    if (dense.rows() != target.total_dim() || dense.cols() != source.total_dim())
        return false;
    for (std::size_t r = 0; r < dense.rows(); ++r)
        for (auto c : dense.row(r).to_indices())
            if (target.element(r).degree != source.element(c).degree + shift)
                return false;
    return true;
}

}  // namespace gysin
