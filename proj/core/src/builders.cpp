#include "gysin/builders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace gysin {

namespace {

gf2::BitVec single(std::size_t n, std::size_t i) { return gf2::BitVec::unit(n, i); }

GysinEdge make_edge(const CoveringPair& p, const GradedAlgebra& kw, const GradedAlgebra& ku, const gf2::Matrix& rho,
                    const gf2::Matrix& psi)
{
    return {p, GradedMap::from_dense(rho, kw.space, ku.space, 0), GradedMap::from_dense(psi, ku.space, kw.space, 0)};
}

}  // namespace

GysinFunctor build_reference_example()
{
    GysinFunctor f(1);
    const Subgroup& zero = f.lattice.zero();
    const Subgroup& top = f.lattice.top();

    GradedAlgebra k0 = GradedAlgebra::with_space(
        zero,
        GradedSpace({{"iota", 0}, {"x1", 1}, {"x2", 2}, {"x1x2", 3}, {"x4", 4}, {"y4", 4}, {"x5", 5}, {"x1x5", 6}}), 0);
    for (std::size_t j = 0; j < 8; ++j) {
        k0.set_product(0, j, single(8, j));
        k0.set_product(j, 0, single(8, j));
    }
    auto both = [&](std::size_t i, std::size_t j, std::size_t k) {
        k0.set_product(i, j, single(8, k));
        k0.set_product(j, i, single(8, k));
    };
    both(1, 2, 3);  // x1 x2
    both(1, 6, 7);  // x1 x5
    both(2, 5, 7);  // x2 y4 = x1 x5

    // Monomials t^a z1^b z2^c; families (b, c) in the order 1, z1, z2, z1z2.
    struct Family {
        const char* name;
        int base_degree;
        int max_power;
        std::size_t first;
    };
    const Family fam[4] = {{"mu", 0, 4, 0}, {"z1", 1, 3, 5}, {"z2", 2, 3, 9}, {"z1z2", 3, 3, 13}};
    std::vector<BasisElement> basis;
    for (const auto& fm : fam)
        for (int a = 0; a <= fm.max_power; ++a) {
            const std::string t = a == 0 ? "" : a == 1 ? "t" : "t^" + std::to_string(a);
            basis.push_back({t + fm.name, fm.base_degree + a});
        }
    GradedAlgebra kw = GradedAlgebra::with_space(top, GradedSpace(basis), 0);
    auto index = [&](int family, int a) -> std::optional<std::size_t> {
        if (a > fam[family].max_power)
            return std::nullopt;
        return fam[family].first + static_cast<std::size_t>(a);
    };
    for (int f1 = 0; f1 < 4; ++f1)
        for (int a1 = 0; a1 <= fam[f1].max_power; ++a1)
            for (int f2 = 0; f2 < 4; ++f2)
                for (int a2 = 0; a2 <= fam[f2].max_power; ++a2) {
                    if (f1 & f2)
                        continue;  // z1^2 = z2^2 = 0
                    const auto k = index(f1 | f2, a1 + a2);
                    if (k)
                        kw.set_product(*index(f1, a1), *index(f2, a2), single(17, *k));
                }
    kw.h_images[0] = single(17, 1);  // t

    gf2::Matrix rho(8, 17);
    rho.set(0, 0);   // mu -> iota
    rho.set(1, 5);   // z1 -> x1
    rho.set(2, 9);   // z2 -> x2
    rho.set(3, 13);  // z1z2 -> x1x2
    gf2::Matrix psi(17, 8);
    psi.set(4, 4);   // x4 -> t^4 mu
    psi.set(8, 5);   // y4 -> t^3 z1
    psi.set(12, 6);  // x5 -> t^3 z2
    psi.set(16, 7);  // x1x5 -> t^3 z1z2

    f.algebras = {k0, kw};
    f.edges = {make_edge(f.lattice.covering_pairs()[0], kw, k0, rho, psi)};
    return f;
}

GysinFunctor build_sphere_model(int n)
{
    if (n < 1)
        throw std::invalid_argument("sphere model needs n >= 1, got " + std::to_string(n));
    GysinFunctor f(1);
    const std::size_t m = static_cast<std::size_t>(n) + 1;

    GradedAlgebra k0 = GradedAlgebra::with_space(f.lattice.zero(), GradedSpace({{"1", 0}, {"s", n}}), 0);
    k0.set_product(0, 0, single(2, 0));
    k0.set_product(0, 1, single(2, 1));
    k0.set_product(1, 0, single(2, 1));

    std::vector<BasisElement> basis;
    for (int a = 0; a <= n; ++a)
        basis.push_back({a == 0 ? "1" : a == 1 ? "t" : "t^" + std::to_string(a), a});
    GradedAlgebra kw = GradedAlgebra::with_space(f.lattice.top(), GradedSpace(basis), 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; a + b < m; ++b)
            kw.set_product(a, b, single(m, a + b));
    kw.h_images[0] = single(m, 1);

    gf2::Matrix rho(2, m);
    rho.set(0, 0);
    gf2::Matrix psi(m, 2);
    psi.set(m - 1, 1);

    f.algebras = {k0, kw};
    f.edges = {make_edge(f.lattice.covering_pairs()[0], kw, k0, rho, psi)};
    return f;
}

// ---------------------------------------------------------------------------
// Koszul model

namespace {

using Exponents = std::vector<int>;
// F2 polynomial as its set of monomials.
using Poly = std::set<Exponents>;

void add_monomial(Poly& p, const Exponents& e)
{
    if (!p.erase(e))
        p.insert(e);
}

Poly multiply(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& x : a)
        for (const auto& y : b) {
            Exponents z(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                z[i] = x[i] + y[i];
            add_monomial(out, z);
        }
    return out;
}

Poly linear_form(std::size_t vars, Mask coeffs)
{
    Poly p;
    for (std::size_t j = 0; j < vars; ++j)
        if ((coeffs >> j) & 1U) {
            Exponents e(vars, 0);
            e[j] = 1;
            p.insert(e);
        }
    return p;
}

Poly power(const Poly& p, int k, std::size_t vars)
{
    Poly out{Exponents(vars, 0)};
    for (int i = 0; i < k; ++i)
        out = multiply(out, p);
    return out;
}

int parity(Mask x) { return __builtin_popcount(x) & 1; }

std::string monomial_name(const Exponents& e, unsigned exterior)
{
    std::string s;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0)
            continue;
        s += "t" + std::to_string(j + 1);
        if (e[j] > 1)
            s += "^" + std::to_string(e[j]);
    }
    for (unsigned i = 0; i < 32; ++i)
        if ((exterior >> i) & 1U)
            s += "s" + std::to_string(i + 1);
    return s.empty() ? "1" : s;
}

struct Chain {
    Exponents alpha;
    unsigned ext;  // subset of exterior generators
    friend bool operator<(const Chain& a, const Chain& b)
    {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.ext < b.ext;
    }
};

void exponent_vectors(std::size_t vars, int total, Exponents& cur, std::size_t pos, std::vector<Exponents>& out)
{
    if (pos + 1 == vars || vars == 0) {
        if (vars == 0) {
            if (total == 0)
                out.push_back(cur);
            return;
        }
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (int a = total; a >= 0; --a) {
        cur[pos] = a;
        exponent_vectors(vars, total - a, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

// Koszul complex for one subgroup with its homology and multiplicative data.
class Koszul {
public:
    Koszul(const Subgroup& w, const std::vector<int>& dims, const std::vector<Mask>& characters) : w_(w), dims_(dims)
    {
        vars_ = static_cast<std::size_t>(w.rank());
        for (std::size_t i = 0; i < dims.size(); ++i) {
            Mask coeffs = 0;
            for (std::size_t j = 0; j < vars_; ++j)
                if (parity(characters[i] & w.rows()[j]))
                    coeffs |= Mask{1} << j;
            relation_.push_back(power(linear_form(vars_, coeffs), dims[i] + 1, vars_));
        }
        top_ = 0;
        for (int n : dims)
            top_ += n;
        // Chains up to top + 2 give homology through top + 1, which must vanish.
        for (int k = 0; k <= top_ + 2; ++k)
            build_degree(k);
        for (int k = 0; k <= top_ + 1; ++k)
            differential_.push_back(differential(k));
        for (int k = 0; k <= top_ + 1; ++k)
            build_homology(k);
        if (!reps_[static_cast<std::size_t>(top_ + 1)].empty())
            throw std::invalid_argument("characters do not define a free action on subgroup " + w.key());
        std::vector<BasisElement> basis;
        for (int k = 0; k <= top_; ++k)
            for (const auto& r : reps_[static_cast<std::size_t>(k)])
                basis.push_back({name_of(k, r), k});
        space_ = GradedSpace(std::move(basis));
    }

    const GradedSpace& space() const { return space_; }
    std::size_t vars() const { return vars_; }
    const Subgroup& subgroup() const { return w_; }

    std::size_t chain_dim(int k) const
    {
        return k < 0 || k >= static_cast<int>(chains_.size()) ? 0 : chains_[static_cast<std::size_t>(k)].size();
    }
    const Chain& chain(int k, std::size_t i) const { return chains_[static_cast<std::size_t>(k)][i]; }
    std::size_t chain_index(int k, const Chain& c) const { return index_[static_cast<std::size_t>(k)].at(c); }
    int chain_degree(const Chain& c) const
    {
        int d = 0;
        for (int a : c.alpha)
            d += a;
        for (std::size_t i = 0; i < dims_.size(); ++i)
            if ((c.ext >> i) & 1U)
                d += dims_[i];
        return d;
    }

    // Representative cycle of the local homology basis vector j in degree k.
    const gf2::BitVec& rep(int k, std::size_t j) const { return reps_[static_cast<std::size_t>(k)][j]; }
    const gf2::Matrix& d(int k) const { return differential_.at(static_cast<std::size_t>(k)); }

    // Degree-local homology coordinates of a cycle.
    gf2::BitVec classify(int k, const gf2::BitVec& cycle) const
    {
        const auto& m = classify_[static_cast<std::size_t>(k)];
        const auto x = gf2::solve(m, cycle);
        if (!x)
            throw std::logic_error("vector is not a cycle in degree " + std::to_string(k));
        const std::size_t nb = m.cols() - reps_[static_cast<std::size_t>(k)].size();
        gf2::BitVec out(reps_[static_cast<std::size_t>(k)].size());
        for (std::size_t j = 0; j < out.size(); ++j)
            if (x->get(nb + j))
                out.set(j);
        return out;
    }

    // Product of two chains.
    gf2::BitVec multiply(int ka, const gf2::BitVec& a, int kb, const gf2::BitVec& b) const
    {
        const int k = ka + kb;
        gf2::BitVec out(chain_dim(k));
        for (auto i : a.to_indices())
            for (auto j : b.to_indices()) {
                const Chain& x = chain(ka, i);
                const Chain& y = chain(kb, j);
                if (x.ext & y.ext)
                    continue;
                Chain z{x.alpha, x.ext | y.ext};
                for (std::size_t v = 0; v < vars_; ++v)
                    z.alpha[v] += y.alpha[v];
                if (k < static_cast<int>(chains_.size()))
                    out.flip(chain_index(k, z));
            }
        return out;
    }

    gf2::BitVec chain_of(int k, const Chain& c) const { return gf2::BitVec::unit(chain_dim(k), chain_index(k, c)); }

private:
    void build_degree(int k)
    {
        std::vector<Chain> cs;
        const std::size_t ext_count = dims_.size();
        for (unsigned s = 0; s < (1U << ext_count); ++s) {
            int sdeg = 0;
            for (std::size_t i = 0; i < ext_count; ++i)
                if ((s >> i) & 1U)
                    sdeg += dims_[i];
            if (sdeg > k)
                continue;
            std::vector<Exponents> alphas;
            Exponents cur(vars_, 0);
            exponent_vectors(vars_, k - sdeg, cur, 0, alphas);
            for (auto& a : alphas)
                cs.push_back({a, s});
        }
        std::sort(cs.begin(), cs.end(), [](const Chain& a, const Chain& b) {
            return a.ext != b.ext ? a.ext < b.ext : a.alpha > b.alpha;
        });
        std::map<Chain, std::size_t> idx;
        for (std::size_t i = 0; i < cs.size(); ++i)
            idx[cs[i]] = i;
        chains_.push_back(std::move(cs));
        index_.push_back(std::move(idx));
    }

    gf2::Matrix differential(int k) const
    {
        gf2::Matrix m(chain_dim(k + 1), chain_dim(k));
        for (std::size_t c = 0; c < chain_dim(k); ++c) {
            const Chain& x = chain(k, c);
            for (std::size_t i = 0; i < dims_.size(); ++i) {
                if (!((x.ext >> i) & 1U))
                    continue;
                for (const auto& mono : relation_[i]) {
                    Chain y{x.alpha, x.ext & ~(1U << i)};
                    for (std::size_t v = 0; v < vars_; ++v)
                        y.alpha[v] += mono[v];
                    const auto r = chain_index(k + 1, y);
                    m.set(r, c, !m.get(r, c));
                }
            }
        }
        return m;
    }

    void build_homology(int k)
    {
        gf2::Subspace boundaries(chain_dim(k));
        if (k > 0)
            for (auto& v : gf2::image_basis(differential_[static_cast<std::size_t>(k - 1)]))
                boundaries.insert(v);
        const gf2::Subspace cycles(chain_dim(k), gf2::kernel_basis(differential_[static_cast<std::size_t>(k)]));
        std::vector<gf2::BitVec> columns = boundaries.basis();
        gf2::Subspace seen = boundaries;
        std::vector<gf2::BitVec> reps;
        for (const auto& z : cycles.basis())
            if (seen.insert(z))
                reps.push_back(boundaries.reduce(z));
        columns.insert(columns.end(), reps.begin(), reps.end());
        classify_.push_back(gf2::Matrix::from_columns(columns, chain_dim(k)));
        reps_.push_back(std::move(reps));
    }

    std::string name_of(int k, const gf2::BitVec& rep) const
    {
        std::string s;
        for (auto i : rep.to_indices()) {
            if (!s.empty())
                s += "+";
            s += monomial_name(chain(k, i).alpha, chain(k, i).ext);
        }
        return s;
    }

    Subgroup w_;
    std::vector<int> dims_;
    std::size_t vars_ = 0;
    int top_ = 0;
    std::vector<Poly> relation_;
    std::vector<std::vector<Chain>> chains_;
    std::vector<std::map<Chain, std::size_t>> index_;
    std::vector<gf2::Matrix> differential_;
    std::vector<gf2::Matrix> classify_;
    std::vector<std::vector<gf2::BitVec>> reps_;
    GradedSpace space_;
};

GradedAlgebra koszul_algebra(const Koszul& kz)
{
    const GradedSpace& sp = kz.space();
    const std::size_t n = sp.total_dim();
    GradedAlgebra a = GradedAlgebra::with_space(kz.subgroup(), sp, 0);
    auto rep_of = [&](std::size_t g) {
        const auto& e = sp.element(g);
        return kz.rep(e.degree, sp.local_index(g));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int di = sp.element(i).degree;
            const int dj = sp.element(j).degree;
            if (di + dj >= sp.degree_bound())
                continue;
            const auto prod = kz.multiply(di, rep_of(i), dj, rep_of(j));
            a.set_product(i, j, sp.to_global(di + dj, kz.classify(di + dj, prod)));
        }
    const std::size_t unit_local = 0;
    a.unit = sp.indices_in_degree(0).at(unit_local);
    for (std::size_t j = 0; j < kz.vars(); ++j) {
        Exponents e(kz.vars(), 0);
        e[j] = 1;
        const auto cls = kz.classify(1, kz.chain_of(1, Chain{e, 0}));
        a.h_images[j] = sp.to_global(1, cls);
    }
    return a;
}

// Chain map i*: Kos_W -> Kos_U in degree k.
gf2::Matrix restriction_chain_map(const Koszul& w, const Koszul& u, int k)
{
    // i*(t_j^W) as a linear form in the variables of U
    std::vector<Poly> images;
    for (std::size_t j = 0; j < w.vars(); ++j) {
        const auto r = restrict_h1(H1Element{w.subgroup(), Mask{1} << j}, u.subgroup());
        images.push_back(linear_form(u.vars(), r.coords));
    }
    gf2::Matrix m(u.chain_dim(k), w.chain_dim(k));
    for (std::size_t c = 0; c < w.chain_dim(k); ++c) {
        const Chain& x = w.chain(k, c);
        Poly p{Exponents(u.vars(), 0)};
        for (std::size_t j = 0; j < w.vars(); ++j)
            p = multiply(p, power(images[j], x.alpha[j], u.vars()));
        for (const auto& mono : p) {
            const auto r = u.chain_index(k, Chain{mono, x.ext});
            m.set(r, c, !m.get(r, c));
        }
    }
    return m;
}

// Multiplication by a linear form f: Kos_W^k -> Kos_W^(k+1).
gf2::Matrix multiplication_chain_map(const Koszul& w, Mask f, int k)
{
    gf2::Matrix m(w.chain_dim(k + 1), w.chain_dim(k));
    for (std::size_t c = 0; c < w.chain_dim(k); ++c)
        for (std::size_t j = 0; j < w.vars(); ++j)
            if ((f >> j) & 1U) {
                Chain y = w.chain(k, c);
                y.alpha[j] += 1;
                const auto r = w.chain_index(k + 1, y);
                m.set(r, c, !m.get(r, c));
            }
    return m;
}

GysinEdge koszul_edge(const CoveringPair& p, const Koszul& w, const Koszul& u)
{
    GysinEdge e{p, GradedMap(w.space(), u.space(), 0), GradedMap(u.space(), w.space(), 0)};
    for (int k = 0; k < w.space().degree_bound() || k < u.space().degree_bound(); ++k) {
        const auto istar = restriction_chain_map(w, u, k);
        for (std::size_t j = 0; j < w.space().dim(k); ++j) {
            const auto img = u.classify(k, istar * w.rep(k, j));
            for (auto i : img.to_indices())
                e.rho.block(k).set(i, j);
        }
        // Connecting map: lift through i*, apply d, divide by the quotient functional.
        const auto mult = multiplication_chain_map(w, p.quotient_functional.coords, k);
        for (std::size_t j = 0; j < u.space().dim(k); ++j) {
            const auto lift = gf2::solve(istar, u.rep(k, j));
            if (!lift)
                throw std::logic_error("restriction of Koszul chains is not surjective");
            const auto boundary = w.d(k) * *lift;
            const auto quotient = gf2::solve(mult, boundary);
            if (!quotient)
                throw std::logic_error("boundary of a lifted cycle is not divisible by the quotient functional");
            const auto cls = w.classify(k, *quotient);
            for (auto i : cls.to_indices())
                e.psi.block(k).set(i, j);
        }
    }
    return e;
}

}  // namespace

GysinFunctor build_product_spheres(const std::vector<int>& dims, int rank, const std::vector<Mask>& characters)
{
    if (dims.empty())
        throw std::invalid_argument("product of spheres needs at least one sphere");
    if (dims.size() != characters.size())
        throw std::invalid_argument("one character per sphere is required");
    if (dims.size() > 8)
        throw std::invalid_argument("at most 8 spheres are supported");
    for (int n : dims)
        if (n < 1)
            throw std::invalid_argument("sphere dimensions must be >= 1");
    if (rank < 0 || rank > kMaxLatticeRank)
        throw std::invalid_argument("rank out of range");
    for (Mask c : characters)
        if (c >> rank)
            throw std::invalid_argument("character has bits outside the rank");

    GysinFunctor f(rank);
    std::vector<Koszul> models;
    for (const auto& w : f.lattice.subgroups())
        models.emplace_back(w, dims, characters);
    for (const auto& m : models)
        f.algebras.push_back(koszul_algebra(m));
    for (const auto& p : f.lattice.covering_pairs())
        f.edges.push_back(koszul_edge(p, models[*f.lattice.index_of(p.sup)], models[*f.lattice.index_of(p.sub)]));
    return f;
}

GysinFunctor build_product_spheres(const std::vector<int>& dims)
{
    std::vector<Mask> chars;
    for (std::size_t i = 0; i < dims.size(); ++i)
        chars.push_back(Mask{1} << i);
    return build_product_spheres(dims, static_cast<int>(dims.size()), chars);
}

}  // namespace gysin
