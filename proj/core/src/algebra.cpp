#include "gysin/algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace gysin {

namespace {

constexpr std::size_t kMaxPerCheck = 16;

// Collects failures for one algebra, capping each check at kMaxPerCheck entries.
class Collector {
public:
    Collector(VerificationReport& r, std::string location) : r_(r), location_(std::move(location)) {}

    void fail(const std::string& check, int degree, const std::string& message)
    {
        if (++counts_[check] <= kMaxPerCheck)
            r_.fail(check, location_, degree, message);
    }

    void finish()
    {
        for (const auto& [check, n] : counts_)
            if (n > kMaxPerCheck)
                r_.fail(check, location_, -1, std::to_string(n - kMaxPerCheck) + " further violations suppressed");
    }

private:
    VerificationReport& r_;
    std::string location_;
    std::map<std::string, std::size_t> counts_;
};

std::string name_of(const GradedAlgebra& a, std::size_t i) { return a.space.element(i).name; }

std::string pair_name(const GradedAlgebra& a, std::size_t i, std::size_t j)
{
    return "(" + name_of(a, i) + ", " + name_of(a, j) + ")";
}

}  // namespace

GradedAlgebra GradedAlgebra::with_space(Subgroup subgroup, GradedSpace space, std::size_t unit)
{
    GradedAlgebra a;
    a.subgroup = std::move(subgroup);
    a.space = std::move(space);
    a.unit = unit;
    const std::size_t n = a.space.total_dim();
    a.mul.assign(n * n, gf2::BitVec(n));
    a.h_images.assign(static_cast<std::size_t>(a.subgroup.rank()), gf2::BitVec(n));
    return a;
}

gf2::BitVec GradedAlgebra::multiply(const gf2::BitVec& x, const gf2::BitVec& y) const
{
    gf2::BitVec out(dim());
    const auto ys = y.to_indices();
    for (auto i : x.to_indices())
        for (auto j : ys)
            out ^= product(i, j);
    return out;
}

GradedMap GradedAlgebra::left_multiplication(const gf2::BitVec& x, int shift) const
{
    GradedMap m(space, space, shift);
    for (std::size_t j = 0; j < dim(); ++j) {
        const auto& src = space.element(j);
        const auto img = multiply(x, gf2::BitVec::unit(dim(), j));
        for (auto r : img.to_indices()) {
            if (space.element(r).degree != src.degree + shift)
                throw GradingError("left multiplication sends '" + src.name + "' outside degree " +
                                   std::to_string(src.degree + shift));
            m.block(src.degree).set(space.local_index(r), space.local_index(j));
        }
    }
    return m;
}

VerificationReport verify_algebra(const GradedAlgebra& a)
{
    VerificationReport r;
    const std::string loc = a.subgroup.key();
    const std::size_t n = a.dim();
    if (n == 0) {
        r.fail("algebra.nonzero", loc, -1, "algebra is the zero space");
        return r;
    }
    if (a.mul.size() != n * n) {
        r.fail("algebra.shape", loc, -1,
               "expected " + std::to_string(n * n) + " structure constants, got " + std::to_string(a.mul.size()));
        return r;
    }
    for (const auto& v : a.mul)
        if (v.size() != n) {
            r.fail("algebra.shape", loc, -1, "structure constant of wrong length");
            return r;
        }
    Collector c(r, loc);

    bool degrees_ok = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = a.product(i, j);
            const int want = a.space.element(i).degree + a.space.element(j).degree;
            for (auto k : v.to_indices())
                if (a.space.element(k).degree != want) {
                    c.fail("algebra.degree", want,
                           "product " + pair_name(a, i, j) + " has component '" + name_of(a, k) + "' of degree " +
                               std::to_string(a.space.element(k).degree));
                    degrees_ok = false;
                    break;
                }
        }

    if (a.unit >= n) {
        c.fail("algebra.unit", -1, "unit index " + std::to_string(a.unit) + " out of range");
    } else {
        if (a.space.element(a.unit).degree != 0)
            c.fail("algebra.unit", a.space.element(a.unit).degree, "unit '" + name_of(a, a.unit) + "' is not in degree 0");
        for (std::size_t j = 0; j < n; ++j) {
            const auto e = gf2::BitVec::unit(n, j);
            if (a.product(a.unit, j) != e)
                c.fail("algebra.unit", a.space.element(j).degree, "unit * " + name_of(a, j) + " != " + name_of(a, j));
            if (a.product(j, a.unit) != e)
                c.fail("algebra.unit", a.space.element(j).degree, name_of(a, j) + " * unit != " + name_of(a, j));
        }
    }

    // Triples whose degree sum exceeds the top degree multiply to zero on both
    // sides once products are degree-additive.
    const int top = a.space.degree_bound() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int dij = a.space.element(i).degree + a.space.element(j).degree;
            if (degrees_ok && dij > top)
                continue;
            const auto& ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const int d = dij + a.space.element(k).degree;
                if (degrees_ok && d > top)
                    continue;
                gf2::BitVec left(n), right(n);
                for (auto p : ij.to_indices())
                    left ^= a.product(p, k);
                for (auto p : a.product(j, k).to_indices())
                    right ^= a.product(i, p);
                if (left != right)
                    c.fail("algebra.assoc", d,
                           "(" + name_of(a, i) + " * " + name_of(a, j) + ") * " + name_of(a, k) + " != " +
                               name_of(a, i) + " * (" + name_of(a, j) + " * " + name_of(a, k) + ")");
            }
        }

    if (a.h_images.size() != static_cast<std::size_t>(a.subgroup.rank())) {
        c.fail("algebra.h_image", 1,
               "expected " + std::to_string(a.subgroup.rank()) + " generator images, got " +
                   std::to_string(a.h_images.size()));
    } else {
        bool h_ok = true;
        for (std::size_t g = 0; g < a.h_images.size(); ++g) {
            const auto& h = a.h_images[g];
            if (h.size() != n) {
                c.fail("algebra.h_image", 1, "generator image " + std::to_string(g) + " has wrong length");
                h_ok = false;
                continue;
            }
            if (!h.is_zero() && a.space.homogeneous_degree(h) != 1) {
                c.fail("algebra.h_image", 1, "generator image " + std::to_string(g) + " is not in degree 1");
                h_ok = false;
            }
        }
        if (h_ok) {
            for (std::size_t g = 0; g < a.h_images.size(); ++g) {
                const auto& h = a.h_images[g];
                for (std::size_t j = 0; j < n; ++j) {
                    const auto e = gf2::BitVec::unit(n, j);
                    if (a.multiply(h, e) != a.multiply(e, h))
                        c.fail("algebra.central", a.space.element(j).degree + 1,
                               "generator image " + std::to_string(g) + " does not commute with " + name_of(a, j));
                }
                for (std::size_t g2 = g + 1; g2 < a.h_images.size(); ++g2)
                    if (a.multiply(h, a.h_images[g2]) != a.multiply(a.h_images[g2], h))
                        c.fail("algebra.central", 2,
                               "generator images " + std::to_string(g) + " and " + std::to_string(g2) +
                                   " do not commute");
            }
        }
    }
    c.finish();
    return r;
}

HWModule module_of(const GradedAlgebra& a)
{
    HWModule m{a.subgroup, a.space, {}};
    for (const auto& h : a.h_images)
        m.ops.push_back(a.left_multiplication(h, 1));
    return m;
}

}  // namespace gysin
