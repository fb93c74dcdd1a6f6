#include "gysin/modules.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace gysin {

TModule TModule::zero_action(const GradedSpace& space) { return {space, GradedMap(space, space, 1)}; }

void TModule::validate() const
{
    if (t.shift() != 1)
        throw std::invalid_argument("t-action must raise degree by one, got shift " + std::to_string(t.shift()));
    const auto dims = dims_vector(space);
    if (t.source_dims() != dims || t.target_dims() != dims)
        throw std::invalid_argument("t-action is not an endomorphism of the module space");
}

std::vector<std::string> HWModule::commutation_failures() const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            for (int d : commutativity_failures(ops[i], ops[j], ops[j], ops[i]))
                out.push_back("ops " + std::to_string(i) + " and " + std::to_string(j) + " do not commute in degree " +
                              std::to_string(d));
    return out;
}

std::vector<std::size_t> JordanType::parts() const
{
    std::vector<std::size_t> p;
    for (const auto& b : blocks)
        p.push_back(b.size);
    return p;
}

std::size_t JordanType::total() const
{
    std::size_t n = 0;
    for (const auto& b : blocks)
        n += b.size;
    return n;
}

std::string JordanType::to_string() const
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < blocks.size(); ++i)
        os << (i ? ", " : "") << blocks[i].size << "@" << blocks[i].base_degree;
    os << "}";
    return os.str();
}

QuotientObject bar(const TModule& m) { return make_quotient(m.space, image(m.t)); }

SubObject tau(const TModule& m) { return make_sub(m.space, kernel(m.t)); }

JordanType jordan_type(const TModule& m)
{
    m.validate();
    // kernels[j] = ker t^j
    std::vector<GradedSubspace> kernels{GradedSubspace(m.space)};
    GradedMap power = GradedMap::identity(m.space);
    while (true) {
        power = compose(m.t, power);
        kernels.push_back(kernel(power));
        if (kernels.back().total_dim() == m.space.total_dim())
            break;
        if (kernels.size() > m.space.total_dim() + 2)
            throw std::logic_error("t-action is not nilpotent");
    }
    kernels.push_back(kernels.back());  // ker t^{s+1} for the largest s

    JordanType out;
    const std::size_t max_size = kernels.size() - 2;
    for (std::size_t s = max_size; s >= 1; --s) {
        // Generators of size-s blocks span ker t^s modulo ker t^{s-1} + t ker t^{s+1}.
        GradedSubspace taken = sum(kernels[s - 1], image_of(m.t, kernels[s + 1]));
        for (int k = 0; k < m.space.degree_bound(); ++k) {
            for (const auto& v : kernels[s].part(k).basis()) {
                if (taken.insert(k, v))
                    out.blocks.push_back({s, k, m.space.to_global(k, v)});
            }
        }
    }
    std::stable_sort(out.blocks.begin(), out.blocks.end(), [](const JordanBlock& a, const JordanBlock& b) {
        return a.size != b.size ? a.size > b.size : a.base_degree < b.base_degree;
    });
    if (out.total() != m.space.total_dim())
        throw std::logic_error("Jordan decomposition does not cover the module");
    return out;
}

BarTauBalance check_bar_tau_balance(const TModule& m)
{
    BarTauBalance r;
    r.bar_dim = bar(m).space.total_dim();
    r.tau_dim = tau(m).space.total_dim();
    r.pass = r.bar_dim == r.tau_dim;
    return r;
}

namespace {

template <typename OpRange>
GradedSubspace close_under(const GradedSpace& space, const OpRange& ops, const GradedSubspace& seed)
{
    GradedSubspace out(space);
    std::deque<Element> queue;
    for (int k = 0; k < seed.degree_bound(); ++k)
        for (const auto& v : seed.part(k).basis())
            if (out.insert(k, v))
                queue.push_back({k, v});
    while (!queue.empty()) {
        Element e = std::move(queue.front());
        queue.pop_front();
        for (const GradedMap& op : ops) {
            auto img = op.apply(e.degree, e.coords);
            const int d = e.degree + op.shift();
            if (!img.is_zero() && out.insert(d, img))
                queue.push_back({d, std::move(img)});
        }
    }
    return out;
}

}  // namespace

GradedSubspace closure(const HWModule& m, const GradedSubspace& seed) { return close_under(m.space, m.ops, seed); }

GradedSubspace closure(const TModule& m, const GradedSubspace& seed)
{
    const std::vector<GradedMap> ops{m.t};
    return close_under(m.space, ops, seed);
}

SubObject submodule_generated(const HWModule& m, const Element& x)
{
    GradedSubspace seed(m.space);
    if (x.coords.size() != m.space.dim(x.degree))
        throw std::invalid_argument("element size does not match degree " + std::to_string(x.degree));
    seed.insert(x.degree, x.coords);
    return make_sub(m.space, closure(m, seed));
}

SubObject submodule_generated(const HWModule& m, const gf2::BitVec& global)
{
    if (global.is_zero())
        return make_sub(m.space, GradedSubspace(m.space));
    const int d = m.space.homogeneous_degree(global);
    if (d < 0)
        throw std::invalid_argument("generator is not homogeneous");
    return submodule_generated(m, Element{d, m.space.to_local(global, d)});
}

TModule restrict_to_t(const HWModule& m, const H1Element& f)
{
    if (f.over != m.subgroup)
        throw std::invalid_argument("form lives over " + f.over.key() + ", module over " + m.subgroup.key());
    if (m.ops.size() != static_cast<std::size_t>(m.subgroup.rank()))
        throw std::invalid_argument("module has " + std::to_string(m.ops.size()) + " operators for a rank-" +
                                    std::to_string(m.subgroup.rank()) + " subgroup");
    GradedMap t(m.space, m.space, 1);
    for (std::size_t j = 0; j < m.ops.size(); ++j)
        if ((f.coords >> j) & 1U)
            t = t + m.ops[j];
    return {m.space, t};
}

QuotientObject bar_all(const HWModule& m)
{
    GradedSubspace ideal(m.space);
    for (const auto& op : m.ops)
        ideal = sum(ideal, image(op));
    return make_quotient(m.space, ideal);
}

std::vector<std::string> ShortExactSeq::violations() const
{
    std::vector<std::string> out;
    try {
        a.validate();
        b.validate();
        c.validate();
    } catch (const std::exception& e) {
        out.emplace_back(e.what());
        return out;
    }
    if (inj.shift() != 0 || surj.shift() != 0)
        out.emplace_back("maps must preserve degree");
    if (inj.source_dims() != dims_vector(a.space) || inj.target_dims() != dims_vector(b.space))
        out.emplace_back("injection has wrong source or target");
    if (surj.source_dims() != dims_vector(b.space) || surj.target_dims() != dims_vector(c.space))
        out.emplace_back("surjection has wrong source or target");
    if (!out.empty())
        return out;
    for (int d : commutativity_failures(inj, a.t, b.t, inj))
        out.push_back("injection does not commute with t in degree " + std::to_string(d));
    for (int d : commutativity_failures(surj, b.t, c.t, surj))
        out.push_back("surjection does not commute with t in degree " + std::to_string(d));
    for (int d : injectivity_failures(inj))
        out.push_back("injection is not injective in degree " + std::to_string(d));
    for (int d : surjectivity_failures(surj))
        out.push_back("surjection is not surjective in degree " + std::to_string(d));
    for (int d : exactness_failures(inj, surj))
        out.push_back("image of injection differs from kernel of surjection in degree " + std::to_string(d));
    return out;
}

TorLes tor_les(const ShortExactSeq& s)
{
    if (auto v = s.violations(); !v.empty()) {
        std::string msg = "invalid short exact sequence:";
        for (const auto& x : v)
            msg += " " + x + ";";
        throw InvalidSequence(msg);
    }
    TorLes les{tau(s.a), tau(s.b), tau(s.c), bar(s.a), bar(s.b), bar(s.c), {}, {}, {}, {}, {}, {}};
    les.tau_ab = *restrict_map(s.inj, les.tau_a, les.tau_b);
    les.tau_bc = *restrict_map(s.surj, les.tau_b, les.tau_c);
    les.bar_ab = *induced_map(s.inj, les.bar_a, les.bar_b);
    les.bar_bc = *induced_map(s.surj, les.bar_b, les.bar_c);

    les.delta = GradedMap(les.tau_c.space, les.bar_a.space, 1);
    for (int k = 0; k < les.tau_c.space.degree_bound(); ++k) {
        const auto& cs = les.tau_c.sub.part(k).basis();
        for (std::size_t j = 0; j < cs.size(); ++j) {
            const auto lift = gf2::solve(s.surj.block(k), cs[j]);
            const auto tb = s.b.t.apply(k, *lift);
            const auto a = gf2::solve(s.inj.block(k + 1), tb);
            if (!a) {
                les.findings.push_back({"delta", k, "t applied to a lift leaves the image of the injection"});
                continue;
            }
            const auto cls = les.bar_a.projection.apply(k + 1, *a);
            for (auto i : cls.to_indices())
                les.delta.block(k).set(i, j);
        }
        // Lift independence: lifts differ by elements of ker(surj) = inj(A).
        for (const auto& z : gf2::kernel_basis(s.surj.block(k))) {
            const auto a = gf2::solve(s.inj.block(k + 1), s.b.t.apply(k, z));
            if (!a || !les.bar_a.projection.apply(k + 1, *a).is_zero())
                les.findings.push_back({"delta", k, "connecting map depends on the chosen lift"});
        }
    }

    for (int d : injectivity_failures(les.tau_ab))
        les.findings.push_back({"tauA", d, "tauA -> tauB is not injective"});
    for (int d : exactness_failures(les.tau_ab, les.tau_bc))
        les.findings.push_back({"tauB", d, "image(tauA) != kernel(tauB -> tauC)"});
    for (int d : exactness_failures(les.tau_bc, les.delta))
        les.findings.push_back({"tauC", d, "image(tauB) != kernel(delta)"});
    for (int d : exactness_failures(les.delta, les.bar_ab))
        les.findings.push_back({"barA", d, "image(delta) != kernel(barA -> barB)"});
    for (int d : exactness_failures(les.bar_ab, les.bar_bc))
        les.findings.push_back({"barB", d, "image(barA) != kernel(barB -> barC)"});
    for (int d : surjectivity_failures(les.bar_bc))
        les.findings.push_back({"barC", d, "barB -> barC is not surjective"});
    return les;
}

}  // namespace gysin
