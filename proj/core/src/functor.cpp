#include "gysin/functor.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "gysin/modules.hpp"

namespace gysin {

const GradedAlgebra& GysinFunctor::algebra(const Subgroup& w) const
{
    const auto i = lattice.index_of(w);
    if (!i || *i >= algebras.size())
        throw IncompleteLattice("incomplete lattice data: no algebra for subgroup " + w.key());
    return algebras[*i];
}

const GysinEdge& GysinFunctor::edge(const Subgroup& sub, const Subgroup& sup) const
{
    const auto i = lattice.pair_index(sub, sup);
    if (!i || *i >= edges.size())
        throw IncompleteLattice("incomplete lattice data: no edge " + sub.key() + "<" + sup.key());
    return edges[*i];
}

void GysinFunctor::check_complete() const
{
    const auto& subs = lattice.subgroups();
    const auto& pairs = lattice.covering_pairs();
    if (algebras.size() != subs.size())
        throw IncompleteLattice("incomplete lattice data: " + std::to_string(algebras.size()) + " algebras for " +
                                std::to_string(subs.size()) + " subgroups");
    if (edges.size() != pairs.size())
        throw IncompleteLattice("incomplete lattice data: " + std::to_string(edges.size()) + " edges for " +
                                std::to_string(pairs.size()) + " covering pairs");
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (algebras[i].subgroup != subs[i])
            throw IncompleteLattice("incomplete lattice data: algebra " + std::to_string(i) + " is attached to " +
                                    algebras[i].subgroup.key() + ", expected " + subs[i].key());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& e = edges[i];
        if (e.pair.sub != pairs[i].sub || e.pair.sup != pairs[i].sup)
            throw IncompleteLattice("incomplete lattice data: edge " + std::to_string(i) + " is " +
                                    pair_label(e.pair) + ", expected " + pair_label(pairs[i]));
        const auto ku = dims_vector(algebra(e.pair.sub).space);
        const auto kw = dims_vector(algebra(e.pair.sup).space);
        if (e.rho.source_dims() != kw || e.rho.target_dims() != ku || e.rho.shift() != 0)
            throw std::invalid_argument("rho on " + pair_label(e.pair) + " does not map K_W to K_U");
        if (e.psi.source_dims() != ku || e.psi.target_dims() != kw || e.psi.shift() != 0)
            throw std::invalid_argument("psi on " + pair_label(e.pair) + " does not map K_U to K_W");
    }
}

std::string pair_label(const CoveringPair& p) { return p.sub.key() + "<" + p.sup.key(); }

namespace {

VerificationReport run_tasks(const std::vector<std::function<VerificationReport()>>& tasks, unsigned threads,
                             bool fail_fast)
{
    std::vector<VerificationReport> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            if (stop)
                return;
            results[i] = tasks[i]();
            if (fail_fast && !results[i].passed())
                stop = true;
        }
    };
    const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    VerificationReport out;
    for (auto& r : results)
        out.merge(std::move(r));
    return out;
}

// Image of the degree-one generator dual to row j of W, restricted to U and
// expressed in K_U.
gf2::BitVec restricted_generator(const GradedAlgebra& ku, const Subgroup& w, std::size_t j)
{
    const H1Element r = restrict_h1(H1Element{w, Mask{1} << j}, ku.subgroup);
    gf2::BitVec out(ku.dim());
    for (std::size_t i = 0; i < ku.h_images.size(); ++i)
        if ((r.coords >> i) & 1U)
            out ^= ku.h_images[i];
    return out;
}

std::string elem_name(const GradedAlgebra& a, std::size_t i) { return a.space.element(i).name; }

}  // namespace

TModule gysin_t(const GysinFunctor& f, const GysinEdge& e)
{
    return restrict_to_t(module_of(f.algebra(e.pair.sup)), e.pair.quotient_functional);
}

VerificationReport verify_edge_exactness(const GysinFunctor& f, const GysinEdge& e, const VerifyOptions& opts)
{
    VerificationReport r;
    const std::string loc = pair_label(e.pair);
    const GradedAlgebra& kw = f.algebra(e.pair.sup);
    const GradedAlgebra& ku = f.algebra(e.pair.sub);
    const auto rho = e.rho.to_dense(kw.space, ku.space);
    const auto psi = e.psi.to_dense(ku.space, kw.space);

    // rho as a map of unital algebras
    if (rho * kw.unit_vector() != ku.unit_vector())
        r.fail("edge.rho_unit", loc, 0, "rho does not send the unit to the unit");
    if (!opts.rho_module_only) {
        std::vector<gf2::BitVec> images;
        for (std::size_t i = 0; i < kw.dim(); ++i)
            images.push_back(rho * gf2::BitVec::unit(kw.dim(), i));
        for (std::size_t i = 0; i < kw.dim(); ++i)
            for (std::size_t j = 0; j < kw.dim(); ++j)
                if (rho * kw.product(i, j) != ku.multiply(images[i], images[j]))
                    r.fail("edge.rho_multiplicative", loc,
                           kw.space.element(i).degree + kw.space.element(j).degree,
                           "rho(" + elem_name(kw, i) + " * " + elem_name(kw, j) + ") != rho(" + elem_name(kw, i) +
                               ") * rho(" + elem_name(kw, j) + ")");
    }
    // H*W-linearity of rho and psi, with K_U an H*W-module through i*
    for (std::size_t j = 0; j < kw.h_images.size(); ++j) {
        const auto& h = kw.h_images[j];
        const auto hu = restricted_generator(ku, e.pair.sup, j);
        for (std::size_t x = 0; x < kw.dim(); ++x) {
            const auto ex = gf2::BitVec::unit(kw.dim(), x);
            if (rho * kw.multiply(h, ex) != ku.multiply(hu, rho * ex))
                r.fail("edge.rho_linear", loc, kw.space.element(x).degree + 1,
                       "rho(h" + std::to_string(j) + " * " + elem_name(kw, x) + ") != i*(h" + std::to_string(j) +
                           ") * rho(" + elem_name(kw, x) + ")");
        }
        for (std::size_t y = 0; y < ku.dim(); ++y) {
            const auto ey = gf2::BitVec::unit(ku.dim(), y);
            if (psi * ku.multiply(hu, ey) != kw.multiply(h, psi * ey))
                r.fail("edge.psi_linear", loc, ku.space.element(y).degree + 1,
                       "psi(i*(h" + std::to_string(j) + ") * " + elem_name(ku, y) + ") != h" + std::to_string(j) +
                           " * psi(" + elem_name(ku, y) + ")");
        }
    }

    const TModule t = gysin_t(f, e);
    for (int k : exactness_failures(t.t, e.rho))
        r.fail("gysin.ker_rho", loc, k, "image(t) != kernel(rho)");
    for (int k : exactness_failures(e.rho, e.psi))
        r.fail("gysin.ker_psi", loc, k, "image(rho) != kernel(psi)");
    for (int k : exactness_failures(e.psi, t.t))
        r.fail("gysin.ker_t", loc, k, "image(psi) != kernel(t)");
    return r;
}

BarSequence derive_bar_sequence(const GysinFunctor& f, const GysinEdge& e)
{
    const std::string loc = pair_label(e.pair);
    const GradedAlgebra& ku = f.algebra(e.pair.sub);
    const TModule t = gysin_t(f, e);
    BarSequence s{bar(t), tau(t), {}, GradedMap(ku.space, GradedSpace{}, 0), {}};

    for (int k = 0; k < s.bar.sub.degree_bound(); ++k)
        for (const auto& v : s.bar.sub.part(k).basis())
            if (!e.rho.apply(k, v).is_zero()) {
                s.report.fail("bar.rho_kills_t", loc, k, "rho does not vanish on t * K_W");
                break;
            }
    s.rho_bar = compose(e.rho, s.bar.section);

    s.psi_hat = GradedMap(ku.space, s.tau.space, 0);
    for (int k = 0; k < ku.space.degree_bound(); ++k)
        for (std::size_t j = 0; j < ku.space.dim(k); ++j) {
            const auto c = s.tau.coords(k, e.psi.apply(k, gf2::BitVec::unit(ku.space.dim(k), j)));
            if (!c) {
                s.report.fail("bar.psi_in_tau", loc, k,
                              "psi(" + ku.space.element(ku.space.indices_in_degree(k)[j]).name +
                                  ") is not killed by t");
                continue;
            }
            for (auto i : c->to_indices())
                s.psi_hat.block(k).set(i, j);
        }

    for (int k : injectivity_failures(s.rho_bar))
        s.report.fail("bar.injective", loc, k, "bar(K_W) -> K_U is not injective");
    for (int k : exactness_failures(s.rho_bar, s.psi_hat))
        s.report.fail("bar.middle", loc, k, "image(bar(K_W)) != kernel(K_U -> tau(K_W))");
    for (int k : surjectivity_failures(s.psi_hat))
        s.report.fail("bar.surjective", loc, k, "K_U -> tau(K_W) is not surjective");
    return s;
}

VerificationReport verify_path_independence(const GysinFunctor& f)
{
    VerificationReport r;
    const auto& subs = f.lattice.subgroups();
    const std::size_t n = subs.size();
    // composite[w][u] = restriction K_W -> K_U along the first cover chain
    std::vector<std::vector<std::optional<GradedMap>>> composite(n, std::vector<std::optional<GradedMap>>(n));
    for (const auto& e : f.edges)
        composite[*f.lattice.index_of(e.pair.sup)][*f.lattice.index_of(e.pair.sub)] = e.rho;

    for (int codim = 2; codim <= f.rank(); ++codim)
        for (std::size_t wi = 0; wi < n; ++wi)
            for (std::size_t ui = 0; ui < n; ++ui) {
                const Subgroup& w = subs[wi];
                const Subgroup& u = subs[ui];
                if (w.rank() - u.rank() != codim || !w.contains(u))
                    continue;
                std::optional<GradedMap> first;
                std::string first_via;
                for (std::size_t xi = 0; xi < n; ++xi) {
                    const Subgroup& x = subs[xi];
                    if (x.rank() != u.rank() + 1 || !x.contains(u) || !w.contains(x))
                        continue;
                    GradedMap c = compose(f.edge(u, x).rho, *composite[wi][xi]);
                    if (!first) {
                        first = std::move(c);
                        first_via = x.key();
                        continue;
                    }
                    for (int k : commutativity_failures(f.edge(u, x).rho, *composite[wi][xi], *first,
                                                        GradedMap::identity(f.algebra(w).space)))
                        r.fail("functor.path", u.key() + "<" + w.key(), k,
                               "restriction through " + x.key() + " differs from restriction through " + first_via);
                }
                composite[wi][ui] = std::move(first);
            }
    return r;
}

SubgroupInvariants subgroup_invariants(const GradedAlgebra& a)
{
    SubgroupInvariants s;
    s.key = a.subgroup.key();
    s.rank = a.subgroup.rank();
    s.total_dim = a.space.total_dim();
    if (!a.space.is_zero()) {
        s.norm = static_cast<int>(norm(a.space));
        s.connected = is_connected(a.space);
        s.biconnected = is_biconnected(a.space);
    }
    return s;
}

namespace {

std::vector<Finding> biconnectivity_alarms(const GysinFunctor& f, const std::vector<SubgroupInvariants>& rows)
{
    std::vector<Finding> out;
    if (rows.empty() || !rows.front().biconnected)
        return out;
    const int n0 = rows.front().norm;
    for (const auto& row : rows)
        if (!row.biconnected || row.norm != n0)
            out.push_back({"invariants.biconnected", row.key, row.norm,
                           "counterexample to Lemma 2.3.2: K_0 is bi-connected of norm " + std::to_string(n0) +
                               " but this algebra is " + (row.biconnected ? "bi-connected" : "not bi-connected") +
                               " of norm " + std::to_string(row.norm),
                           Severity::alarm});
    (void)f;
    return out;
}

}  // namespace

VerificationReport verify_functor(const GysinFunctor& f, const VerifyOptions& opts)
{
    f.check_complete();
    std::vector<std::function<VerificationReport()>> tasks;
    for (const auto& a : f.algebras)
        tasks.emplace_back([&a] { return verify_algebra(a); });
    for (const auto& e : f.edges)
        tasks.emplace_back([&f, &e, &opts] {
            VerificationReport r;
            try {
                r = verify_edge_exactness(f, e, opts);
                if (r.passed())
                    r.merge(derive_bar_sequence(f, e).report);
            } catch (const std::exception& ex) {
                // Malformed algebras (e.g. generator images outside degree 1)
                // surface here; verify_algebra reports the cause.
                r.fail("edge.structure", pair_label(e.pair), -1, ex.what());
            }
            return r;
        });
    tasks.emplace_back([&f] { return verify_path_independence(f); });

    VerificationReport r = run_tasks(tasks, opts.threads, opts.fail_fast);
    for (const auto& a : f.algebras)
        r.invariants.push_back(subgroup_invariants(a));
    if (r.passed())
        for (auto& alarm : biconnectivity_alarms(f, r.invariants))
            r.add(std::move(alarm));
    r.sort();
    return r;
}

InvariantsTable invariants_report(const GysinFunctor& f)
{
    InvariantsTable t;
    for (const auto& a : f.algebras)
        t.rows.push_back(subgroup_invariants(a));
    for (const auto& e : f.edges) {
        const TModule m = gysin_t(f, e);
        t.pairs.push_back({e.pair.sub.key(), e.pair.sup.key(), bar(m).space.dims(), tau(m).space.dims()});
    }
    t.alarms = biconnectivity_alarms(f, t.rows);
    return t;
}

EvenDimensionVerdict check_even_dimension(const GysinFunctor& f)
{
    EvenDimensionVerdict v;
    v.dim = f.bottom().dim();
    v.applicable = f.rank() >= 1;
    v.even = v.dim % 2 == 0;
    if (v.applicable && !v.even)
        v.label = "counterexample to Prop. 2.3.3";
    return v;
}

namespace {

void require_top(const GysinFunctor& f, const Subgroup& w)
{
    if (w != f.lattice.top())
        throw std::invalid_argument("obstructions are evaluated at the top subgroup " + f.lattice.top().key() +
                                    ", got " + w.key());
}

}  // namespace

ObstructionVerdict augmentation_obstruction(const GysinFunctor& f, const Subgroup& w)
{
    require_top(f, w);
    ObstructionVerdict v;
    v.applicable = true;
    const auto q = bar_all(module_of(f.algebra(w)));
    v.value = static_cast<long long>(q.space.total_dim());
    v.bound = 1;
    v.triggered = v.value == 1;
    v.detail = "K_W modulo the augmentation ideal has dimension " + std::to_string(v.value);
    return v;
}

ObstructionVerdict unit_norm_obstruction(const GysinFunctor& f, const Subgroup& w)
{
    require_top(f, w);
    ObstructionVerdict v;
    const GradedAlgebra& k = f.algebra(w);
    v.applicable = is_biconnected(f.bottom().space);
    if (!v.applicable) {
        v.detail = "K_0 is not bi-connected";
        return v;
    }
    const auto unit = submodule_generated(module_of(k), k.unit_vector());
    v.value = static_cast<long long>(norm(unit.space));
    v.bound = static_cast<long long>(norm(k.space));
    v.triggered = v.value == v.bound;
    v.detail = "norm of the submodule generated by the unit is " + std::to_string(v.value) + ", norm of K_W is " +
               std::to_string(v.bound);
    return v;
}

ConjectureVerdict check_conjecture(const GysinFunctor& f)
{
    ConjectureVerdict v;
    const auto& k0 = f.bottom().space;
    v.total_dim = k0.total_dim();
    v.bound = std::size_t{1} << f.rank();
    v.holds = v.total_dim >= v.bound;
    switch (f.rank()) {
    case 1:
        v.hypothesis = true;
        break;
    case 2:
        v.hypothesis = !k0.is_zero() && is_connected(k0);
        break;
    case 3:
        v.hypothesis = !k0.is_zero() && is_biconnected(k0);
        break;
    default:
        v.hypothesis = false;
    }
    if (!v.holds)
        v.label = v.hypothesis ? "counterexample to Theorem 3.1" : "bound 2^rank not met";
    return v;
}

}  // namespace gysin
