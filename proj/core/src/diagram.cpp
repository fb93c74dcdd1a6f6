#include "gysin/diagram.hpp"

#include <stdexcept>

namespace gysin {

namespace {

std::string cell(int r, int c) { return "D[" + std::to_string(r) + "," + std::to_string(c) + "]"; }

int top_degree(const GradedSubspace& s)
{
    for (int k = s.degree_bound() - 1; k >= 0; --k)
        if (s.dim(k) != 0)
            return k;
    return -1;
}

GradedSubspace spanned_by(const GradedSpace& space, const GradedAlgebra& a, std::size_t global)
{
    GradedSubspace s(space);
    const int d = a.space.element(global).degree;
    s.insert(d, a.space.to_local(gf2::BitVec::unit(a.dim(), global), d));
    return s;
}

// Map bar(C) -> K_U/M' induced by rho_bar through the surjection bar(B) -> bar(C).
GradedMap descend(const GradedMap& surj, const GradedMap& f, const GradedSpace& src, const GradedSpace& tgt,
                  VerificationReport& r)
{
    GradedMap out(src, tgt, 0);
    for (int k = 0; k < src.degree_bound(); ++k) {
        for (std::size_t j = 0; j < src.dim(k); ++j) {
            const auto lift = gf2::solve(surj.block(k), gf2::BitVec::unit(src.dim(k), j));
            if (!lift) {
                r.fail("diagram.map", cell(3, 1) + "->" + cell(3, 2), k, "bar(C_W) element has no preimage in bar(K_W)");
                continue;
            }
            for (auto i : f.apply(k, *lift).to_indices())
                out.block(k).set(i, j);
        }
        for (const auto& z : gf2::kernel_basis(surj.block(k)))
            if (!f.apply(k, z).is_zero())
                r.fail("diagram.map", cell(3, 1) + "->" + cell(3, 2), k, "induced map depends on the chosen lift");
    }
    return out;
}

void check_line(VerificationReport& r, const std::string& kind, int index, const GradedMap& f, const GradedMap& g)
{
    // Cells along the line, 1-based.
    auto at = [&](int pos) { return kind == "row" ? cell(index, pos) : cell(pos, index); };
    const std::string what = kind + " " + std::to_string(index) + ": ";
    for (int k : injectivity_failures(f))
        r.fail("diagram." + kind, at(1), k, what + at(1) + " -> " + at(2) + " is not injective");
    for (int k : exactness_failures(f, g))
        r.fail("diagram." + kind, at(2), k, what + "not exact at " + at(2));
    for (int k : surjectivity_failures(g))
        r.fail("diagram." + kind, at(3), k, what + at(2) + " -> " + at(3) + " is not surjective");
}

}  // namespace

UnitDiagram build_unit_diagram(const GysinFunctor& f, const GysinEdge& e)
{
    if (e.pair.sup.rank() != 2)
        throw std::invalid_argument("diagram needs a pair below a rank-2 subgroup, got " + pair_label(e.pair));
    UnitDiagram d;
    VerificationReport& r = d.report;
    const GradedAlgebra& kw = f.algebra(e.pair.sup);
    const GradedAlgebra& ku = f.algebra(e.pair.sub);
    const HWModule mw = module_of(kw);
    const TModule b = gysin_t(f, e);

    // Unit sequence 0 -> <unit_W> -> K_W -> C_W -> 0 as F2[t]-modules.
    const GradedSubspace unit_w = closure(mw, spanned_by(kw.space, kw, kw.unit));
    const SubObject a = make_sub(kw.space, unit_w);
    const TModule ta{a.space, *restrict_map(b.t, a, a)};
    const QuotientObject c = make_quotient(kw.space, unit_w);
    const TModule tc{c.space, *induced_map(b.t, c, c)};
    const TorLes les = tor_les(ShortExactSeq{ta, b, tc, a.inclusion, c.projection});
    d.les_findings = les.findings;
    for (const auto& lf : les.findings)
        r.fail(lf.spot == "delta" ? "diagram.delta" : "diagram.les", "tor sequence at " + lf.spot, lf.degree,
               lf.message);

    BarSequence mid = derive_bar_sequence(f, e);
    r.merge(mid.report);

    // Left column.
    const SubObject im_j = make_sub(mid.bar.space, image(les.bar_ab));
    // Middle column.
    const HWModule mu = module_of(ku);
    GradedSubspace m_prime = closure(mu, spanned_by(ku.space, ku, ku.unit));
    const int norm_u = ku.space.is_zero() ? -1 : static_cast<int>(norm(ku.space));
    if (top_degree(m_prime) < norm_u) {
        // First generator, in bar order then basis order, whose submodule reaches the norm.
        std::vector<std::size_t> candidates;
        const auto gens = bar_all(mu);
        for (int k = 0; k < gens.space.degree_bound(); ++k)
            for (std::size_t j = 0; j < gens.space.dim(k); ++j)
                for (auto i : gens.section.apply(k, gf2::BitVec::unit(gens.space.dim(k), j)).to_indices())
                    candidates.push_back(ku.space.indices_in_degree(k)[i]);
        for (std::size_t g = 0; g < ku.dim(); ++g)
            candidates.push_back(g);
        for (auto g : candidates) {
            const auto grown = closure(mu, sum(m_prime, spanned_by(ku.space, ku, g)));
            if (top_degree(grown) == norm_u) {
                m_prime = grown;
                break;
            }
        }
    }
    const SubObject mp = make_sub(ku.space, m_prime);
    const QuotientObject ku_mp = make_quotient(ku.space, m_prime);
    // Right column.
    const GradedSubspace psi_m = image_of(mid.psi_hat, m_prime);
    const SubObject psi_mp = make_sub(mid.tau.space, psi_m);
    const QuotientObject q = make_quotient(mid.tau.space, psi_m);

    d.cells = {{{DiagramCell{"Im(jbar)", im_j.space}, DiagramCell{"M'", mp.space}, DiagramCell{"psi(M')", psi_mp.space}},
                {DiagramCell{"bar(K_W)", mid.bar.space}, DiagramCell{"K_U", ku.space},
                 DiagramCell{"tau(K_W)", mid.tau.space}},
                {DiagramCell{"bar(C_W)", les.bar_c.space}, DiagramCell{"K_U/M'", ku_mp.space},
                 DiagramCell{"Q", q.space}}}};

    // Row maps.
    auto top_left = restrict_map(mid.rho_bar, im_j, mp);
    if (!top_left)
        r.fail("diagram.map", cell(1, 1) + "->" + cell(1, 2), -1, "rho does not carry Im(jbar) into M'");
    const GradedMap row1a = top_left ? *top_left : GradedMap(im_j.space, mp.space, 0);
    const GradedMap row1b = *restrict_map(mid.psi_hat, mp, psi_mp);
    const GradedMap row3a = descend(les.bar_bc, compose(ku_mp.projection, mid.rho_bar), les.bar_c.space,
                                    ku_mp.space, r);
    const GradedMap row3b = *induced_map(mid.psi_hat, ku_mp, q);
    const GradedMap rows[3][2] = {{row1a, row1b}, {mid.rho_bar, mid.psi_hat}, {row3a, row3b}};
    // Column maps.
    const GradedMap cols[3][2] = {
        {im_j.inclusion, les.bar_bc}, {mp.inclusion, ku_mp.projection}, {psi_mp.inclusion, q.projection}};

    for (int i = 0; i < 3; ++i) {
        check_line(r, "row", i + 1, rows[i][0], rows[i][1]);
        check_line(r, "column", i + 1, cols[i][0], cols[i][1]);
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            // right then down versus down then right, from D[i+1, j+1]
            for (int k : commutativity_failures(cols[j + 1][i], rows[i][j], rows[i + 1][j], cols[j][i]))
                r.fail("diagram.square", "square " + cell(i + 1, j + 1) + "-" + cell(i + 2, j + 2), k,
                       "square does not commute");
        }

    d.jordan.emplace_back("C_W", jordan_type(tc));
    d.jordan.emplace_back("<unit_W>", jordan_type(ta));
    if (ku.subgroup.rank() == 1) {
        const TModule tu = restrict_to_t(mu, H1Element{ku.subgroup, 1});
        d.jordan.emplace_back("M'", jordan_type(TModule{mp.space, *restrict_map(tu.t, mp, mp)}));
        d.jordan.emplace_back("K_U/M'", jordan_type(TModule{ku_mp.space, *induced_map(tu.t, ku_mp, ku_mp)}));
    }
    r.sort();
    return d;
}

}  // namespace gysin
