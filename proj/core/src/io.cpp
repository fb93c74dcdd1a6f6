#include "gysin/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gysin {

using nlohmann::json;

namespace {

std::string key_text(const json& rows) { return rows.dump(); }

Subgroup read_key(int rank, const json& rows)
{
    if (!rows.is_array())
        throw ParseError("subgroup key must be an array of row bitmasks, got " + rows.dump());
    std::vector<Mask> masks;
    for (const auto& r : rows) {
        if (!r.is_number_unsigned() || r.get<std::uint64_t>() >= (std::uint64_t{1} << rank))
            throw ParseError("non-canonical subgroup key " + key_text(rows) + ": row " + r.dump() +
                             " is not a bitmask over " + std::to_string(rank) + " coordinates");
        masks.push_back(r.get<Mask>());
    }
    try {
        return subgroup_from_key(rank, masks);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::size_t read_index(const json& v, std::size_t bound, const std::string& what)
{
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= bound)
        throw ParseError(what + ": index " + v.dump() + " out of range 0.." + std::to_string(bound) + "-1");
    return v.get<std::size_t>();
}

GradedAlgebra read_algebra(int rank, const json& j)
{
    const Subgroup w = read_key(rank, j.at("key"));
    const std::string where = "subgroup " + w.key();
    std::vector<BasisElement> basis;
    for (const auto& b : j.at("basis")) {
        const int degree = b.at("degree").get<int>();
        if (degree < 0)
            throw ParseError(where + ": negative degree for '" + b.at("name").get<std::string>() + "'");
        basis.push_back({b.at("name").get<std::string>(), degree});
    }
    GradedSpace space(std::move(basis));
    const std::size_t n = space.total_dim();
    const std::size_t unit = read_index(j.at("unit"), n, where + " unit");
    GradedAlgebra a = GradedAlgebra::with_space(w, std::move(space), unit);

    std::vector<bool> seen(n * n, false);
    for (const auto& t : j.at("mul")) {
        if (!t.is_array() || t.size() != 3 || !t[2].is_array())
            throw ParseError(where + ": mul entry " + t.dump() + " is not [i, j, [k, ...]]");
        const auto i = read_index(t[0], n, where + " mul");
        const auto k = read_index(t[1], n, where + " mul");
        if (seen[i * n + k])
            throw ParseError(where + ": duplicate mul entry for (" + std::to_string(i) + ", " + std::to_string(k) + ")");
        seen[i * n + k] = true;
        gf2::BitVec v(n);
        for (const auto& r : t[2])
            v.flip(read_index(r, n, where + " mul result"));
        a.set_product(i, k, std::move(v));
    }

    const auto& h = j.at("h_images");
    if (!h.is_array() || h.size() != static_cast<std::size_t>(w.rank()))
        throw ParseError(where + ": expected " + std::to_string(w.rank()) + " h_images, got " +
                         std::to_string(h.is_array() ? h.size() : 0));
    for (std::size_t g = 0; g < h.size(); ++g) {
        gf2::BitVec v(n);
        for (const auto& r : h[g]) {
            const auto idx = read_index(r, n, where + " h_images");
            if (a.space.element(idx).degree != 1)
                throw ParseError(where + ": h_images[" + std::to_string(g) + "] names '" + a.space.element(idx).name +
                                 "' of degree " + std::to_string(a.space.element(idx).degree) + ", expected degree 1");
            v.flip(idx);
        }
        a.h_images[g] = std::move(v);
    }
    return a;
}

gf2::Matrix read_matrix(const json& m, std::size_t rows, std::size_t cols, const std::string& what)
{
    if (!m.is_array() || m.size() != rows)
        throw ParseError(what + " has " + std::to_string(m.is_array() ? m.size() : 0) + " rows, expected " +
                         std::to_string(rows));
    gf2::Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!m[r].is_array() || m[r].size() != cols)
            throw ParseError(what + " row " + std::to_string(r) + " has " +
                             std::to_string(m[r].is_array() ? m[r].size() : 0) + " entries, expected " +
                             std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& v = m[r][c];
            if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
                throw ParseError(what + " entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is " +
                                 v.dump() + ", expected 0 or 1");
            if (v.get<int>() == 1)
                out.set(r, c);
        }
    }
    return out;
}

json write_matrix(const gf2::Matrix& m)
{
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.get(r, c) ? 1 : 0);
        out.push_back(std::move(row));
    }
    return out;
}

GysinFunctor parse_json(const json& doc)
{
    const int rank = doc.at("rank").get<int>();
    if (rank < 0 || rank > kMaxLatticeRank)
        throw ParseError("rank must be in 0.." + std::to_string(kMaxLatticeRank) + ", got " + std::to_string(rank));
    GysinFunctor f(rank);
    const auto& subs = f.lattice.subgroups();
    const auto& pairs = f.lattice.covering_pairs();

    std::vector<std::optional<GradedAlgebra>> algebras(subs.size());
    for (const auto& s : doc.at("subgroups")) {
        GradedAlgebra a = read_algebra(rank, s);
        const auto i = *f.lattice.index_of(a.subgroup);
        if (algebras[i])
            throw ParseError("duplicate subgroup key " + a.subgroup.key());
        algebras[i] = std::move(a);
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!algebras[i])
            throw ParseError("incomplete lattice data: missing subgroup " + subs[i].key());
        f.algebras.push_back(std::move(*algebras[i]));
    }

    std::vector<std::optional<GysinEdge>> edges(pairs.size());
    for (const auto& e : doc.at("edges")) {
        const Subgroup u = read_key(rank, e.at("sub_key"));
        const Subgroup w = read_key(rank, e.at("sup_key"));
        const auto pi = f.lattice.pair_index(u, w);
        const std::string where = "edge " + u.key() + "<" + w.key();
        if (!pi)
            throw ParseError(where + " is not a covering pair");
        if (edges[*pi])
            throw ParseError("duplicate " + where);
        const auto& ku = f.algebra(u).space;
        const auto& kw = f.algebra(w).space;
        const auto rho = read_matrix(e.at("rho"), ku.total_dim(), kw.total_dim(), where + ": rho");
        const auto psi = read_matrix(e.at("psi"), kw.total_dim(), ku.total_dim(), where + ": psi");
        try {
            edges[*pi] = GysinEdge{pairs[*pi], GradedMap::from_dense(rho, kw, ku, 0), {}};
        } catch (const GradingError& g) {
            throw ParseError(where + ": rho " + g.what());
        }
        try {
            edges[*pi]->psi = GradedMap::from_dense(psi, ku, kw, 0);
        } catch (const GradingError& g) {
            throw ParseError(where + ": psi " + g.what());
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!edges[i])
            throw ParseError("incomplete lattice data: missing edge " + pair_label(pairs[i]));
        f.edges.push_back(std::move(*edges[i]));
    }
    return f;
}

}  // namespace

GysinFunctor parse_functor(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed file: ") + e.what());
    }
    try {
        return parse_json(doc);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed functor data: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

GysinFunctor parse_functor_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_functor(ss.str());
}

std::string emit_functor(const GysinFunctor& f)
{
    json doc;
    doc["rank"] = f.rank();
    doc["subgroups"] = json::array();
    for (const auto& a : f.algebras) {
        json s;
        s["key"] = a.subgroup.rows();
        s["basis"] = json::array();
        for (const auto& b : a.space.basis())
            s["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
        s["unit"] = a.unit;
        s["mul"] = json::array();
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (!a.product(i, j).is_zero())
                    s["mul"].push_back(json::array({i, j, a.product(i, j).to_indices()}));
        s["h_images"] = json::array();
        for (const auto& h : a.h_images)
            s["h_images"].push_back(h.to_indices());
        doc["subgroups"].push_back(std::move(s));
    }
    doc["edges"] = json::array();
    for (const auto& e : f.edges) {
        const auto& ku = f.algebra(e.pair.sub).space;
        const auto& kw = f.algebra(e.pair.sup).space;
        json j;
        j["sub_key"] = e.pair.sub.rows();
        j["sup_key"] = e.pair.sup.rows();
        j["rho"] = write_matrix(e.rho.to_dense(kw, ku));
        j["psi"] = write_matrix(e.psi.to_dense(ku, kw));
        doc["edges"].push_back(std::move(j));
    }
    return doc.dump(1) + "\n";
}

void write_functor_file(const GysinFunctor& f, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << emit_functor(f);
    if (!out)
        throw std::runtime_error("error while writing " + path);
}

}  // namespace gysin
