#include "cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gysin/builders.hpp"
#include "gysin/diagram.hpp"
#include "gysin/functor.hpp"
#include "gysin/io.hpp"
#include "gysin/oracle.hpp"

namespace gysin::cli {

using nlohmann::json;

namespace {

struct Globals {
    bool json = false;
    std::uint64_t seed = 1;
    std::optional<int> max_dim;
    unsigned threads = 1;
};

json finding_json(const Finding& f)
{
    return {{"check", f.check},
            {"location", f.location},
            {"degree", f.degree},
            {"message", f.message},
            {"severity", to_string(f.severity)}};
}

json findings_json(const std::vector<Finding>& fs)
{
    json out = json::array();
    for (const auto& f : fs)
        out.push_back(finding_json(f));
    return out;
}

json dims_json(const std::map<int, std::size_t>& dims)
{
    json out = json::object();
    for (const auto& [k, n] : dims)
        out[std::to_string(k)] = n;
    return out;
}

std::string dims_text(const std::map<int, std::size_t>& dims)
{
    std::string s = "{";
    bool first = true;
    for (const auto& [k, n] : dims) {
        s += (first ? "" : ", ") + std::to_string(k) + ":" + std::to_string(n);
        first = false;
    }
    return s + "}";
}

json invariants_json(const std::vector<SubgroupInvariants>& rows)
{
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"subgroup", r.key},
                       {"rank", r.rank},
                       {"total_dim", r.total_dim},
                       {"norm", r.norm},
                       {"connected", r.connected},
                       {"biconnected", r.biconnected}});
    return out;
}

void print_findings(std::ostream& out, const std::vector<Finding>& fs)
{
    for (const auto& f : fs) {
        out << "  [" << f.check << "] " << f.location;
        if (f.degree >= 0)
            out << " degree " << f.degree;
        out << ": " << f.message;
        if (f.severity != Severity::failure)
            out << " (" << to_string(f.severity) << ")";
        out << "\n";
    }
}

void print_invariants(std::ostream& out, const std::vector<SubgroupInvariants>& rows)
{
    for (const auto& r : rows)
        out << "  K_" << r.key << ": dim " << r.total_dim << ", norm " << r.norm
            << (r.biconnected ? ", bi-connected" : r.connected ? ", connected" : "") << "\n";
}

VerificationReport run_verify(const GysinFunctor& f, const Globals& g, bool rho_module_only = false,
                              bool fail_fast = false)
{
    VerifyOptions opts;
    opts.threads = g.threads;
    opts.rho_module_only = rho_module_only;
    opts.fail_fast = fail_fast;
    return verify_functor(f, opts);
}

// Prints a failing verification in the requested format; returns exit code 1.
int report_failed_precondition(const std::string& command, const VerificationReport& r, const Globals& g,
                               std::ostream& out)
{
    if (g.json) {
        out << json{{"command", command}, {"verdict", "fail"}, {"reason", "functor does not verify"},
                    {"findings", findings_json(r.findings)}}
                   .dump(2)
            << "\n";
    } else {
        out << "FAIL " << command << ": functor does not verify (" << r.failure_count() << " findings)\n";
        print_findings(out, r.findings);
    }
    return kExitCheckFailed;
}

int cmd_verify(const std::string& path, const Globals& g, bool rho_module_only, bool fail_fast, std::ostream& out)
{
    const GysinFunctor f = parse_functor_file(path);
    const auto r = run_verify(f, g, rho_module_only, fail_fast);
    if (g.json) {
        out << json{{"command", "verify"},
                    {"verdict", r.passed() ? "pass" : "fail"},
                    {"rank", f.rank()},
                    {"findings", findings_json(r.findings)},
                    {"invariants", invariants_json(r.invariants)}}
                   .dump(2)
            << "\n";
    } else {
        out << (r.passed() ? "PASS" : "FAIL") << " verify: rank " << f.rank() << ", " << f.algebras.size()
            << " subgroups, " << f.edges.size() << " covering pairs, " << r.failure_count() << " findings\n";
        print_findings(out, r.findings);
        print_invariants(out, r.invariants);
    }
    return r.passed() ? kExitPass : kExitCheckFailed;
}

int cmd_invariants(const std::string& path, const Globals& g, std::ostream& out)
{
    const GysinFunctor f = parse_functor_file(path);
    const auto r = run_verify(f, g);
    if (!r.passed())
        return report_failed_precondition("invariants", r, g, out);
    const auto t = invariants_report(f);
    const auto even = check_even_dimension(f);
    const bool ok = t.alarms.empty() && (!even.applicable || even.even);
    if (g.json) {
        json pairs = json::array();
        for (const auto& p : t.pairs)
            pairs.push_back({{"sub", p.sub}, {"sup", p.sup}, {"bar_dims", dims_json(p.bar_dims)},
                             {"tau_dims", dims_json(p.tau_dims)}});
        out << json{{"command", "invariants"},
                    {"verdict", ok ? "pass" : "fail"},
                    {"subgroups", invariants_json(t.rows)},
                    {"pairs", pairs},
                    {"even_dimension",
                     {{"applicable", even.applicable}, {"dim", even.dim}, {"even", even.even}, {"label", even.label}}},
                    {"alarms", findings_json(t.alarms)}}
                   .dump(2)
            << "\n";
    } else {
        out << (ok ? "PASS" : "FAIL") << " invariants\n";
        print_invariants(out, t.rows);
        for (const auto& p : t.pairs)
            out << "  pair " << p.sub << "<" << p.sup << ": bar " << dims_text(p.bar_dims) << ", tau "
                << dims_text(p.tau_dims) << "\n";
        if (even.applicable)
            out << "  d(K_0) = " << even.dim << (even.even ? " (even)" : " (odd: " + even.label + ")") << "\n";
        print_findings(out, t.alarms);
    }
    return ok ? kExitPass : kExitCheckFailed;
}

json obstruction_json(const ObstructionVerdict& v)
{
    return {{"applicable", v.applicable}, {"triggered", v.triggered}, {"value", v.value}, {"bound", v.bound},
            {"detail", v.detail}};
}

std::string obstruction_text(const ObstructionVerdict& v)
{
    if (!v.applicable)
        return "not applicable (" + v.detail + ")";
    return std::string(v.triggered ? "TRIGGERED" : "not triggered") + " (" + v.detail + ")";
}

int cmd_obstructions(const std::string& path, const Globals& g, std::ostream& out)
{
    const GysinFunctor f = parse_functor_file(path);
    const auto r = run_verify(f, g);
    if (!r.passed())
        return report_failed_precondition("obstructions", r, g, out);
    const Subgroup& w = f.lattice.top();
    const auto aug = augmentation_obstruction(f, w);
    const auto unit = unit_norm_obstruction(f, w);
    if (g.json) {
        out << json{{"command", "obstructions"},
                    {"subgroup", w.key()},
                    {"augmentation", obstruction_json(aug)},
                    {"unit_norm", obstruction_json(unit)},
                    {"extension_obstructed", aug.triggered || unit.triggered}}
                   .dump(2)
            << "\n";
    } else {
        out << "obstructions at K_" << w.key() << "\n";
        out << "  augmentation quotient: " << obstruction_text(aug) << "\n";
        out << "  unit submodule norm:   " << obstruction_text(unit) << "\n";
        out << "  extension " << (aug.triggered || unit.triggered ? "obstructed" : "not obstructed") << "\n";
    }
    return kExitPass;
}

int cmd_conjecture(const std::string& path, const Globals& g, std::ostream& out)
{
    const GysinFunctor f = parse_functor_file(path);
    const auto r = run_verify(f, g);
    if (!r.passed())
        return report_failed_precondition("conjecture", r, g, out);
    const auto v = check_conjecture(f);
    if (g.json) {
        out << json{{"command", "conjecture"}, {"verdict", v.holds ? "pass" : "fail"}, {"rank", f.rank()},
                    {"total_dim", v.total_dim}, {"bound", v.bound}, {"holds", v.holds},
                    {"hypothesis", v.hypothesis}, {"label", v.label}}
                   .dump(2)
            << "\n";
    } else {
        out << (v.holds ? "PASS" : "FAIL") << " conjecture: d(K_0) = " << v.total_dim << ", bound 2^" << f.rank()
            << " = " << v.bound << (v.hypothesis ? ", connectivity hypothesis holds" : "");
        if (!v.label.empty())
            out << " -- " << v.label;
        out << "\n";
    }
    return v.holds ? kExitPass : kExitCheckFailed;
}

int cmd_diagram(const std::string& path, const std::string& edge, const Globals& g, std::ostream& out,
                std::ostream& err)
{
    const GysinFunctor f = parse_functor_file(path);
    if (f.rank() != 2) {
        err << "diagram-d needs a rank-2 functor, got rank " << f.rank() << "\n";
        return kExitUsage;
    }
    std::vector<const GysinEdge*> edges;
    for (const auto& e : f.edges)
        if (e.pair.sup == f.lattice.top() && (edge.empty() || pair_label(e.pair) == edge))
            edges.push_back(&e);
    if (edges.empty()) {
        err << "no covering pair " << edge << " below the top subgroup\n";
        return kExitUsage;
    }
    bool ok = true;
    json diagrams = json::array();
    for (const GysinEdge* e : edges) {
        const auto d = build_unit_diagram(f, *e);
        ok = ok && d.passed();
        if (g.json) {
            json cells = json::array();
            for (const auto& row : d.cells) {
                json r = json::array();
                for (const auto& c : row)
                    r.push_back({{"name", c.name}, {"dims", dims_json(c.space.dims())}});
                cells.push_back(r);
            }
            json jordan = json::object();
            for (const auto& [name, jt] : d.jordan)
                jordan[name] = jt.to_string();
            diagrams.push_back({{"pair", pair_label(e->pair)},
                                {"verdict", d.passed() ? "pass" : "fail"},
                                {"cells", cells},
                                {"jordan_types", jordan},
                                {"findings", findings_json(d.report.findings)}});
        } else {
            out << (d.passed() ? "PASS" : "FAIL") << " diagram " << pair_label(e->pair) << "\n";
            for (std::size_t r = 0; r < 3; ++r) {
                out << "  ";
                for (std::size_t c = 0; c < 3; ++c)
                    out << (c ? "  ->  " : "") << d.cells[r][c].name << " " << dims_text(d.cells[r][c].space.dims());
                out << "\n";
            }
            for (const auto& [name, jt] : d.jordan)
                out << "  jordan type of " << name << ": " << jt.to_string() << "\n";
            print_findings(out, d.report.findings);
        }
    }
    if (g.json)
        out << json{{"command", "diagram-d"}, {"verdict", ok ? "pass" : "fail"}, {"diagrams", diagrams}}.dump(2)
            << "\n";
    return ok ? kExitPass : kExitCheckFailed;
}

int cmd_builtin(const GysinFunctor& f, const std::string& name, const std::string& emit, std::ostream& out)
{
    if (emit.empty()) {
        out << emit_functor(f);
    } else {
        write_functor_file(f, emit);
        out << "wrote " << name << " (rank " << f.rank() << ") to " << emit << "\n";
    }
    return kExitPass;
}

int cmd_oracle_balance(const Globals& g, std::size_t random_per_dim, std::ostream& out)
{
    const int max_dim = g.max_dim.value_or(10);
    const auto start = std::chrono::steady_clock::now();
    const auto s = exhaustive_bar_tau_check(max_dim, g.seed, random_per_dim);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (g.json) {
        json failures = json::array();
        for (const auto& c : s.failures)
            failures.push_back({{"case", c.description}, {"bar_dim", c.bar_dim}, {"tau_dim", c.tau_dim},
                                {"blocks", c.blocks}});
        out << json{{"command", "oracle lemma-2-3-4"}, {"verdict", s.passed() ? "pass" : "fail"},
                    {"max_dim", s.max_dim}, {"seed", s.seed}, {"partition_cases", s.partition_cases},
                    {"random_cases", s.random_cases}, {"failures", failures}, {"seconds", secs}}
                   .dump(2)
            << "\n";
    } else {
        out << (s.passed() ? "PASS" : "FAIL") << " bar/tau balance: " << s.partition_cases << " partition cases, "
            << s.random_cases << " random cases (max_dim " << s.max_dim << ", seed " << s.seed << ")\n";
        for (const auto& c : s.failures)
            out << "  case " << c.description << ": bar " << c.bar_dim << ", tau " << c.tau_dim << ", blocks "
                << c.blocks << "\n";
    }
    return s.passed() ? kExitPass : kExitCheckFailed;
}

int cmd_oracle_les(const Globals& g, std::size_t count, std::ostream& out)
{
    const int max_dim = g.max_dim.value_or(12);
    const auto s = tor_les_sweep(g.seed, count, max_dim);
    if (g.json) {
        out << json{{"command", "oracle tor-les"}, {"verdict", s.passed() ? "pass" : "fail"}, {"seed", s.seed},
                    {"max_dim", max_dim}, {"cases", s.cases}, {"exact", s.exact}, {"failures", s.failures}}
                   .dump(2)
            << "\n";
    } else {
        out << (s.passed() ? "PASS" : "FAIL") << " tor long exact sequence: " << s.exact << "/" << s.cases
            << " exact (max_dim " << max_dim << ", seeds " << s.seed << ".." << s.seed + count - 1 << ")\n";
        for (const auto& f : s.failures)
            out << "  " << f << "\n";
    }
    return s.passed() ? kExitPass : kExitCheckFailed;
}

int cmd_oracle_lattice(const Globals& g, std::ostream& out)
{
    const int max_d = g.max_dim.value_or(3);
    if (max_d < 0 || max_d > 4)
        throw std::invalid_argument("lattice oracle needs 0 <= --max-dim <= 4");
    bool ok = true;
    json rows = json::array();
    for (int d = 0; d <= max_d; ++d) {
        const auto brute = count_subgroups_oracle(d);
        const auto lat = count_subgroups_lattice(d);
        const bool match = brute.per_rank == lat.per_rank && brute.total == lat.total &&
                           brute.covering_pairs == lat.covering_pairs;
        ok = ok && match;
        rows.push_back({{"d", d}, {"per_rank", lat.per_rank}, {"total", lat.total},
                        {"covering_pairs", lat.covering_pairs}, {"oracle_per_rank", brute.per_rank},
                        {"oracle_total", brute.total}, {"oracle_covering_pairs", brute.covering_pairs},
                        {"match", match}});
        if (!g.json) {
            out << "  d=" << d << ": subgroups " << lat.total << " (";
            for (std::size_t r = 0; r < lat.per_rank.size(); ++r)
                out << (r ? "," : "") << lat.per_rank[r];
            out << "), covering pairs " << lat.covering_pairs << (match ? "" : "  MISMATCH with brute force") << "\n";
        }
    }
    if (g.json)
        out << json{{"command", "oracle lattice"}, {"verdict", ok ? "pass" : "fail"}, {"rows", rows}}.dump(2) << "\n";
    else
        out << (ok ? "PASS" : "FAIL") << " lattice counts agree with brute force\n";
    return ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Checker for Gysin functors over elementary abelian 2-groups", "gysinck"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    int max_dim = 0;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--seed", g.seed, "Seed for randomized oracles");
    auto* max_dim_opt = app.add_option("--max-dim", max_dim, "Size bound for oracles");
    app.add_option("--threads", g.threads, "Worker threads for verification")->check(CLI::Range(1U, 256U));

    std::string file;
    bool rho_module_only = false;
    bool fail_fast = false;
    auto* verify = app.add_subcommand("verify", "Check every axiom of a functor file");
    verify->add_option("file", file, "Functor file")->required();
    verify->add_flag("--rho-module-only", rho_module_only, "Require rho to be module-linear only");
    verify->add_flag("--fail-fast", fail_fast, "Stop after the first failing check");
    auto* invariants = app.add_subcommand("invariants", "Dimensions, norms, connectivity, bar/tau dimensions");
    invariants->add_option("file", file, "Functor file")->required();
    auto* obstructions = app.add_subcommand("obstructions", "Extension obstructions at the top subgroup");
    obstructions->add_option("file", file, "Functor file")->required();
    auto* conjecture = app.add_subcommand("conjecture", "Compare d(K_0) with 2^rank");
    conjecture->add_option("file", file, "Functor file")->required();
    std::string edge;
    auto* diagram = app.add_subcommand("diagram-d", "Check the unit diagram on a rank-2 functor");
    diagram->add_option("file", file, "Functor file")->required();
    diagram->add_option("--edge", edge, "Covering pair, e.g. \"[1]<[1,2]\"; default: all pairs below the top");

    auto* builtin = app.add_subcommand("builtin", "Construct a builtin functor");
    builtin->require_subcommand(1);
    builtin->fallthrough();
    std::string emit;
    builtin->add_option("--emit", emit, "Write the functor file here instead of stdout");
    auto* example = builtin->add_subcommand("example-2-2-4-1", "Rank-one example with d(K_0) = 8");
    example->fallthrough();
    int sphere_n = 0;
    auto* sphere = builtin->add_subcommand("sphere", "Antipodal action on S^n");
    sphere->fallthrough();
    sphere->add_option("--n", sphere_n, "Sphere dimension (>= 1)")->required();
    int pm = 0, pn = 0, pp = 0;
    auto* product = builtin->add_subcommand("product-spheres", "Coordinatewise action on S^m x S^n [x S^p]");
    product->fallthrough();
    product->add_option("--m", pm, "First sphere dimension")->required();
    product->add_option("--n", pn, "Second sphere dimension")->required();
    auto* p_opt = product->add_option("--p", pp, "Optional third sphere dimension");

    auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
    oracle->require_subcommand(1);
    oracle->fallthrough();
    std::size_t random_per_dim = 100;
    auto* balance = oracle->add_subcommand("lemma-2-3-4", "bar and tau dimensions of F2[t]-modules agree");
    balance->fallthrough();
    balance->add_option("--random-per-dim", random_per_dim, "Random modules per dimension");
    std::size_t count = 200;
    auto* les = oracle->add_subcommand("tor-les", "Exactness of the bar/tau sequence of random short exact sequences");
    les->fallthrough();
    les->add_option("--count", count, "Number of random sequences");
    auto* lattice = oracle->add_subcommand("lattice", "Subgroup counts against brute force");
    lattice->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    if (max_dim_opt->count() > 0)
        g.max_dim = max_dim;

    try {
        if (verify->parsed())
            return cmd_verify(file, g, rho_module_only, fail_fast, out);
        if (invariants->parsed())
            return cmd_invariants(file, g, out);
        if (obstructions->parsed())
            return cmd_obstructions(file, g, out);
        if (conjecture->parsed())
            return cmd_conjecture(file, g, out);
        if (diagram->parsed())
            return cmd_diagram(file, edge, g, out, err);
        if (example->parsed())
            return cmd_builtin(build_reference_example(), "example-2-2-4-1", emit, out);
        if (sphere->parsed())
            return cmd_builtin(build_sphere_model(sphere_n), "sphere", emit, out);
        if (product->parsed()) {
            std::vector<int> dims{pm, pn};
            if (p_opt->count() > 0)
                dims.push_back(pp);
            return cmd_builtin(build_product_spheres(dims), "product-spheres", emit, out);
        }
        if (balance->parsed())
            return cmd_oracle_balance(g, random_per_dim, out);
        if (les->parsed())
            return cmd_oracle_les(g, count, out);
        if (lattice->parsed())
            return cmd_oracle_lattice(g, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace gysin::cli
