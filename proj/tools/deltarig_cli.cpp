#include "deltarig/factor.hpp"
#include "deltarig/invariants.hpp"
#include "deltarig/json_io.hpp"
#include "deltarig/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace deltarig;
using nlohmann::json;

// Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
enum { kOk = 0, kDomainError = 1, kUsageError = 2, kVerifyFailed = 3 };

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string render_factorization(const Factorization& f) {
    std::vector<std::string> parts;
    if (f.content != 1 || f.factors.empty()) parts.push_back(f.content.str());
    for (const auto& [p, mult] : f.factors) {
        std::string s = "(" + p.to_string() + ")";
        if (mult > 1) s += "^" + std::to_string(mult);
        parts.push_back(std::move(s));
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
    return out;
}

json profile_json(const TutteProfile& p) {
    json sizes = json::object();
    for (const auto& [size, count] : p.feasible_size_counts)
        sizes[std::to_string(size)] = count.str();
    return {{"elements", p.n_elements},
            {"sigma", p.sigma2 % 2 == 0 ? json(p.sigma2 / 2) : json(p.sigma2 / 2.0)},
            {"width", p.width},
            {"feasible_size_counts", sizes},
            {"even", p.is_even},
            {"matroid", p.is_matroid}};
}

json report_json(const VerificationReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"instance", f.instance}, {"property", f.property}, {"witness", f.witness}});
    return {{"instances", r.instance_count},
            {"failures", std::move(fails)},
            {"seconds", r.seconds},
            {"seed", r.seed}};
}

int emit_report(const VerificationReport& r) {
    std::cout << report_json(r).dump(2) << "\n";
    return r.ok() ? kOk : kVerifyFailed;
}

SubgraphMetrics subset_metrics(const RibbonGraph& g, const std::string& subset, bool full) {
    if (full) return g.metrics(g.full_edge_mask());
    std::vector<std::string> labels;
    std::istringstream is(subset);
    for (std::string part; std::getline(is, part, ',');)
        if (!part.empty()) labels.push_back(part);
    return g.metrics(g.edge_mask_of(labels));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delta-matroid Tutte polynomials, ribbon-graph polynomials, and exact "
                 "bivariate factorization"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string file, file2, poly_text, subset, ops_file;
    std::vector<std::string> elements;
    long long x0 = 0, y0 = 0;
    int max_n = 4, max_edges = 3, max_ops = 6;
    std::uint64_t seed = 0x5eed5eedULL;
    bool no_sample = false, full_suite = false;
    int v1 = 0, pos1 = 0, v2 = 0, pos2 = 0;

    auto* dm = app.add_subcommand("dm", "Delta-matroid operations");
    dm->require_subcommand(1);
    auto* dm_tutte = dm->add_subcommand("tutte", "Tutte polynomial");
    dm_tutte->add_option("file", file, "Delta-matroid JSON ('-' for stdin)")->required();
    auto* dm_beta = dm->add_subcommand("beta", "Beta invariant (coefficient of x)");
    dm_beta->add_option("file", file)->required();
    auto* dm_bry = dm->add_subcommand("brylawski", "Brylawski coefficient relations");
    dm_bry->add_option("file", file)->required();
    auto* dm_profile = dm->add_subcommand("profile", "Recover parameters from a Tutte polynomial");
    dm_profile->add_option("poly", poly_text, "Polynomial text")->required();
    auto* dm_conn = dm->add_subcommand("connected", "Direct-sum connectivity");
    dm_conn->add_option("file", file)->required();
    auto* dm_dual = dm->add_subcommand("dual", "Twist by the full ground set");
    dm_dual->add_option("file", file)->required();
    auto* dm_twist = dm->add_subcommand("twist", "Twist by a set of elements");
    dm_twist->add_option("file", file)->required();
    dm_twist->add_option("elements", elements, "Element labels");
    auto* dm_sp = dm->add_subcommand("seriesparallel", "Beta test for series-parallel");
    dm_sp->add_option("file", file)->required();

    auto* rg = app.add_subcommand("rg", "Ribbon-graph operations");
    rg->require_subcommand(1);
    auto* rg_metrics = rg->add_subcommand("metrics", "Components, rank, boundary, genus, sigma");
    rg_metrics->add_option("file", file)->required();
    rg_metrics->add_option("--subset", subset, "Comma-separated edge labels (default: all)");
    auto* rg_qt = rg->add_subcommand("quasitrees", "Spanning quasi-tree edge sets");
    rg_qt->add_option("file", file)->required();
    auto* rg_dm = rg->add_subcommand("dm", "Delta-matroid of the ribbon graph");
    rg_dm->add_option("file", file)->required();
    auto* rg_poly = rg->add_subcommand("poly", "Ribbon-graph polynomial R(G;x,y)");
    rg_poly->add_option("file", file)->required();
    auto* rg_join = rg->add_subcommand("join", "One-vertex join of two ribbon graphs");
    rg_join->add_option("file1", file, "First ribbon graph")->required();
    rg_join->add_option("file2", file2, "Second ribbon graph")->required();
    rg_join->add_option("--v1", v1, "Vertex in the first graph");
    rg_join->add_option("--pos1", pos1, "Rotation gap in the first vertex");
    rg_join->add_option("--v2", v2, "Vertex in the second graph");
    rg_join->add_option("--pos2", pos2, "Rotation gap in the second vertex");
    auto* rg_union = rg->add_subcommand("union", "Disjoint union of two ribbon graphs");
    rg_union->add_option("file1", file)->required();
    rg_union->add_option("file2", file2)->required();

    auto* poly = app.add_subcommand("poly", "Integer bivariate polynomial operations");
    poly->require_subcommand(1);
    auto* poly_factor = poly->add_subcommand("factor", "Irreducible factorization over Z[x,y]");
    poly_factor->add_option("poly", poly_text)->required();
    auto* poly_irr = poly->add_subcommand("irreducible", "Irreducibility over Z[x,y]");
    poly_irr->add_option("poly", poly_text)->required();
    auto* poly_eval = poly->add_subcommand("eval", "Evaluate at integer point");
    poly_eval->add_option("poly", poly_text)->required();
    poly_eval->add_option("x", x0)->required();
    poly_eval->add_option("y", y0)->required();

    auto* verify = app.add_subcommand("verify", "Property verification harnesses");
    verify->require_subcommand(1);
    auto* v_thm = verify->add_subcommand("theorem", "Irreducible iff connected, exhaustively");
    v_thm->add_option("--max-n", max_n, "Exhaustive ground-set bound")->capture_default_str();
    v_thm->add_option("--seed", seed, "Seed for the sampled phase")->capture_default_str();
    v_thm->add_flag("--no-sample", no_sample, "Skip the sampled phase");
    v_thm->add_flag("--full-suite", full_suite, "Run the whole identity suite per instance");
    auto* v_rib = verify->add_subcommand("ribbon", "Identity suite over small ribbon graphs");
    v_rib->add_option("--max-edges", max_edges, "Edge bound")->capture_default_str();
    auto* v_sp = verify->add_subcommand("serpar", "Series-parallel characterization");
    v_sp->add_option("--max-ops", max_ops, "Extension bound for the corpus scan")
        ->capture_default_str();
    v_sp->add_option("--ops", ops_file, "JSON op list; check this one build instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    const bool as_json = format == "json";
    try {
        if (dm_tutte->parsed()) {
            const BiPoly t = tutte_subset_sum(dm_from_json(slurp(file)));
            std::cout << (as_json ? json{{"tutte", t.to_string()}}.dump() : t.to_string()) << "\n";
        } else if (dm_beta->parsed()) {
            const Int b = beta(dm_from_json(slurp(file)));
            std::cout << (as_json ? json{{"beta", b.str()}}.dump() : b.str()) << "\n";
        } else if (dm_bry->parsed()) {
            const auto lines = check_brylawski(dm_from_json(slurp(file)));
            bool all = true;
            json arr = json::array();
            for (const auto& l : lines) {
                all = all && l.pass;
                if (as_json)
                    arr.push_back({{"k", l.k},
                                   {"sum", l.lhs.str()},
                                   {"expected", l.expected.str()},
                                   {"pass", l.pass}});
                else
                    std::cout << "k=" << l.k << " sum=" << l.lhs << " expected=" << l.expected
                              << (l.pass ? " pass" : " FAIL") << "\n";
            }
            if (as_json) std::cout << arr.dump() << "\n";
            return all ? kOk : kVerifyFailed;
        } else if (dm_profile->parsed()) {
            std::cout << profile_json(profile_from_polynomial(BiPoly::parse(poly_text))).dump()
                      << "\n";
        } else if (dm_conn->parsed()) {
            const DeltaMatroid d = dm_from_json(slurp(file));
            Mask witness = 0;
            const bool conn = d.is_connected(&witness);
            if (as_json) {
                json j{{"connected", conn}};
                if (!conn) {
                    json part = json::array();
                    for (int i = 0; i < d.size(); ++i)
                        if (witness & (Mask(1) << i)) part.push_back(d.ground()[i]);
                    j["split"] = std::move(part);
                }
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (conn ? "connected" : "disconnected") << "\n";
            }
        } else if (dm_dual->parsed()) {
            std::cout << dm_to_json(dm_from_json(slurp(file)).dual()) << "\n";
        } else if (dm_twist->parsed()) {
            const DeltaMatroid d = dm_from_json(slurp(file));
            std::cout << dm_to_json(d.twist(d.mask_of(elements))) << "\n";
        } else if (dm_sp->parsed()) {
            const bool sp = is_series_parallel(dm_from_json(slurp(file)));
            std::cout << (as_json ? json{{"series_parallel", sp}}.dump()
                                  : std::string(sp ? "true" : "false"))
                      << "\n";
        } else if (rg_metrics->parsed()) {
            const RibbonGraph g = rg_from_json(slurp(file));
            const auto m = subset_metrics(g, subset, !rg_metrics->count("--subset"));
            const json j{{"components", m.components}, {"rank", m.rank},
                         {"boundary", m.boundary},    {"euler_genus", m.euler_genus},
                         {"sigma2", m.sigma2}};
            if (as_json)
                std::cout << j.dump() << "\n";
            else
                std::cout << "components=" << m.components << " rank=" << m.rank
                          << " boundary=" << m.boundary << " euler_genus=" << m.euler_genus
                          << " sigma=" << (m.sigma2 % 2 ? std::to_string(m.sigma2) + "/2"
                                                        : std::to_string(m.sigma2 / 2))
                          << "\n";
        } else if (rg_qt->parsed()) {
            const RibbonGraph g = rg_from_json(slurp(file));
            json arr = json::array();
            for (Mask a : g.quasi_tree_sets()) {
                json one = json::array();
                for (int i = 0; i < g.num_edges(); ++i)
                    if (a & (Mask(1) << i)) one.push_back(g.edges()[i].label);
                arr.push_back(std::move(one));
            }
            std::cout << arr.dump() << "\n";
        } else if (rg_dm->parsed()) {
            std::cout << dm_to_json(rg_from_json(slurp(file)).delta_matroid()) << "\n";
        } else if (rg_poly->parsed()) {
            const RibbonGraph g = rg_from_json(slurp(file));
            if (!g.orientable())
                throw std::invalid_argument(
                    "non-orientable ribbon graph; the polynomial leaves the integer lattice");
            const BiPoly r = ribbon_polynomial(g);
            std::cout << (as_json ? json{{"poly", r.to_string()}}.dump() : r.to_string()) << "\n";
        } else if (rg_join->parsed()) {
            const RibbonGraph a = rg_from_json(slurp(file));
            const RibbonGraph b = rg_from_json(slurp(file2));
            std::cout << rg_to_json(RibbonGraph::join(a, v1, pos1, b, v2, pos2)) << "\n";
        } else if (rg_union->parsed()) {
            const RibbonGraph a = rg_from_json(slurp(file));
            const RibbonGraph b = rg_from_json(slurp(file2));
            std::cout << rg_to_json(RibbonGraph::disjoint_union(a, b)) << "\n";
        } else if (poly_factor->parsed()) {
            const auto f = factor_bivariate(BiPoly::parse(poly_text));
            if (as_json) {
                json arr = json::array();
                for (const auto& [p, mult] : f.factors)
                    arr.push_back({{"poly", p.to_string()}, {"multiplicity", mult}});
                std::cout << json{{"content", f.content.str()}, {"factors", std::move(arr)}}.dump()
                          << "\n";
            } else {
                std::cout << render_factorization(f) << "\n";
            }
        } else if (poly_irr->parsed()) {
            const bool irr = is_irreducible(BiPoly::parse(poly_text));
            std::cout << (as_json ? json{{"irreducible", irr}}.dump()
                                  : std::string(irr ? "irreducible" : "reducible"))
                      << "\n";
        } else if (poly_eval->parsed()) {
            const Int v = BiPoly::parse(poly_text).eval(Int(x0), Int(y0));
            std::cout << (as_json ? json{{"value", v.str()}}.dump() : v.str()) << "\n";
        } else if (v_thm->parsed()) {
            return emit_report(verify_theorem(max_n, seed, !no_sample, full_suite));
        } else if (v_rib->parsed()) {
            return emit_report(verify_ribbon(max_edges));
        } else if (v_sp->parsed()) {
            if (!v_sp->count("--ops")) return emit_report(verify_series_parallel(max_ops));
            json j = json::parse(slurp(ops_file));
            std::vector<SeriesParallelOp> ops;
            for (const auto& item : j) {
                const std::string kind = item.at("op").get<std::string>();
                if (kind != "series" && kind != "parallel")
                    throw std::invalid_argument("op must be \"series\" or \"parallel\"");
                ops.push_back({kind == "series" ? SeriesParallelOp::Series
                                                : SeriesParallelOp::Parallel,
                               item.at("edge").get<std::string>()});
            }
            const RibbonGraph g = build_series_parallel(ops);
            VerificationReport report;
            const DeltaMatroid d0 = g.delta_matroid();
            for (Mask tw = 0;; ++tw) {
                const DeltaMatroid d = d0.twist(tw);
                report.instance_count += 1;
                if (!is_series_parallel(d))
                    report.failures.push_back(
                        {d.describe(), "series-parallel maps satisfy the beta criterion",
                         beta(d).str()});
                if (tw == d0.full_mask()) break;
            }
            return emit_report(report);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}
