// Acceptance gate: six criteria, one pass/fail line each, nonzero exit on any
// failure. Every numeric comparison is exact integer arithmetic.

#include "deltarig/factor.hpp"
#include "deltarig/invariants.hpp"
#include "deltarig/verify.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace deltarig;

namespace {

int g_failures = 0;

void line(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("%d. %-42s %s%s%s\n", index, name, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Random even delta-matroid with up to eight elements: a direct sum of
/// corpus instances followed by a random twist. Twisting and summing both
/// preserve evenness.
DeltaMatroid random_instance(const std::vector<DeltaMatroid>& pool, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    DeltaMatroid d = pool[pick(rng)];
    while (d.size() < 8) {
        const DeltaMatroid& next = pool[pick(rng)];
        if (d.size() + next.size() > 8) break;
        std::vector<std::string> relabeled;
        for (int i = 0; i < next.size(); ++i)
            relabeled.push_back(std::to_string(d.size() + i + 1));
        d = DeltaMatroid::direct_sum(
            d, DeltaMatroid::unchecked(relabeled, next.feasible()));
        if (rng() % 2) break;
    }
    return d.twist(static_cast<Mask>(rng() & d.full_mask()));
}

bool criterion_paper_values() {
    const auto start = std::chrono::steady_clock::now();
    const RibbonGraph cycle = plane_two_cycle();
    const RibbonGraph torus =
        RibbonGraph::validate({{1, 3, 2, 4}}, {{1, 2, 1, "e1"}, {3, 4, 1, "e2"}});
    const BiPoly expect_cycle = BiPoly::parse("x + y");
    const BiPoly expect_torus = BiPoly::parse("2*x*y - x - y");
    TutteEngine engine;
    bool ok = true;
    for (const auto& [g, expected] :
         {std::pair{&cycle, &expect_cycle}, std::pair{&torus, &expect_torus}}) {
        const DeltaMatroid d = g->delta_matroid();
        ok = ok && ribbon_polynomial(*g) == *expected;     // metrics route
        ok = ok && tutte_subset_sum(d) == *expected;       // subset-sum route
        ok = ok && engine.tutte(d) == *expected;           // deletion-contraction route
    }
    return ok && seconds_since(start) < 1.0;
}

bool criterion_theorem(std::string& detail) {
    const VerificationReport r = verify_theorem(4, 0x5eed5eedULL, true, false);
    detail = std::to_string(r.instance_count) + " instances";
    if (!r.ok()) detail = r.failures.front().property + " @ " + r.failures.front().instance;
    return r.ok();
}

bool criterion_identity_suite(std::string& detail) {
    // full suite per even delta-matroid on <= 4 elements
    VerificationReport report = verify_theorem(4, 0x5eed5eedULL, false, true);

    // every orientable map with <= 4 edges, including the map-level checks
    const VerificationReport maps = verify_ribbon(4);
    report.instance_count += maps.instance_count;
    report.failures.insert(report.failures.end(), maps.failures.begin(), maps.failures.end());

    // 500 seeded random even instances on up to 8 elements
    std::vector<DeltaMatroid> pool;
    for (int n = 1; n <= 4; ++n)
        for (auto& d : enumerate_even_delta_matroids(n)) pool.push_back(std::move(d));
    std::mt19937_64 rng(0xc0ffee);
    for (int i = 0; i < 500; ++i) run_identity_suite(random_instance(pool, rng), nullptr, report);

    detail = std::to_string(report.instance_count) + " instances";
    if (!report.ok())
        detail = report.failures.front().property + " @ " + report.failures.front().instance;
    return report.ok();
}

bool criterion_series_parallel(std::string& detail) {
    const VerificationReport r = verify_series_parallel(6);
    detail = std::to_string(r.instance_count) + " instances";
    if (!r.ok()) detail = r.failures.front().property + " @ " + r.failures.front().instance;
    return r.ok();
}

bool criterion_factorizer(std::string& detail) {
    std::mt19937_64 rng(0xfac70);
    std::uniform_int_distribution<int> coef(-4, 4), nparts(2, 3);
    auto random_irreducible = [&](int max_deg) {
        std::uniform_int_distribution<int> exp(0, max_deg);
        for (;;) {
            BiPoly f;
            for (int t = 0; t < 4; ++t) {
                const int i = exp(rng);
                f.add_term(i, std::min(exp(rng), max_deg - i), coef(rng));
            }
            if (f.total_degree() < 1 || f.content() != 1) continue;
            if (is_irreducible(f)) return f.leading_coeff() > 0 ? f : -f;
        }
    };
    int done = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::multiset<BiPoly> expected;
        BiPoly p = BiPoly::constant(1);
        const int k = nparts(rng);
        for (int i = 0; i < k; ++i) {
            const BiPoly f = random_irreducible(k == 2 ? 3 : 2);
            expected.insert(f);
            p = p * f;
        }
        const Factorization got = factor_bivariate(p);
        std::multiset<BiPoly> flat;
        for (const auto& [q, mult] : got.factors)
            for (int j = 0; j < mult; ++j) flat.insert(q);
        if (flat != expected || got.expand() != p) {
            detail = "round-trip mismatch on " + p.to_string();
            return false;
        }
        ++done;
    }
    if (!is_irreducible(tutte_subset_sum(make_uniform(2, 4)))) {
        detail = "T(U_{2,4}) misreported";
        return false;
    }
    const BiPoly product = BiPoly::parse("x + y") * BiPoly::parse("2*x*y - x - y");
    const Factorization f = factor_bivariate(product);
    std::multiset<BiPoly> flat;
    for (const auto& [q, mult] : f.factors)
        for (int j = 0; j < mult; ++j) flat.insert(q);
    if (flat != std::multiset<BiPoly>{BiPoly::parse("x + y"), BiPoly::parse("2*x*y - x - y")} ||
        f.content != 1) {
        detail = "(x+y)(2xy-x-y) misfactored";
        return false;
    }
    detail = std::to_string(done) + " random products";
    return true;
}

bool criterion_profile(std::string& detail) {
    std::size_t count = 0;
    for (int n = 0; n <= 4; ++n)
        for (const DeltaMatroid& d : enumerate_even_delta_matroids(n)) {
            const TutteProfile direct = profile_of(d);
            TutteProfile got;
            try {
                got = profile_from_polynomial(tutte_subset_sum(d));
            } catch (const std::invalid_argument& e) {
                detail = std::string(e.what()) + " @ " + d.describe();
                return false;
            }
            if (got.n_elements != direct.n_elements || got.sigma2 != direct.sigma2 ||
                got.width != direct.width ||
                got.feasible_size_counts != direct.feasible_size_counts ||
                got.is_even != direct.is_even || got.is_matroid != direct.is_matroid) {
                detail = "mismatch @ " + d.describe();
                return false;
            }
            ++count;
        }
    detail = std::to_string(count) + " instances";
    return true;
}

}  // namespace

int main() {
    std::string detail;

    detail.clear();
    line(1, "paper values via three routes", criterion_paper_values(), detail);

    detail.clear();
    line(2, "irreducible iff connected (n <= 4 + samples)", criterion_theorem(detail), detail);

    detail.clear();
    line(3, "identity suite over the corpus", criterion_identity_suite(detail), detail);

    detail.clear();
    line(4, "series-parallel characterization", criterion_series_parallel(detail), detail);

    detail.clear();
    line(5, "factorizer round trips", criterion_factorizer(detail), detail);

    detail.clear();
    line(6, "parameter recovery from polynomials", criterion_profile(detail), detail);

    return g_failures == 0 ? 0 : 1;
}
