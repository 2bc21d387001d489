#ifndef DELTARIG_VERIFY_HPP
#define DELTARIG_VERIFY_HPP

#include "deltarig/deltamatroid.hpp"
#include "deltarig/invariants.hpp"
#include "deltarig/ribbon.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace deltarig {

struct Failure {
    std::string instance;  // replayable serialized witness
    std::string property;
    std::string witness;
};

struct VerificationReport {
    std::size_t instance_count = 0;
    std::vector<Failure> failures;
    double seconds = 0.0;
    std::uint64_t seed = 0;

    bool ok() const { return failures.empty(); }
};

/// Every delta-matroid on n labelled elements whose feasible sizes share a
/// parity, enumerated by brute force over all subset families.
/// Throws for n > 4 ("exhaustive bound exceeded; use samplers").
std::vector<DeltaMatroid> enumerate_even_delta_matroids(int n);

/// All rotation systems with exactly max_edges edges (darts 0..2m-1, edges
/// {0,1},{2,3},...), one per permutation-into-cycles of the darts; all sign
/// vectors unless orientable_only. Duplicates under map isomorphism occur.
/// Throws for max_edges > 5.
std::vector<RibbonGraph> enumerate_ribbon_graphs(int max_edges, bool orientable_only);
void for_each_ribbon_graph(int edges, bool orientable_only,
                           const std::function<void(const RibbonGraph&)>& fn);

struct SeriesParallelOp {
    enum Kind { Series, Parallel } kind;
    std::string edge;
};

/// Plane two-edge cycle, the base of every series-parallel build.
RibbonGraph plane_two_cycle();

/// Applies series (subdivide) / parallel (double within the same face)
/// extensions starting from the plane 2-cycle. The result stays plane.
RibbonGraph build_series_parallel(const std::vector<SeriesParallelOp>& ops);

/// Runs the full identity suite from the paper on one even delta-matroid,
/// appending any failures. G, when given, must satisfy D = D(G).
void run_identity_suite(const DeltaMatroid& d, const RibbonGraph* g, VerificationReport& report);

/// Exhaustive check of the irreducibility theorem on all even delta-matroids
/// with 1..max_n elements, plus a seeded sampled phase (random twists of
/// ribbon-graphic delta-matroids, random direct sums asserting reducibility).
/// Honors the DELTARIG_THREADS worker cap.
VerificationReport verify_theorem(int max_n, std::uint64_t seed = 0x5eed5eedULL,
                                  bool run_sampled = true, bool full_suite = false);

/// Identity suite over every orientable map with up to max_edges edges,
/// including the R(G) = T(D(G)) and width-law checks.
VerificationReport verify_ribbon(int max_edges);

/// Series-parallel characterization: beta = (-1)^(w/2) for every twist of
/// every map built by at most max_ops extensions, plus the excluded-minor
/// complementarity scan over the small even corpus.
VerificationReport verify_series_parallel(int max_ops);

/// has_minor_in(D, {NP, U_{2,4}, M(K_4)}, up_to_twist = true).
bool excluded_minor_scan(const DeltaMatroid& d);

int worker_count();  // DELTARIG_THREADS cap, defaulting to hardware

}  // namespace deltarig

#endif
