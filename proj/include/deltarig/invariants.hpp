#ifndef DELTARIG_INVARIANTS_HPP
#define DELTARIG_INVARIANTS_HPP

#include "deltarig/bipoly.hpp"
#include "deltarig/deltamatroid.hpp"
#include "deltarig/ribbon.hpp"

#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace deltarig {

/// Polynomial in (x-1) and (y-1) with exponents on the half-integer lattice
/// (stored doubled). Carries the subset sum for delta-matroids that are not
/// even; for even inputs every exponent is an even doubled integer and the
/// value expands to a BiPoly.
class ShiftedHalfPoly {
public:
    using TermMap = std::map<std::pair<int, int>, Int>;

    void add_term(int dxm1, int dym1, const Int& c);
    const TermMap& terms() const { return terms_; }
    bool integral() const;  // all doubled exponents even

    /// Expansion into x,y. Throws if a half-integer exponent is present.
    BiPoly expand() const;

    /// v^sigma u^(-w/2) value after the monomial substitution
    /// x-1 -> u/v, y-1 -> uv. sigma2 is doubled.
    LaurentPoly spanning_form(int sigma2, int w) const;

private:
    TermMap terms_;
};

/// Eq-style subset sum over all A: (x-1)^(sigma(E)-sigma(A)) (y-1)^(|A|-sigma(A)).
ShiftedHalfPoly tutte_subset_sum_general(const DeltaMatroid& d);

/// Plain polynomial form; requires every exponent to be an integer, which
/// holds in particular for even delta-matroids.
BiPoly tutte_subset_sum(const DeltaMatroid& d);

/// Memoized deletion-contraction evaluation; only valid for even inputs.
/// Throws std::invalid_argument on non-even input.
class TutteEngine {
public:
    BiPoly tutte(const DeltaMatroid& d);
    std::size_t cache_size() const { return cache_.size(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<Mask>& k) const;
    };
    std::unordered_map<std::vector<Mask>, BiPoly, KeyHash> cache_;
};

BiPoly tutte_delcon(const DeltaMatroid& d);

/// R(G;x,y) from the ribbon metrics. Integral for orientable G.
BiPoly ribbon_polynomial(const RibbonGraph& g);
ShiftedHalfPoly ribbon_polynomial_general(const RibbonGraph& g);

/// Sparse polynomial in x, y, z for the Bollobas-Riordan form.
class TriPoly {
public:
    using TermMap = std::map<std::tuple<int, int, int>, Int>;
    void add_term(int i, int j, int k, const Int& c);
    const TermMap& terms() const { return terms_; }
    bool operator==(const TriPoly& o) const { return terms_ == o.terms_; }
    std::string to_string() const;

private:
    TermMap terms_;
};

TriPoly br_polynomial(const DeltaMatroid& d);

/// Checks T(D;x,y) = (x-1)^(w/2) BR(D;x,y-1,1/sqrt((x-1)(y-1))) by clearing
/// denominators. Throws when an odd z-exponent appears (non-even width).
bool check_br_relation(const DeltaMatroid& d);

Int beta(const DeltaMatroid& d);

struct BrylawskiLine {
    int k;
    Int lhs;
    Int expected;
    bool pass;
};
std::vector<BrylawskiLine> check_brylawski(const DeltaMatroid& d);

bool check_top_coefficients(const DeltaMatroid& d);

struct TutteProfile {
    int n_elements;
    int sigma2;  // doubled
    int width;
    std::map<int, Int> feasible_size_counts;
    bool is_even;
    bool is_matroid;
};

/// Recovers the basic parameters from a delta-matroid Tutte polynomial via
/// the (u,v) substitution. Throws std::invalid_argument
/// ("not a delta-matroid Tutte polynomial") on inconsistent structure.
TutteProfile profile_from_polynomial(const BiPoly& t);

TutteProfile profile_of(const DeltaMatroid& d);  // direct, for cross-checking

/// beta(D) == (-1)^(w/2)? Requires even D with at least two elements.
bool is_series_parallel(const DeltaMatroid& d);

}  // namespace deltarig

#endif
