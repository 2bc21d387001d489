#include "deltarig/invariants.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace deltarig {

void ShiftedHalfPoly::add_term(int dxm1, int dym1, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::pair<int, int>{dxm1, dym1}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool ShiftedHalfPoly::integral() const {
    for (const auto& [e, c] : terms_)
        if (e.first % 2 != 0 || e.second % 2 != 0) return false;
    return true;
}

namespace {

const BiPoly& xm1_pow(int k) {
    thread_local std::vector<BiPoly> cache = {BiPoly::constant(1)};
    while (static_cast<int>(cache.size()) <= k) {
        BiPoly next = cache.back() * (BiPoly::var_x() - BiPoly::constant(1));
        cache.push_back(std::move(next));
    }
    return cache[static_cast<std::size_t>(k)];
}

const BiPoly& ym1_pow(int k) {
    thread_local std::vector<BiPoly> cache = {BiPoly::constant(1)};
    while (static_cast<int>(cache.size()) <= k) {
        BiPoly next = cache.back() * (BiPoly::var_y() - BiPoly::constant(1));
        cache.push_back(std::move(next));
    }
    return cache[static_cast<std::size_t>(k)];
}

}  // namespace

BiPoly ShiftedHalfPoly::expand() const {
    BiPoly out;
    for (const auto& [e, c] : terms_) {
        if (e.first % 2 != 0 || e.second % 2 != 0)
            throw std::invalid_argument("half-integer exponent present; expansion undefined");
        if (e.first < 0 || e.second < 0)
            throw std::invalid_argument("negative exponent present; expansion undefined");
        out += c * (xm1_pow(e.first / 2) * ym1_pow(e.second / 2));
    }
    return out;
}

LaurentPoly ShiftedHalfPoly::spanning_form(int sigma2, int w) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.add_term(e.first + e.second - w, sigma2 + e.second - e.first, c);
    return out;
}

ShiftedHalfPoly tutte_subset_sum_general(const DeltaMatroid& d) {
    const Mask full = d.full_mask();
    const int s2_full = d.sigma2(full);
    ShiftedHalfPoly out;
    Mask a = 0;
    while (true) {
        const int s2 = d.sigma2(a);
        out.add_term(s2_full - s2, 2 * std::popcount(a) - s2, 1);
        if (a == full) break;
        ++a;
    }
    return out;
}

BiPoly tutte_subset_sum(const DeltaMatroid& d) { return tutte_subset_sum_general(d).expand(); }

std::size_t TutteEngine::KeyHash::operator()(const std::vector<Mask>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (Mask m : k) {
        h ^= m;
        h *= 1099511628211ull;
    }
    return h;
}

BiPoly TutteEngine::tutte(const DeltaMatroid& d) {
    if (!d.is_even()) throw std::invalid_argument("delcon engine requires an even delta-matroid");
    if (d.size() == 0) return BiPoly::constant(1);
    auto key = d.canonical_key();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const int n = d.size();
    BiPoly result;
    int pivot = -1;
    for (int e = 0; e < n; ++e) {
        if (d.is_coloop(e)) {
            result = BiPoly::var_x() * tutte(d.contract_element(e));
            break;
        }
        if (d.is_loop(e)) {
            result = BiPoly::var_y() * tutte(d.delete_element(e));
            break;
        }
        pivot = e;
        break;
    }
    if (result.is_zero() && pivot >= 0) {
        const ElementInfo in_d = d.classify_element(pivot);
        const ElementInfo in_dual = d.dual().classify_element(pivot);
        const BiPoly td = tutte(d.delete_element(pivot));
        const BiPoly tc = tutte(d.contract_element(pivot));
        const BiPoly xm1 = BiPoly::var_x() - BiPoly::constant(1);
        const BiPoly ym1 = BiPoly::var_y() - BiPoly::constant(1);
        const bool rl_in_d = in_d.cls == ElementClass::OrientableRibbonLoop;
        const bool rl_in_dual = in_dual.cls == ElementClass::OrientableRibbonLoop;
        if (in_d.cls == ElementClass::NonOrientableRibbonLoop ||
            in_dual.cls == ElementClass::NonOrientableRibbonLoop)
            throw std::logic_error("non-orientable ribbon loop in an even delta-matroid");
        result = (rl_in_dual ? xm1 * td : td) + (rl_in_d ? ym1 * tc : tc);
    }
    cache_.emplace(std::move(key), result);
    return result;
}

BiPoly tutte_delcon(const DeltaMatroid& d) {
    TutteEngine engine;
    return engine.tutte(d);
}

ShiftedHalfPoly ribbon_polynomial_general(const RibbonGraph& g) {
    const Mask full = g.full_edge_mask();
    const int s2_full = g.metrics(full).sigma2;
    ShiftedHalfPoly out;
    Mask a = 0;
    while (true) {
        const int s2 = g.metrics(a).sigma2;
        out.add_term(s2_full - s2, 2 * std::popcount(a) - s2, 1);
        if (a == full) break;
        ++a;
    }
    return out;
}

BiPoly ribbon_polynomial(const RibbonGraph& g) { return ribbon_polynomial_general(g).expand(); }

void TriPoly::add_term(int i, int j, int k, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::tuple<int, int, int>{i, j, k}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string TriPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const auto [i, j, k] = e;
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool lead = true;
        if (a != 1 || (i == 0 && j == 0 && k == 0)) {
            out << a.str();
            lead = false;
        }
        auto emit = [&](const char* name, int d) {
            if (d == 0) return;
            if (!lead) out << "*";
            out << name;
            if (d > 1) out << "^" << d;
            lead = false;
        };
        emit("x", i);
        emit("y", j);
        emit("z", k);
    }
    return out.str();
}

TriPoly br_polynomial(const DeltaMatroid& d) {
    const Mask full = d.full_mask();
    const int r_full = d.min_matroid_rank(full);
    TriPoly out;
    Mask a = 0;
    while (true) {
        const int r_a = d.min_matroid_rank(a);
        const int w_a = d.restrict_to(a).width();
        const int j = std::popcount(a) - r_a;
        // (x-1)^(r(E)-r(A)) expanded into powers of x
        const int i_exp = r_full - r_a;
        for (int i = 0; i <= i_exp; ++i) {
            const Int coef = binomial(i_exp, i) * ((i_exp - i) % 2 == 0 ? 1 : -1);
            out.add_term(i, j, w_a, coef);
        }
        if (a == full) break;
        ++a;
    }
    return out;
}

bool check_br_relation(const DeltaMatroid& d) {
    const TriPoly br = br_polynomial(d);
    int max_z = 0;
    for (const auto& [e, c] : br.terms()) {
        if (std::get<2>(e) % 2 != 0)
            throw std::invalid_argument("relation check requires even widths");
        max_z = std::max(max_z, std::get<2>(e));
    }
    const int w = d.restrict_to(d.full_mask()).width();
    if (w % 2 != 0) throw std::invalid_argument("relation check requires even widths");
    const int m = max_z / 2;

    // RHS * ((x-1)(y-1))^m, with y -> y-1 and z^2 -> 1/((x-1)(y-1))
    BiPoly rhs;
    for (const auto& [e, c] : br.terms()) {
        const auto [i, j, k] = e;
        const int xm1_exp = w / 2 - k / 2 + m;
        const int ym1_exp = j - k / 2 + m;
        if (xm1_exp < 0 || ym1_exp < 0)
            throw std::logic_error("negative exponent while clearing denominators");
        rhs += c * (BiPoly::monomial(1, i, 0) * xm1_pow(xm1_exp) * ym1_pow(ym1_exp));
    }
    const BiPoly lhs = tutte_subset_sum(d) * (xm1_pow(m) * ym1_pow(m));
    return lhs == rhs;
}

Int beta(const DeltaMatroid& d) { return tutte_subset_sum(d).coeff(1, 0); }

std::vector<BrylawskiLine> check_brylawski(const DeltaMatroid& d) {
    const BiPoly t = tutte_subset_sum(d);
    const int n = d.size();
    const int s2 = d.sigma2();
    if (s2 % 2 != 0) throw std::invalid_argument("Brylawski relations stated for even delta-matroids");
    const int sigma = s2 / 2;
    std::vector<BrylawskiLine> out;
    for (int k = 0; k <= n; ++k) {
        Int lhs = 0;
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k - i; ++j)
                lhs += ((j % 2 == 0) ? 1 : -1) * binomial(k - i, j) * t.coeff(i, j);
        Int expected = 0;
        if (k == n) expected = ((n - sigma) % 2 == 0) ? 1 : -1;
        out.push_back({k, lhs, expected, lhs == expected});
    }
    return out;
}

bool check_top_coefficients(const DeltaMatroid& d) {
    const BiPoly t = tutte_subset_sum(d);
    const int n = d.size();
    const int s2 = d.sigma2();
    if (s2 % 2 != 0) return false;
    const int sigma = s2 / 2;
    for (const auto& [e, c] : t.terms())
        if (e.first > sigma || e.second > n - sigma) return false;
    Int row = 0, col = 0;
    for (int j = 0; j <= n - sigma; ++j) row += t.coeff(sigma, j);
    for (int i = 0; i <= sigma; ++i) col += t.coeff(i, n - sigma);
    return row == 1 && col == 1;
}

TutteProfile profile_from_polynomial(const BiPoly& t) {
    if (t.is_zero()) throw std::invalid_argument("not a delta-matroid Tutte polynomial");
    const LaurentPoly q = specialize_uv(t, 0, 0);
    const int sigma2 = -q.min_deg2_v();
    const int n2 = q.max_deg2_v() + sigma2;
    const int w2 = q.min_deg2_u();
    if (n2 < 0 || n2 % 2 != 0 || w2 < 0 || w2 % 2 != 0 || sigma2 < 0)
        throw std::invalid_argument("not a delta-matroid Tutte polynomial");
    const int n = n2 / 2;

    TutteProfile p{};
    p.n_elements = n;
    p.sigma2 = sigma2;
    p.width = w2;
    // terms of minimum u-degree are u^w v^(2|F|-sigma2), one per feasible set
    for (const auto& [e, c] : q.terms()) {
        if (e.first != w2) continue;
        const int s2 = e.second + sigma2;  // doubled feasible size
        if (s2 < 0 || s2 % 2 != 0 || s2 / 2 > n || c <= 0 || c > binomial(n, s2 / 2))
            throw std::invalid_argument("not a delta-matroid Tutte polynomial");
        p.feasible_size_counts[s2 / 2] = c;
    }
    if (p.feasible_size_counts.empty())
        throw std::invalid_argument("not a delta-matroid Tutte polynomial");
    const int smin = p.feasible_size_counts.begin()->first;
    const int smax = p.feasible_size_counts.rbegin()->first;
    if (smax - smin != p.width || smin + smax != sigma2)
        throw std::invalid_argument("not a delta-matroid Tutte polynomial");
    p.is_even = true;
    for (const auto& [s, c] : p.feasible_size_counts)
        if ((s - smin) % 2 != 0) p.is_even = false;
    p.is_matroid = p.width == 0;
    return p;
}

TutteProfile profile_of(const DeltaMatroid& d) {
    TutteProfile p{};
    p.n_elements = d.size();
    p.sigma2 = d.sigma2();
    p.width = d.width();
    for (Mask f : d.feasible()) ++p.feasible_size_counts[std::popcount(f)];
    p.is_even = d.is_even();
    p.is_matroid = d.is_matroid();
    return p;
}

bool is_series_parallel(const DeltaMatroid& d) {
    if (d.size() < 2 || !d.is_even()) throw std::invalid_argument("criterion undefined");
    const int w = d.width();
    const Int expected = (w / 2) % 2 == 0 ? 1 : -1;
    return beta(d) == expected;
}

}  // namespace deltarig
