#include "deltarig/factor.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace deltarig {

namespace {

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uni_trim(r);
    return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    uni_trim(r);
    return r;
}

UniPoly uni_scale(UniPoly p, const Int& c) {
    if (c == 0) return {};
    for (auto& a : p) a *= c;
    return p;
}

UniPoly uni_primitive_part(UniPoly p) {
    Int c = uni_content(p);
    if (c == 0 || c == 1) return p;
    for (auto& a : p) a /= c;
    return p;
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly uni_prem(UniPoly a, const UniPoly& b) {
    const int db = uni_degree(b);
    const Int lb = b.back();
    while (uni_degree(a) >= db) {
        const int da = uni_degree(a);
        const Int la = a.back();
        a = uni_scale(std::move(a), lb);
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        uni_trim(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

bool uni_divide_exact(const UniPoly& a, const UniPoly& b, UniPoly& q) {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    UniPoly rem = a;
    const int db = uni_degree(b);
    UniPoly quo(a.size(), 0);
    while (uni_degree(rem) >= db) {
        const int dr = uni_degree(rem);
        if (rem.back() % b.back() != 0) return false;
        const Int c = rem.back() / b.back();
        quo[dr - db] = c;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * b[i];
        uni_trim(rem);
    }
    if (!rem.empty()) return false;
    uni_trim(quo);
    q = std::move(quo);
    return true;
}

UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Int(i) * p[i]);
    uni_trim(d);
    return d;
}

Int uni_content(const UniPoly& p) {
    Int g = 0;
    for (const auto& c : p) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g < 0 ? Int(-g) : g;
}

UniPoly uni_primitive_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    if (a.empty()) return b.empty() ? b : uni_primitive_part(b.back() < 0 ? uni_scale(b, -1) : b);
    if (b.empty()) return uni_primitive_part(a.back() < 0 ? uni_scale(a, -1) : a);
    a = uni_primitive_part(std::move(a));
    b = uni_primitive_part(std::move(b));
    if (uni_degree(a) < uni_degree(b)) std::swap(a, b);
    while (true) {
        UniPoly r = uni_prem(a, b);
        if (r.empty()) break;
        a = std::move(b);
        b = uni_primitive_part(std::move(r));
    }
    if (b.back() < 0) b = uni_scale(std::move(b), -1);
    return b;
}

// ---------------------------------------------------------------------------
// Arithmetic mod m (m a prime power during lifting, a prime during Berlekamp).
// ---------------------------------------------------------------------------

namespace {

Int mod_reduce(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    return a;
}

Int inv_mod(const Int& a, const Int& m) {
    // extended Euclid
    Int r0 = m, r1 = mod_reduce(a, m), t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 != 1) throw std::logic_error("inv_mod: element not invertible");
    return mod_reduce(t0, m);
}

using MPoly = UniPoly;  // coefficients in [0, m)

MPoly pm_reduce(UniPoly p, const Int& m) {
    for (auto& c : p) c = mod_reduce(c, m);
    uni_trim(p);
    return p;
}

MPoly pm_add(const MPoly& a, const MPoly& b, const Int& m) { return pm_reduce(uni_add(a, b), m); }
MPoly pm_sub(const MPoly& a, const MPoly& b, const Int& m) { return pm_reduce(uni_sub(a, b), m); }
MPoly pm_mul(const MPoly& a, const MPoly& b, const Int& m) { return pm_reduce(uni_mul(a, b), m); }

/// Division with remainder mod m; the divisor's leading coefficient must be
/// invertible mod m.
void pm_divmod(const MPoly& a, const MPoly& b, const Int& m, MPoly& q, MPoly& r) {
    const int db = uni_degree(b);
    if (db < 0) throw std::invalid_argument("pm_divmod: zero divisor");
    const Int binv = inv_mod(b.back(), m);
    r = a;
    q.assign(a.size(), 0);
    while (uni_degree(r) >= db) {
        const int dr = uni_degree(r);
        const Int c = mod_reduce(r.back() * binv, m);
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] = mod_reduce(r[dr - db + i] - c * b[i], m);
        uni_trim(r);
    }
    uni_trim(q);
}

MPoly pm_monic(const MPoly& p, const Int& m) {
    if (p.empty()) return p;
    const Int inv = inv_mod(p.back(), m);
    MPoly r = p;
    for (auto& c : r) c = mod_reduce(c * inv, m);
    return r;
}

MPoly pm_gcd(MPoly a, MPoly b, const Int& p) {
    while (!b.empty()) {
        MPoly q, r;
        pm_divmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : pm_monic(a, p);
}

/// Extended Euclid mod prime p: returns (s, t) with s*a + t*b = 1.
/// Requires gcd(a, b) = 1.
void pm_xgcd_coprime(const MPoly& a, const MPoly& b, const Int& p, MPoly& s, MPoly& t) {
    MPoly r0 = a, r1 = b;
    MPoly s0 = {Int(1)}, s1 = {};
    MPoly t0 = {}, t1 = {Int(1)};
    while (!r1.empty()) {
        MPoly q, r;
        pm_divmod(r0, r1, p, q, r);
        MPoly s2 = pm_sub(s0, pm_mul(q, s1, p), p);
        MPoly t2 = pm_sub(t0, pm_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (uni_degree(r0) != 0) throw std::logic_error("pm_xgcd: inputs not coprime");
    const Int inv = inv_mod(r0[0], p);
    for (auto& c : s0) c = mod_reduce(c * inv, p);
    for (auto& c : t0) c = mod_reduce(c * inv, p);
    s = std::move(s0);
    t = std::move(t0);
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a monic squarefree polynomial mod a small prime.
// ---------------------------------------------------------------------------

std::vector<MPoly> berlekamp(const MPoly& f, const Int& p) {
    const int n = uni_degree(f);
    if (n == 1) return {f};

    // x^p mod f by square and multiply
    MPoly xp = {Int(0), Int(1)};
    {
        MPoly acc = {Int(1)};
        MPoly base = xp;
        Int e = p;
        while (e > 0) {
            if ((e & 1) != 0) {
                MPoly q, r;
                pm_divmod(pm_mul(acc, base, p), f, p, q, r);
                acc = std::move(r);
            }
            MPoly q, r;
            pm_divmod(pm_mul(base, base, p), f, p, q, r);
            base = std::move(r);
            e >>= 1;
        }
        xp = std::move(acc);
    }

    // row i of Q is x^(i*p) mod f
    std::vector<std::vector<Int>> Q(n, std::vector<Int>(n, 0));
    MPoly cur = {Int(1)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= uni_degree(cur); ++j) Q[i][j] = cur[j];
        MPoly q, r;
        pm_divmod(pm_mul(cur, xp, p), f, p, q, r);
        cur = std::move(r);
    }
    for (int i = 0; i < n; ++i) Q[i][i] = mod_reduce(Q[i][i] - 1, p);

    // left nullspace of Q-I: solve v (Q-I) = 0, i.e. nullspace of (Q-I)^T
    std::vector<std::vector<Int>> M(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = Q[j][i];

    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int row = rank; row < n; ++row)
            if (M[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        const Int inv = inv_mod(M[rank][col], p);
        for (int j = 0; j < n; ++j) M[rank][j] = mod_reduce(M[rank][j] * inv, p);
        for (int row = 0; row < n; ++row) {
            if (row == rank || M[row][col] == 0) continue;
            const Int c = M[row][col];
            for (int j = 0; j < n; ++j) M[row][j] = mod_reduce(M[row][j] - c * M[rank][j], p);
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<MPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Int> v(n, 0);
        v[col] = 1;
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = mod_reduce(-M[i][col], p);
        MPoly vb(v.begin(), v.end());
        uni_trim(vb);
        basis.push_back(std::move(vb));
    }

    const std::size_t r = basis.size();
    std::vector<MPoly> factors = {f};
    if (r == 1) return factors;
    for (const auto& v : basis) {
        if (factors.size() == r) break;
        if (uni_degree(v) < 1) continue;
        std::vector<MPoly> next;
        for (const auto& g : factors) {
            if (factors.size() + next.size() >= r + factors.size()) {
            }
            if (uni_degree(g) <= 1) {
                next.push_back(g);
                continue;
            }
            MPoly rem = g;
            for (Int s = 0; s < p && uni_degree(rem) > 0; ++s) {
                MPoly shifted = v;
                if (shifted.empty()) shifted = {Int(0)};
                shifted[0] = mod_reduce(shifted[0] - s, p);
                uni_trim(shifted);
                MPoly h = pm_gcd(rem, shifted, p);
                if (uni_degree(h) > 0 && uni_degree(h) < uni_degree(rem)) {
                    next.push_back(h);
                    MPoly q, rr;
                    pm_divmod(rem, h, p, q, rr);
                    rem = pm_monic(q, p);
                }
            }
            if (uni_degree(rem) > 0) next.push_back(rem);
        }
        factors = std::move(next);
    }
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// One quadratic Hensel step: lifts F = g*h (mod m) with s*g + t*h = 1 (mod m)
/// to the same relations mod m^2. F, g, h monic.
void hensel_step(const UniPoly& F, const Int& m2, MPoly& g, MPoly& h, MPoly& s, MPoly& t) {
    MPoly Fr = pm_reduce(F, m2);
    MPoly e = pm_sub(Fr, pm_mul(g, h, m2), m2);
    MPoly q, r;
    pm_divmod(pm_mul(s, e, m2), h, m2, q, r);
    MPoly gstar = pm_add(g, pm_add(pm_mul(t, e, m2), pm_mul(q, g, m2), m2), m2);
    MPoly hstar = pm_add(h, r, m2);
    MPoly b = pm_sub(pm_add(pm_mul(s, gstar, m2), pm_mul(t, hstar, m2), m2), MPoly{Int(1)}, m2);
    MPoly c, d;
    pm_divmod(pm_mul(s, b, m2), hstar, m2, c, d);
    MPoly sstar = pm_sub(s, d, m2);
    MPoly tstar = pm_sub(t, pm_add(pm_mul(t, b, m2), pm_mul(c, gstar, m2), m2), m2);
    g = std::move(gstar);
    h = std::move(hstar);
    s = std::move(sstar);
    t = std::move(tstar);
}

/// Lifts a monic coprime factorization F = prod(gs) (mod p) to modulus M,
/// a power of p. F must be monic mod M. Returns monic factors mod M.
std::vector<MPoly> hensel_lift_tree(const MPoly& F, const std::vector<MPoly>& gs, const Int& p, const Int& M) {
    if (gs.size() == 1) return {F};
    const std::size_t half = gs.size() / 2;
    MPoly g0 = {Int(1)}, h0 = {Int(1)};
    for (std::size_t i = 0; i < half; ++i) g0 = pm_mul(g0, gs[i], p);
    for (std::size_t i = half; i < gs.size(); ++i) h0 = pm_mul(h0, gs[i], p);
    MPoly s, t;
    pm_xgcd_coprime(g0, h0, p, s, t);

    MPoly g = g0, h = h0;
    Int m = p;
    while (m < M) {
        Int m2 = m * m;
        hensel_step(F, m2, g, h, s, t);
        m = m2;
    }
    g = pm_reduce(g, M);
    h = pm_reduce(h, M);

    std::vector<MPoly> left =
        hensel_lift_tree(g, std::vector<MPoly>(gs.begin(), gs.begin() + half), p, M);
    std::vector<MPoly> right =
        hensel_lift_tree(h, std::vector<MPoly>(gs.begin() + half, gs.end()), p, M);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

// ---------------------------------------------------------------------------
// Zassenhaus
// ---------------------------------------------------------------------------

bool is_small_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int symmetric_rep(const Int& a, const Int& m) {
    Int r = mod_reduce(a, m);
    if (2 * r > m) r -= m;
    return r;
}

Int isqrt_ceil(const Int& n) {
    if (n <= 0) return 0;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r < n) ++r;
    return r;
}

/// Factors a primitive squarefree polynomial with positive leading
/// coefficient and degree >= 1 into irreducibles over Z.
std::vector<UniPoly> zassenhaus_squarefree(const UniPoly& f) {
    const int n = uni_degree(f);
    if (n == 1) return {f};

    // smallest admissible prime >= 3: keeps f squarefree and lc a unit
    Int p = 0;
    const UniPoly df = uni_derivative(f);
    for (long cand = 3;; cand += 2) {
        if (!is_small_prime(cand)) continue;
        Int q(cand);
        if (f.back() % q == 0) continue;
        MPoly fm = pm_reduce(f, q);
        MPoly dm = pm_reduce(df, q);
        if (dm.empty()) continue;
        MPoly g = pm_gcd(fm, dm, q);
        if (uni_degree(g) == 0) {
            p = q;
            break;
        }
    }

    MPoly fmonic = pm_monic(pm_reduce(f, p), p);
    std::vector<MPoly> modular = berlekamp(fmonic, p);
    if (modular.size() == 1) return {f};

    // Mignotte bound: any factor coefficient is at most 2^n * ||f||_2; the
    // recombination candidates carry an extra factor of lc(f).
    Int norm2sq = 0;
    for (const auto& c : f) norm2sq += c * c;
    Int bound = (isqrt_ceil(norm2sq) + 1) * f.back();
    bound <<= n;
    Int M = p;
    while (M <= 2 * bound) M *= p;

    MPoly Fmonic = pm_monic(pm_reduce(f, M), M);
    std::vector<MPoly> lifted = hensel_lift_tree(Fmonic, modular, p, M);

    std::vector<UniPoly> result;
    UniPoly fcur = f;
    std::vector<MPoly> items = std::move(lifted);

    auto try_subsets = [&](auto&& self, std::size_t size) -> bool {
        // iterate subsets of the given cardinality via index combinations
        const std::size_t r = items.size();
        if (size > r) return false;
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            MPoly prod = pm_reduce({fcur.back()}, M);
            for (std::size_t i : idx) prod = pm_mul(prod, items[i], M);
            UniPoly cand(prod.size());
            for (std::size_t i = 0; i < prod.size(); ++i) cand[i] = symmetric_rep(prod[i], M);
            uni_trim(cand);
            cand = uni_primitive_part(std::move(cand));
            if (!cand.empty() && cand.back() < 0) cand = uni_scale(std::move(cand), -1);
            UniPoly q;
            if (uni_degree(cand) >= 1 && uni_divide_exact(fcur, cand, q)) {
                result.push_back(cand);
                fcur = std::move(q);
                for (auto it = idx.rbegin(); it != idx.rend(); ++it)
                    items.erase(items.begin() + static_cast<long>(*it));
                return true;
            }
            // next combination
            long i = static_cast<long>(size) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - size + static_cast<std::size_t>(i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        (void)self;
        return false;
    };

    std::size_t size = 1;
    while (2 * size <= items.size()) {
        if (try_subsets(try_subsets, size))
            size = 1;
        else
            ++size;
    }
    if (uni_degree(fcur) >= 1) result.push_back(fcur);
    return result;
}

bool uni_less(const UniPoly& a, const UniPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

UniFactorization factor_univariate(const UniPoly& input) {
    UniPoly f = input;
    uni_trim(f);
    if (f.empty()) throw std::invalid_argument("zero input");

    UniFactorization out;
    Int cont = uni_content(f);
    if (f.back() < 0) cont = -cont;
    for (auto& c : f) c /= cont;
    out.content = cont;
    if (uni_degree(f) == 0) return out;

    // Yun's squarefree decomposition
    std::vector<std::pair<UniPoly, int>> squarefree;
    {
        UniPoly fp = uni_derivative(f);
        UniPoly a = uni_primitive_gcd(f, fp);
        UniPoly b, c;
        if (!uni_divide_exact(f, a, b)) throw std::logic_error("yun: gcd does not divide");
        if (!uni_divide_exact(fp, a, c)) throw std::logic_error("yun: gcd does not divide derivative");
        UniPoly d = uni_sub(c, uni_derivative(b));
        int i = 1;
        while (uni_degree(b) > 0) {
            UniPoly g = uni_primitive_gcd(b, d);
            if (uni_degree(g) > 0) squarefree.emplace_back(g, i);
            UniPoly bn, cn;
            if (!uni_divide_exact(b, g, bn)) throw std::logic_error("yun: factor does not divide");
            if (!uni_divide_exact(d, g, cn)) throw std::logic_error("yun: factor does not divide");
            b = std::move(bn);
            d = uni_sub(cn, uni_derivative(b));
            ++i;
        }
    }

    for (const auto& [part, mult] : squarefree) {
        UniPoly g = part;
        if (g.back() < 0) g = uni_scale(std::move(g), -1);
        for (auto& irr : zassenhaus_squarefree(g)) out.factors.emplace_back(std::move(irr), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return uni_less(a.first, b.first); });
    return out;
}

// ---------------------------------------------------------------------------
// Bivariate factorization by Kronecker substitution
// ---------------------------------------------------------------------------

namespace {

BiPoly swap_vars(const BiPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e.second, e.first, c);
    return r;
}

/// Substitutes y -> x^K; injective on supports with x-degree < K.
UniPoly kronecker_image(const BiPoly& p, int K) {
    UniPoly img(static_cast<std::size_t>(p.deg_x() + K * p.deg_y() + 1), 0);
    for (const auto& [e, c] : p.terms()) img[static_cast<std::size_t>(e.first + K * e.second)] = c;
    uni_trim(img);
    return img;
}

BiPoly un_kronecker(const UniPoly& h, int K) {
    BiPoly r;
    for (std::size_t t = 0; t < h.size(); ++t)
        if (h[t] != 0) r.add_term(static_cast<int>(t) % K, static_cast<int>(t) / K, h[t]);
    return r;
}

/// Normalizes sign so the graded-lex-leading coefficient is positive;
/// returns the sign that was removed.
int normalize_sign(BiPoly& p) {
    if (p.leading_coeff() < 0) {
        p = -p;
        return -1;
    }
    return 1;
}

}  // namespace

BiPoly Factorization::expand() const {
    BiPoly r = BiPoly::constant(content);
    for (const auto& [f, mult] : factors) r = r * f.pow(static_cast<unsigned>(mult));
    return r;
}

Factorization factor_bivariate(const BiPoly& input) {
    if (input.is_zero()) throw std::invalid_argument("zero input");

    Factorization out;
    BiPoly p = input;
    Int cont = p.content();
    if (p.leading_coeff() < 0) cont = -cont;
    if (cont != 1) {
        BiPoly q;
        if (!p.divide_exact(BiPoly::constant(cont), q)) throw std::logic_error("content division failed");
        p = std::move(q);
    }
    out.content = cont;
    if (p.is_constant()) return out;

    // monomial factors x^a y^b
    int min_x = p.deg_x(), min_y = p.deg_y();
    for (const auto& [e, c] : p.terms()) {
        min_x = std::min(min_x, e.first);
        min_y = std::min(min_y, e.second);
    }
    if (min_x > 0 || min_y > 0) {
        BiPoly q;
        if (!p.divide_exact(BiPoly::monomial(1, min_x, min_y), q)) throw std::logic_error("monomial division failed");
        p = std::move(q);
        if (min_x > 0) out.factors.emplace_back(BiPoly::var_x(), min_x);
        if (min_y > 0) out.factors.emplace_back(BiPoly::var_y(), min_y);
    }
    if (p.is_constant()) return out;

    const bool swapped = p.deg_y() < p.deg_x();
    if (swapped) p = swap_vars(p);
    const int K = p.deg_x() + 1;

    UniFactorization uf = factor_univariate(kronecker_image(p, K));
    std::vector<UniPoly> items;
    for (const auto& [f, mult] : uf.factors)
        for (int i = 0; i < mult; ++i) items.push_back(f);

    std::vector<BiPoly> found;
    BiPoly q = p;
    while (!items.empty() && !q.is_constant()) {
        bool progress = false;
        for (std::size_t size = 1; size <= items.size() && !progress; ++size) {
            std::vector<std::size_t> idx(size);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                UniPoly prod = {Int(1)};
                for (std::size_t i : idx) prod = uni_mul(prod, items[i]);
                BiPoly cand = un_kronecker(prod, K);
                BiPoly quo;
                if (!cand.is_constant() && q.divide_exact(cand, quo)) {
                    normalize_sign(cand);
                    found.push_back(std::move(cand));
                    q = std::move(quo);
                    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
                        items.erase(items.begin() + static_cast<long>(*it));
                    progress = true;
                    break;
                }
                long i = static_cast<long>(size) - 1;
                while (i >= 0 &&
                       idx[static_cast<std::size_t>(i)] == items.size() - size + static_cast<std::size_t>(i))
                    --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        if (!progress) throw std::logic_error("kronecker recombination failed to converge");
    }
    if (!q.is_constant()) {
        normalize_sign(q);
        found.push_back(std::move(q));
    } else if (q.coeff(0, 0) == -1) {
        // sign absorbed during normalization; fold back into content
        out.content = -out.content;
    } else if (q.coeff(0, 0) != 1) {
        throw std::logic_error("kronecker recombination left a non-unit quotient");
    }
    // Any sign flips from normalize_sign multiply to the quotient sign handled
    // above because the factor product times content must reproduce the input.

    if (swapped)
        for (auto& f : found) {
            f = swap_vars(f);
            normalize_sign(f);  // the grlex-leading term can change under the swap
        }

    std::sort(found.begin(), found.end());
    for (auto& f : found) {
        if (!out.factors.empty() && out.factors.back().first == f)
            ++out.factors.back().second;
        else
            out.factors.emplace_back(std::move(f), 1);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // final sign sanity: expanding must reproduce the input
    if (out.expand() != input) {
        out.content = -out.content;
        if (out.expand() != input) throw std::logic_error("factorization does not reproduce input");
    }
    return out;
}

bool is_irreducible(const BiPoly& p) {
    if (p.is_constant()) throw std::invalid_argument("constant polynomial");
    Factorization f = factor_bivariate(p);
    return f.factors.size() == 1 && f.factors.front().second == 1 &&
           (f.content == 1 || f.content == -1);
}

}  // namespace deltarig
