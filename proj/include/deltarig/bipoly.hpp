#ifndef DELTARIG_BIPOLY_HPP
#define DELTARIG_BIPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deltarig {

using Int = boost::multiprecision::cpp_int;

/// Graded-lexicographic order on exponent pairs: total degree first,
/// then x-exponent. Iterating a term map ascending and reading it
/// backwards gives the canonical printing order.
struct GrlexLess {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        const int da = a.first + a.second;
        const int db = b.first + b.second;
        if (da != db) return da < db;
        return a.first < b.first;
    }
};

/// Sparse exact polynomial in x and y over the integers.
/// Stored coefficients are never zero; exponent pairs are unique.
class BiPoly {
public:
    using TermMap = std::map<std::pair<int, int>, Int, GrlexLess>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly{}; }
    static BiPoly constant(Int c);
    static BiPoly monomial(Int c, int i, int j);
    static BiPoly var_x() { return monomial(1, 1, 0); }
    static BiPoly var_y() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    int deg_x() const;
    int deg_y() const;
    int total_degree() const;  // -1 for the zero polynomial

    Int coeff(int i, int j) const;
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the graded-lex-leading term; 0 for the zero polynomial.
    Int leading_coeff() const;

    /// gcd of all coefficients, non-negative; 0 for the zero polynomial.
    Int content() const;

    Int eval(const Int& x0, const Int& y0) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Int& c, BiPoly p);
    friend BiPoly operator-(BiPoly p);

    BiPoly pow(unsigned e) const;

    /// Adds c*x^i*y^j, dropping the term if it cancels to zero.
    void add_term(int i, int j, const Int& c);

    /// Exact division test. When b divides *this, returns true and stores
    /// the quotient; otherwise returns false.
    bool divide_exact(const BiPoly& b, BiPoly& quotient) const;

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return terms_ != o.terms_; }
    bool operator<(const BiPoly& o) const;  // arbitrary total order for canonical sorting

    /// Canonical text form, e.g. "3*x*y + y^2 - 2*x - 2*y"; "0" when zero.
    std::string to_string() const;

    /// Parses the same grammar to_string emits (terms in any order).
    static BiPoly parse(const std::string& s);

private:
    TermMap terms_;
};

/// Sparse exact Laurent polynomial in u and v on the half-integer
/// exponent lattice. Exponents are stored doubled: stored 2 means true
/// exponent 1, stored 1 means true exponent 1/2.
class LaurentPoly {
public:
    using TermMap = std::map<std::pair<int, int>, Int>;

    LaurentPoly() = default;
    static LaurentPoly constant(Int c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c*u^(du/2)*v^(dv/2) with doubled exponents du, dv.
    void add_term(int du, int dv, const Int& c);

    Int coeff(int du, int dv) const;
    int min_deg2_u() const;  // doubled; throws on zero polynomial
    int max_deg2_u() const;
    int min_deg2_v() const;
    int max_deg2_v() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    std::string to_string() const;

private:
    TermMap terms_;
};

/// v^sigma * u^(-w/2) * p(u/v+1, uv+1), expanded exactly on the
/// half-integer lattice. sigma2 is the doubled value of sigma.
LaurentPoly specialize_uv(const BiPoly& p, int sigma2, int w);

/// Binomial coefficient as an exact integer.
Int binomial(int n, int k);

}  // namespace deltarig

#endif
