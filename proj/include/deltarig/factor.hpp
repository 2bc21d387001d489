#ifndef DELTARIG_FACTOR_HPP
#define DELTARIG_FACTOR_HPP

#include "deltarig/bipoly.hpp"

#include <vector>

namespace deltarig {

/// Dense univariate integer polynomial; coeffs[i] is the coefficient of x^i.
using UniPoly = std::vector<Int>;

struct UniFactorization {
    Int content = 1;  // carries the sign; factors have positive leading coefficient
    std::vector<std::pair<UniPoly, int>> factors;
};

/// Exact irreducible factorization over the integers. Squarefree parts are
/// obtained by repeated derivative-gcd reduction, then factored mod a small
/// prime, Hensel-lifted past twice the Mignotte bound, and recombined.
/// Throws std::invalid_argument("zero input") on the zero polynomial.
UniFactorization factor_univariate(const UniPoly& p);

struct Factorization {
    Int content = 1;  // carries the sign
    std::vector<std::pair<BiPoly, int>> factors;

    BiPoly expand() const;
};

/// Exact irreducible factorization over Z[x,y] via Kronecker substitution.
/// Factors are primitive with positive graded-lex-leading coefficient and
/// pairwise non-associate; content times the factor product reproduces the
/// input exactly. Throws std::invalid_argument("zero input") on zero.
Factorization factor_bivariate(const BiPoly& p);

/// True iff p is irreducible over Z[x,y].
/// Throws std::invalid_argument("constant polynomial") on constant input.
bool is_irreducible(const BiPoly& p);

// -- univariate helpers shared with tests --

int uni_degree(const UniPoly& p);  // -1 for zero
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
bool uni_divide_exact(const UniPoly& a, const UniPoly& b, UniPoly& q);
UniPoly uni_derivative(const UniPoly& p);
Int uni_content(const UniPoly& p);
UniPoly uni_primitive_gcd(UniPoly a, UniPoly b);  // gcd over Z, primitive, lc > 0

}  // namespace deltarig

#endif
