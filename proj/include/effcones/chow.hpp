#pragma once

#include <map>
#include <utility>

#include "effcones/rational.hpp"

namespace effcones {

// Numerical ring of the universal degree-d hypersurface in P^n:
//
//   N*(X) = Q[h, xi] / ( h^{n+1},  sum_{i=0..min(n,r)} (-1)^i d^i h^i xi^{r-i} )
//
// with r = C(n+d, d) - 1 the dimension of the space of degree-d forms and
// dim X = r + n - 1.  The reduced monomial basis is h^a xi^b with a <= n and
// b <= r - 1.
struct RingPresentation {
    int n = 0;
    int d = 0;
    long r = 0;
    long dim_total = 0;

    RingPresentation() = default;
    RingPresentation(int n_, int d_);

    bool operator==(const RingPresentation& o) const { return n == o.n && d == o.d; }
    bool operator!=(const RingPresentation& o) const { return !(*this == o); }
};

// Raw bivariate polynomial in h, xi: (h-exponent, xi-exponent) -> coefficient.
using RawPoly = std::map<std::pair<long, long>, Rat>;

struct non_homogeneous_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A homogeneous class in the reduced basis.  coeffs maps the h-exponent a to
// the coefficient of h^a xi^{codim-a}; zero coefficients are never stored.
struct NumClass {
    RingPresentation pres;
    long codim = 0;
    std::map<long, Rat> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Rat coeff(long a) const;
    RawPoly raw() const;

    NumClass& operator*=(const Rat& c);
    NumClass operator+(const NumClass& o) const;
    NumClass operator-(const NumClass& o) const;

    std::string to_string() const;

    bool operator==(const NumClass& o) const {
        return pres == o.pres && codim == o.codim && coeffs == o.coeffs;
    }
};

NumClass zero_class(const RingPresentation& pres, long codim);

// Rewrites xi^r -> sum_{i>=1} (-1)^{i+1} d^i h^i xi^{r-i} and kills h^{>n}
// until every monomial lies in the reduced basis.  Throws on non-homogeneous
// input.  Idempotent.
NumClass reduce(const RawPoly& p, const RingPresentation& pres);

// Convenience: reduce(c * h^a xi^b).
NumClass monomial_class(const RingPresentation& pres, long a, long b, const Rat& c = Rat(1));

NumClass multiply(const NumClass& a, const NumClass& b);

// For a top-codimension class, the coefficient of h^n xi^{r-1}; this is the
// intersection number against the fundamental class.
Rat degree(const NumClass& a);

// Independent ground truth for the degree map: the coefficient of h^n xi^r in
// (d*h + xi) * h^a xi^b expanded on P^n x P^r with h^{>n} and xi^{>r}
// truncated.  Lives here only so tests and the acceptance suite can call one
// implementation; it never feeds the reduction path.
Rat degree_oracle_monomial(const RingPresentation& pres, long a, long b);

}  // namespace effcones
