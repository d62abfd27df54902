#pragma once

#include "effcones/chow.hpp"
#include "effcones/cone.hpp"

namespace effcones {

// A numerical cycle of dimension i in covariant coordinates.  coords is the
// tuple (d_n, ..., d_0), serialized high-to-low, where d_j is the
// intersection number of the cycle with h^j xi^{i-j}; entries with j > i are
// identically zero.  These coordinates are the ones that behave well under
// the product pushforward.
struct CovClass {
    RingPresentation pres;
    long i = 0;
    QVec coords;  // size n+1, coords[p] = d_{n-p}

    Rat d(long j) const;

    std::string to_string() const { return qvec_to_string(coords); }

    bool operator==(const CovClass& o) const {
        return pres == o.pres && i == o.i && coords == o.coords;
    }
};

struct inconsistent_coords_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

CovClass make_cov(const RingPresentation& pres, long i, QVec coords);

// Basis cycle e_j at dimension i.
CovClass e_basis(const RingPresentation& pres, long i, long j);

// d_j = degree(a * h^j xi^{i-j}), computed through the ring (multiply +
// reduce + degree), not through the closed-form triangular relation; the
// latter is a property the tests check against this.
CovClass to_covariant(const NumClass& a);

// Inverts the triangular relation c_a = d_{n-a} - d*c_{a-1} starting from
// c_0 = d_n.  Throws inconsistent_coords_error when the tuple does not come
// from a class of the right codimension.
NumClass from_covariant(const CovClass& c);

// <functional, cycle> = sum_j c_j d_j where c_j is the coefficient of
// h^j xi^{k-j} in the functional.  Requires codim(functional) == dim(cycle);
// equals degree(functional * from_covariant(cycle)).
Rat pair_classes(const NumClass& functional, const CovClass& cycle);

// The vector (c_n, ..., c_0) of a codim-k functional, i.e. the linear form
// on covariant tuples that pair_classes evaluates.  High-to-low, matching
// the cycle serialization, so the pairing is the standard dot product.
QVec pairing_vector(const NumClass& functional);

// Basis of the annihilator of { to_covariant(x) : x in N_i } inside Q^{n+1}.
// Nonempty exactly when the covariant image is a proper subspace (very low
// or very high cycle dimensions); the vectors correspond to functionals that
// reduce to zero in the ring.
std::vector<ZVec> covariant_annihilators(const RingPresentation& pres, long i);

}  // namespace effcones
