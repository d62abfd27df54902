#pragma once

#include <map>
#include <optional>

#include "effcones/covariant.hpp"

namespace effcones {

// Parameters of one product-map pushforward: a source cycle of dimension s
// on X_{n,d1} crossed with a t-dimensional linear-series cycle of degree
// delta_deg on Y_{n,d2}.
struct PushSpec {
    long s = 0;
    long t = 0;
    Rat delta_deg = 1;
    int n = 0;

    PushSpec(long s_, long t_, Rat deg, int n_);
};

// mu_*(eta x delta): coordinate j of the (s+t)-tuple picks up the factor
// delta_deg * C(s+t-j, t), with C(p,q) = 0 for p < q.
QVec product_pushforward_coords(const QVec& coords, const PushSpec& spec);

CovClass product_pushforward(const CovClass& eta, const PushSpec& spec,
                             const RingPresentation& target);

// Eff_i(X_{n,1}) in covariant coordinates: <e_0,...,e_i> below the middle,
// <e_j + e_{j-1} : i+1-n <= j <= n> from dimension n up.
ConeV hyperplane_cone(int n, long i);

// Per-dimension effective cones of the first factor X_{n,d1}, to be crossed
// with linear subspaces of Y (dimension M) and pushed forward.
struct ProductSource {
    int n = 0;
    long dim_x1 = 0;  // dimension of X_{n,d1}
    long M = 0;       // dimension of Y_{n,d2}
    std::map<long, ConeV> cones;
};

struct missing_source_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Cone generated by pushing every ray of src[j] with t = i-j across
// max(0, i-M) <= j <= min(i, dim_x1).  Kuenneth-style decomposition of the
// effective cone of the product; a missing source dimension is an error
// naming j.
ConeV product_cone_pushforward(const ProductSource& src, long i);

// Same sum, silently skipping missing source dimensions.  Only valid for
// lower bounds, where every pushed ray is effective on its own.
ConeV product_cone_pushforward_partial(const ProductSource& src, long i);

}  // namespace effcones
