#pragma once

#include <vector>

#include "effcones/rational.hpp"

namespace effcones {

// Canonical ray form: clear denominators, divide by the gcd of the entries,
// keep the orientation.  Rays are never silently negated; the zero vector is
// rejected.
ZVec canonical_ray(const QVec& v);
ZVec canonical_ray(const ZVec& v);

// Rational polyhedral cone in V-representation.  Rays are canonical,
// lexicographically sorted and deduplicated, so equal ray sets serialize to
// identical bytes regardless of construction order.
struct ConeV {
    int ambient_dim = 0;
    std::vector<ZVec> rays;

    static ConeV from_rays(int ambient_dim, const std::vector<QVec>& rays);
    static ConeV from_rays(int ambient_dim, const std::vector<ZVec>& rays);

    bool trivial() const { return rays.empty(); }
    bool operator==(const ConeV& other) const = default;
};

// H-representation: each row v encodes the halfspace { x : v.x >= 0 }.
struct ConeH {
    int ambient_dim = 0;
    std::vector<ZVec> inequalities;

    static ConeH from_inequalities(int ambient_dim, const std::vector<ZVec>& ineqs);

    bool operator==(const ConeH& other) const = default;
};

// Generators of { y : y.g >= 0 for all rays g of c }, by incremental double
// description with exact rationals.  The dual of the zero cone is the full
// space, returned as +/- unit vectors.  A non-pointed dual is returned with
// its lineality space expanded into +/- ray pairs.
ConeV dual_cone(const ConeV& c);

// V-representation of { x : v.x >= 0 for all v }, same double description
// core as dual_cone.
ConeV cone_from_inequalities(const ConeH& h);

// Exact feasibility of x = sum lambda_i g_i, lambda_i >= 0, decided by a
// phase-1 simplex with Bland's rule.
bool member(const ConeV& c, const QVec& x);
bool member(const ConeV& c, const ZVec& x);

// Mutual containment, ray by ray.
bool cone_equal(const ConeV& a, const ConeV& b);

// Cone generated by the union of the ray sets.
ConeV minkowski_sum(const ConeV& a, const ConeV& b);

struct ExtremalRays {
    bool pointed = true;
    // Pointed case: the unique minimal generating set.  Non-pointed case:
    // the generators outside the lineality space, unreduced.
    ConeV rays;
    std::vector<ZVec> lineality;
};

// Minimal generating set; a ray is kept iff it is not in the cone of the
// others.  Cones containing a line come back flagged with a lineality basis
// so callers can decide -- lines are never silently dropped.
ExtremalRays extremal_rays(const ConeV& c);

// Number of extremal rays equals the rank of the ray matrix.  Throws on
// non-pointed input.
bool is_simplicial(const ConeV& c);

int rank_of_vectors(const std::vector<ZVec>& vs);

// Convenience: minimal canonical form of a cone (extremal rays of a pointed
// cone, identity on the trivial cone).  Throws on non-pointed input.
ConeV minimal_form(const ConeV& c);

}  // namespace effcones
