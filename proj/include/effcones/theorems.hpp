#pragma once

#include <optional>
#include <tuple>

#include "effcones/pushforward.hpp"

namespace effcones {

enum class CertKind { Nef, NefOffLocus };

// A cocycle known to be nef -- or nef away from the image of
// X_{n,e} x Y_{n,d-e} -- together with the name of the fact that proves it.
struct Certificate {
    std::string label;
    NumClass functional;
    CertKind kind = CertKind::Nef;
    int off_degree = 0;  // degree e of the excluded sub-product factor
};

enum class BoundStatus { Equal, StrictBounds, Unknown };
std::string to_string(BoundStatus s);

struct BoundPair {
    ConeV lower;
    ConeV upper;
    BoundStatus status = BoundStatus::Unknown;
    std::vector<std::string> provenance;
};

// Raised when a computed lower bound escapes the computed upper bound;
// that containment is a theorem, so a violation is an implementation bug,
// never data.
struct soundness_error : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Bound engine.  verify(n, d, i) assembles a lower bound from effective
// classes and product pushforwards, an upper bound from dualized nef
// certificates (Minkowski-corrected for certificates that are only nef off a
// product locus), checks lower <= upper, and classifies the result.
// Memoizes: bounds for smaller degrees feed the pushforward terms.
// ---------------------------------------------------------------------------
class Verifier {
public:
    const BoundPair& verify(int n, int d, long i);

    std::vector<Certificate> nef_certificates(int n, int d, long i) const;

    struct EffectiveClass {
        std::string label;
        CovClass cls;
    };
    // Effective classes known at (n, d, i) other than pushforward images.
    std::vector<EffectiveClass> effective_catalog(int n, int d, long i) const;

    ConeV lower_bound_eff(int n, int d, long i);
    ConeV upper_bound_eff(int n, int d, long i);

private:
    std::map<std::tuple<int, int, long>, BoundPair> cache_;

    ConeV lower_bound(int n, int d, long i, std::vector<std::string>& prov);
    ConeV upper_bound(int n, int d, long i, std::vector<std::string>& prov);
    ProductSource source_cones(int n, int d1, int d2, long i, bool upper_side);
};

// ---------------------------------------------------------------------------
// Stable-cone arithmetic.
// ---------------------------------------------------------------------------
struct StableBounds {
    long i = 0;
    long m = 0;   // greatest integer with C(m+2,2) <= i
    long d0 = 0;  // least positive integer with m+2 <= C(d0-m+2,2)
    Rat delta_min;
    Rat delta_max;
    long M = 0;  // C(m+2,2)
};

StableBounds stable_delta_bounds(long i);

struct Check650Report {
    bool ok = true;
    long first_violation = -1;
    std::string detail;
};

// Exact check that delta_max(i)/(i-1) and delta_min(i)/(i-1) are
// non-increasing for 2 <= i <= i_max and that delta_max >= delta_min from
// i = 8 on.
Check650Report check_650(long i_max);

// (0,1,0) in N^c(X_{2,d}) is effective iff c >= d+1.
bool class_010_effective(long c, int d);

// <e_0, ..., e_i> for 0 <= i < n.
ConeV stable_lowdim_cone(long i, int n);

// ---------------------------------------------------------------------------
// Paper tables, transcribed once, used as fixtures by tests and the
// acceptance and verification suites.
// ---------------------------------------------------------------------------
namespace tables {

// Effective cones of the universal conic X_{2,2}, 0 <= i <= 6.
ConeV conic_cone(long i);

// Effective cones of X_{n,2} for n <= i <= 2n.
ConeV quadric_cone(int n, long i);

// delta(i) for i in {2,...,7,10}.
const std::map<long, Rat>& delta_table();
ConeV delta_cone(long i);  // <(1,delta(i),0),(0,1,0),(0,0,1)>

// Known bounds for Eff_7 and Eff_8 of X_{2,3}.
ConeV x23_lower(long i);
ConeV x23_upper(long i);

// Closed-form rows for the pushforward of Eff_i(X_{n,1} x Y) with
// dim Y = M, all four regimes.
ConeV oneproducts_cone(int n, long M, long i);

// Closed-form rows for the pushforward of Eff_i(X_{2,2} x Y), dim Y = M.
// Returns nothing for the i = 0 row, which the source does not list.
std::optional<ConeV> twoproducts_cone(long M, long i);

}  // namespace tables

}  // namespace effcones
