#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effcones/theorems.hpp"
#include "test_util.hpp"

using namespace effcones;
using namespace effcones::testutil;

TEST_CASE("stable delta bounds: spot values") {
    StableBounds b8 = stable_delta_bounds(8);
    CHECK(b8.m == 2);
    CHECK(b8.M == 6);
    CHECK(b8.d0 == 4);
    CHECK(b8.delta_min == make_rat(5, 2));
    CHECK(b8.delta_max == make_rat(14, 5));

    StableBounds b9 = stable_delta_bounds(9);
    CHECK(b9.delta_min == make_rat(8, 3));
    CHECK(b9.delta_max == Rat(3));

    StableBounds b10 = stable_delta_bounds(10);
    CHECK(b10.m == 3);
    CHECK(b10.delta_min == Rat(3));
    CHECK(b10.delta_max == Rat(3));
    CHECK(b10.delta_max == tables::delta_table().at(10));

    StableBounds b2 = stable_delta_bounds(2);
    CHECK(b2.m == 0);
    CHECK(b2.delta_max == Rat(1));

    CHECK_THROWS_AS(stable_delta_bounds(1), std::invalid_argument);
}

TEST_CASE("m and d0 satisfy their defining inequalities") {
    for (long i = 2; i <= 500; ++i) {
        StableBounds b = stable_delta_bounds(i);
        CHECK(binomial(b.m + 2, 2) <= i);
        CHECK(binomial(b.m + 3, 2) > i);
        CHECK(binomial(b.d0 - b.m + 2, 2) >= b.m + 2);
        if (b.d0 > 1) CHECK(binomial(b.d0 - 1 - b.m + 2, 2) < b.m + 2);
    }
}

TEST_CASE("monotonicity check and the crossing values") {
    Check650Report rep = check_650(2000);
    CHECK(rep.ok);
    CHECK_THROWS_AS(check_650(7), std::invalid_argument);

    // Across the crossing i = C(p+2,2)-1 -> C(p+2,2), where m steps from
    // p-1 to p: the max-ratio lands exactly on 2/(p+3) after the crossing
    // (and hence on 2/(p+4) after the next one), while the min-ratio equals
    // 1/p on both sides.
    for (long p = 2; p <= 20; ++p) {
        long j = binomial(p + 2, 2).get_si();
        StableBounds before = stable_delta_bounds(j - 1);
        StableBounds after = stable_delta_bounds(j);
        CHECK(after.delta_max / Rat(j - 1) == make_rat(2, p + 3));
        CHECK(before.delta_min / Rat(j - 2) == make_rat(1, p));
        CHECK(after.delta_min / Rat(j - 1) == make_rat(1, p));
        CHECK(before.delta_max / Rat(j - 2) >= after.delta_max / Rat(j - 1));
    }

    // below 8 the sandwich may be empty and must not be flagged
    StableBounds b3 = stable_delta_bounds(3);
    CHECK(b3.delta_max < b3.delta_min);
}

TEST_CASE("class (0,1,0) effectivity threshold") {
    CHECK(class_010_effective(4, 3));
    CHECK_FALSE(class_010_effective(3, 3));
    CHECK(class_010_effective(2, 1));
    CHECK_THROWS_AS(class_010_effective(0, 3), std::invalid_argument);
}

TEST_CASE("stable low-dimension cones and their duals") {
    CHECK(stable_lowdim_cone(1, 2) == cone(3, {{0, 0, 1}, {0, 1, 0}}));
    CHECK(stable_lowdim_cone(0, 5) ==
          ConeV::from_rays(6, std::vector<ZVec>{zv({0, 0, 0, 0, 0, 1})}));
    CHECK_THROWS_AS(stable_lowdim_cone(2, 2), std::invalid_argument);

    // dual check: the dual is the monomial functional cone plus the
    // annihilator lines of the coordinates above i
    for (int n = 2; n <= 4; ++n)
        for (long i = 0; i < n; ++i)
            CHECK(cone_equal(dual_cone(stable_lowdim_cone(i, n)),
                             dual_cone(hyperplane_cone(n, i))));
}

TEST_CASE("certificate catalog: universal cubic, dimension 4") {
    Verifier v;
    auto certs = v.nef_certificates(2, 3, 4);
    bool has_xi4 = false, has_offlocus_13 = false, has_h2xi2 = false, has_plain_24 = false;
    for (const auto& c : certs) {
        QVec pv = pairing_vector(c.functional);
        if (pv == QVec{Rat(0), Rat(0), Rat(1)}) has_xi4 = true;
        if (pv == QVec{Rat(1), Rat(0), Rat(0)}) has_h2xi2 = true;
        if (pv == QVec{Rat(-2), Rat(1), Rat(0)}) {
            CHECK(c.kind == CertKind::NefOffLocus);
            CHECK(c.off_degree == 1);
            has_offlocus_13 = true;
        }
        if (pv == QVec{Rat(-3), Rat(2), Rat(0)} && c.kind == CertKind::Nef) has_plain_24 = true;
    }
    CHECK(has_xi4);
    CHECK(has_h2xi2);
    CHECK(has_offlocus_13);
    CHECK(has_plain_24);  // eta[2,4] (and eta2) is plainly nef here
}

TEST_CASE("certificate catalog: plain nef multiples at dimension 5") {
    Verifier v;
    auto certs = v.nef_certificates(2, 3, 5);
    bool found = false;
    for (const auto& c : certs)
        if (pairing_vector(c.functional) == QVec{Rat(-4), Rat(2), Rat(0)} &&
            c.kind == CertKind::Nef)
            found = true;
    CHECK(found);  // 2 h xi^4 - 4 h^2 xi^3
}

TEST_CASE("certificate catalog: monomials only below degree two thresholds") {
    Verifier v;
    auto certs = v.nef_certificates(2, 2, 1);
    for (const auto& c : certs) {
        CHECK(c.kind == CertKind::Nef);
        CHECK(c.functional.codim == 1);
    }
    CHECK(certs.size() == 2);  // h and xi only
}

TEST_CASE("verify: universal conic cones are reproduced and classified") {
    Verifier v;
    for (long i = 1; i <= 5; ++i) {
        const BoundPair& bp = v.verify(2, 2, i);
        CHECK(bp.status == BoundStatus::Equal);
        CHECK(cone_equal(bp.lower, tables::conic_cone(i)));
        CHECK(cone_equal(bp.upper, tables::conic_cone(i)));
        ExtremalRays ex = extremal_rays(tables::conic_cone(i));
        CHECK(ex.pointed);
        CHECK(ex.rays == tables::conic_cone(i));  // every listed ray extremal
        CHECK(is_simplicial(tables::conic_cone(i)) == (i != 4));
    }
}

TEST_CASE("verify: universal quadrics for n = 2, 3, 4") {
    Verifier v;
    for (int n : {2, 3, 4}) {
        for (long i = n; i <= 2 * static_cast<long>(n); ++i) {
            const BoundPair& bp = v.verify(n, 2, i);
            CHECK_MESSAGE(bp.status == BoundStatus::Equal, "n=", n, " i=", i);
            CHECK_MESSAGE(cone_equal(bp.lower, tables::quadric_cone(n, i)), "n=", n, " i=", i);
        }
    }
}

TEST_CASE("verify: delta table rows (d = 3, 4)") {
    Verifier v;
    for (long i = 2; i <= 6; ++i) {
        for (int d : {3, 4}) {
            const BoundPair& bp = v.verify(2, d, i);
            CHECK_MESSAGE(bp.status == BoundStatus::Equal, "d=", d, " i=", i);
            CHECK_MESSAGE(cone_equal(bp.upper, tables::delta_cone(i)), "d=", d, " i=", i);
        }
    }
    const BoundPair& b7 = v.verify(2, 4, 7);
    CHECK(b7.status == BoundStatus::Equal);
    CHECK(cone_equal(b7.upper, tables::delta_cone(7)));
    const BoundPair& b10 = v.verify(2, 4, 10);
    CHECK(b10.status == BoundStatus::Equal);
    CHECK(cone_equal(b10.upper, tables::delta_cone(10)));
}

TEST_CASE("verify: open cubic cases keep strict bounds") {
    Verifier v;
    for (long i : {7L, 8L}) {
        const BoundPair& bp = v.verify(2, 3, i);
        CHECK(bp.status == BoundStatus::StrictBounds);
        CHECK(cone_equal(bp.lower, tables::x23_lower(i)));
        CHECK(cone_equal(bp.upper, tables::x23_upper(i)));
        CHECK_FALSE(cone_equal(bp.lower, bp.upper));
    }
    const BoundPair& b9 = v.verify(2, 3, 9);
    CHECK(b9.status == BoundStatus::Unknown);
    // divisor-side bounds: <h> below, <h, xi> above
    CHECK(cone_equal(b9.lower, cone(3, {{0, 1, 3}})));
    CHECK(cone_equal(b9.upper, cone(3, {{1, 3, 0}, {0, 1, 3}})));
}

TEST_CASE("verify: degenerate dimensions") {
    Verifier v;
    // top dimension: the fundamental ray
    const BoundPair& top = v.verify(2, 2, 6);
    CHECK(top.status == BoundStatus::Equal);
    CHECK(cone_equal(top.lower, cone(3, {{1, 2, 0}})));
    // dimension 0 and the low-dimension regime
    const BoundPair& pts = v.verify(3, 2, 0);
    CHECK(pts.status == BoundStatus::Equal);
    CHECK(cone_equal(pts.lower, ConeV::from_rays(4, std::vector<ZVec>{zv({0, 0, 0, 1})})));
    const BoundPair& low = v.verify(3, 3, 2);
    CHECK(low.status == BoundStatus::Equal);
    CHECK(cone_equal(low.lower, stable_lowdim_cone(2, 3)));
    // hyperplane shortcut
    const BoundPair& hy = v.verify(3, 1, 4);
    CHECK(hy.status == BoundStatus::Equal);
    CHECK(cone_equal(hy.lower, hyperplane_cone(3, 4)));
}

TEST_CASE("verify: errors") {
    Verifier v;
    CHECK_THROWS_AS(v.verify(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(v.verify(2, 2, 7), std::invalid_argument);  // beyond dim X
    CHECK_THROWS_AS(v.verify(2, 2, -1), std::invalid_argument);
}

TEST_CASE("soundness and divisor action across the verification matrix") {
    Verifier v;
    std::vector<std::tuple<int, int, long>> matrix;
    for (long i = 1; i <= 5; ++i) matrix.emplace_back(2, 2, i);
    for (int n : {3, 4})
        for (long i = n; i <= 2 * static_cast<long>(n); ++i) matrix.emplace_back(n, 2, i);
    for (long i = 2; i <= 6; ++i)
        for (int d : {3, 4, 5}) matrix.emplace_back(2, d, i);
    for (long i : {7L, 8L, 9L, 10L}) matrix.emplace_back(2, 4, i);
    for (long i : {7L, 8L, 9L}) matrix.emplace_back(2, 3, i);
    for (long i : {7L, 10L}) matrix.emplace_back(2, 5, i);

    int closure_checked = 0;
    for (auto [n, d, i] : matrix) {
        const BoundPair& bp = v.verify(n, d, i);
        // lower inside upper, ray by ray
        for (const ZVec& g : bp.lower.rays) CHECK(member(bp.upper, g));
        if (i < 1) continue;
        const BoundPair& below = v.verify(n, d, i - 1);
        RingPresentation pres(n, d);
        NumClass h = monomial_class(pres, 1, 0);
        NumClass xi = monomial_class(pres, 0, 1);
        for (const ZVec& g : bp.lower.rays) {
            NumClass cls = from_covariant(make_cov(pres, i, to_qvec(g)));
            CovClass gh = to_covariant(multiply(cls, h));
            CovClass gxi = to_covariant(multiply(cls, xi));
            CHECK_MESSAGE(member(below.upper, gh.coords), "h action (", n, ",", d, ",", i, ")");
            CHECK_MESSAGE(member(below.upper, gxi.coords), "xi action (", n, ",", d, ",", i, ")");
            closure_checked += 2;
        }
    }
    CHECK(closure_checked >= 250);
}
