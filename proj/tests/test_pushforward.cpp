#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "effcones/pushforward.hpp"
#include "effcones/theorems.hpp"
#include "test_util.hpp"

using namespace effcones;
using namespace effcones::testutil;

TEST_CASE("pushforward with t = 0 and degree 1 is the identity") {
    QVec v = qv({3, 5, 7});
    CHECK(product_pushforward_coords(v, PushSpec(4, 0, Rat(1), 2)) == v);
    QVec w = product_pushforward_coords(v, PushSpec(4, 0, make_rat(5, 2), 2));
    for (int p = 0; p < 3; ++p) CHECK(w[p] == v[p] * make_rat(5, 2));
}

TEST_CASE("pushforward of the fundamental class matches the closed form") {
    // [Z] = (C(i-2, i-M), m C(i-1, i-M), 0) for the fundamental class
    // (1, m, 0) of X_{2,m} pushed by t = i - M, and it is proportional to
    // (m+3, 2i-2, 0).
    for (long i = 8; i <= 40; ++i) {
        StableBounds sb = stable_delta_bounds(i);
        long m = sb.m, M = sb.M;
        QVec fundamental = qv({1, m, 0});
        QVec z = product_pushforward_coords(fundamental, PushSpec(M, i - M, Rat(1), 2));
        CHECK(z[0] == Rat(binomial(i - 2, i - M)));
        CHECK(z[1] == Rat(m) * Rat(binomial(i - 1, i - M)));
        CHECK(sgn(z[2]) == 0);
        // exact proportionality check
        CHECK(z[0] * Rat(2 * i - 2) == z[1] * Rat(m + 3));
        CHECK(sgn(z[0]) > 0);
    }
}

TEST_CASE("pushforward is linear") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> v(-9, 9), sd(0, 8), td(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(trial % 3);
        QVec a(n + 1), b(n + 1);
        for (int p = 0; p <= n; ++p) {
            a[p] = v(rng);
            b[p] = v(rng);
        }
        PushSpec spec(sd(rng), td(rng), make_rat(3, 2), n);
        Rat alpha = make_rat(v(rng), 7), beta = make_rat(v(rng), 5);
        QVec combo(n + 1);
        for (int p = 0; p <= n; ++p) combo[p] = alpha * a[p] + beta * b[p];
        QVec lhs = product_pushforward_coords(combo, spec);
        QVec pa = product_pushforward_coords(a, spec);
        QVec pb = product_pushforward_coords(b, spec);
        for (int p = 0; p <= n; ++p) CHECK(lhs[p] == alpha * pa[p] + beta * pb[p]);
    }
}

TEST_CASE("push spec validation") {
    CHECK_THROWS_AS(PushSpec(-1, 0, Rat(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(PushSpec(0, -1, Rat(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(PushSpec(0, 0, Rat(0), 2), std::invalid_argument);
    CHECK_THROWS_AS(PushSpec(0, 0, Rat(1), 0), std::invalid_argument);
}

TEST_CASE("hyperplane cones") {
    CHECK(hyperplane_cone(2, 1) == cone(3, {{0, 0, 1}, {0, 1, 0}}));
    CHECK(hyperplane_cone(2, 2) == cone(3, {{1, 1, 0}, {0, 1, 1}}));
    // top dimension: only the fundamental class survives
    CHECK(hyperplane_cone(2, 3) == cone(3, {{1, 1, 0}}));
    CHECK(hyperplane_cone(3, 4) == cone(4, {{1, 1, 0, 0}, {0, 1, 1, 0}}));
    CHECK(hyperplane_cone(3, 3) == cone(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
    CHECK_THROWS_AS(hyperplane_cone(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(hyperplane_cone(2, -1), std::invalid_argument);
}

TEST_CASE("hyperplane cones are self-dual against the monomial functionals") {
    // For i < n the dual of <e_0,...,e_i> is the monomial cone spanned by
    // the h^a xi^{i-a} pairing vectors together with the annihilator lines
    // of the unused coordinates.
    for (int n = 2; n <= 4; ++n) {
        for (long i = 0; i < n; ++i) {
            ConeV dual = dual_cone(hyperplane_cone(n, i));
            std::vector<ZVec> gens;
            for (long a = 0; a <= i; ++a) {
                ZVec v(n + 1, Int(0));
                v[n - a] = 1;
                gens.push_back(std::move(v));
            }
            for (long j = i + 1; j <= n; ++j) {
                ZVec v(n + 1, Int(0));
                v[n - j] = 1;
                gens.push_back(v);
                v[n - j] = -1;
                gens.push_back(v);
            }
            CHECK(cone_equal(dual, ConeV::from_rays(n + 1, gens)));
        }
    }
}

TEST_CASE("product cone pushforward: universal line sources") {
    // d2 = 2 so M = 5, target dimension i = 4: the result is the cone
    // <e_0, e_1, 2 e_2 + 3 e_1>.
    ProductSource src;
    src.n = 2;
    src.dim_x1 = 3;
    src.M = 5;
    for (long j = 0; j <= 3; ++j) src.cones.emplace(j, hyperplane_cone(2, j));
    ConeV pushed = product_cone_pushforward(src, 4);
    CHECK(cone_equal(pushed, cone(3, {{0, 0, 1}, {0, 1, 0}, {2, 3, 0}})));
}

TEST_CASE("product cone pushforward: missing source dimension is named") {
    ProductSource src;
    src.n = 2;
    src.dim_x1 = 3;
    src.M = 2;
    src.cones.emplace(3, hyperplane_cone(2, 3));
    try {
        product_cone_pushforward(src, 4);
        FAIL("expected missing_source_error");
    } catch (const missing_source_error& e) {
        CHECK(std::string(e.what()).find("j=2") != std::string::npos);
    }
    // the partial variant just skips the gap
    ConeV partial = product_cone_pushforward_partial(src, 4);
    CHECK_FALSE(partial.trivial());
}

TEST_CASE("formulary: universal-line rows for (n, d2) pairs") {
    // product_cone_pushforward from hyperplane sources reproduces every
    // regime of the closed-form table.
    for (auto [n, d2] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        RingPresentation py(n, d2);
        long M = py.r;
        ProductSource src;
        src.n = n;
        src.dim_x1 = 2 * static_cast<long>(n) - 1;
        src.M = M;
        for (long j = 0; j <= src.dim_x1; ++j) src.cones.emplace(j, hyperplane_cone(n, j));
        for (long i = 0; i <= M + 2 * static_cast<long>(n) - 1; ++i) {
            ConeV computed = product_cone_pushforward(src, i);
            ConeV expected = tables::oneproducts_cone(n, M, i);
            CHECK_MESSAGE(cone_equal(computed, expected),
                          "n=", n, " d2=", d2, " i=", i);
        }
    }
}

TEST_CASE("formulary: universal-conic rows for d2 in {1,2,3}") {
    for (int d2 = 1; d2 <= 3; ++d2) {
        RingPresentation py(2, d2);
        long M = py.r;
        ProductSource src;
        src.n = 2;
        src.dim_x1 = 6;
        src.M = M;
        for (long j = 0; j <= 6; ++j) src.cones.emplace(j, tables::conic_cone(j));
        for (long i = 0; i <= M + 6; ++i) {
            ConeV computed = product_cone_pushforward(src, i);
            auto expected = tables::twoproducts_cone(M, i);
            if (!expected) continue;
            CHECK_MESSAGE(cone_equal(computed, *expected), "d2=", d2, " i=", i);
        }
    }
}

TEST_CASE("spec'd conic pushforward rows") {
    // X_{2,2} sources at i = 4 for any d2 >= 1 land on <(2,3,0),(0,1,0),(0,0,1)>,
    // and the top dimension i = M + 6 lands on <(5, 2M+10, 0)>.
    for (int d2 = 1; d2 <= 3; ++d2) {
        RingPresentation py(2, d2);
        ProductSource src;
        src.n = 2;
        src.dim_x1 = 6;
        src.M = py.r;
        for (long j = 0; j <= 6; ++j) src.cones.emplace(j, tables::conic_cone(j));
        CHECK(cone_equal(product_cone_pushforward(src, 4),
                         cone(3, {{2, 3, 0}, {0, 1, 0}, {0, 0, 1}})));
        ConeV top = product_cone_pushforward(src, py.r + 6);
        CHECK(cone_equal(top, ConeV::from_rays(3, std::vector<ZVec>{zv({5, 2 * py.r + 10, 0})})));
    }
}
