#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effcones/json_io.hpp"
#include "test_util.hpp"

using namespace effcones;
using namespace effcones::testutil;

TEST_CASE("cone json round-trip and byte stability") {
    ConeV c = cone(3, {{2, 3, 0}, {1, 3, 0}, {0, 1, 1}, {0, 0, 1}});
    Json j = cone_to_json(c);
    CHECK(cone_from_json(j) == c);
    CHECK(j.dump() == cone_to_json(cone_from_json(j)).dump());
    // canonical ordering: serialization is independent of input order
    ConeV shuffled = cone(3, {{0, 0, 1}, {2, 3, 0}, {0, 1, 1}, {1, 3, 0}});
    CHECK(cone_to_json(shuffled).dump() == j.dump());
    CHECK(j.dump() ==
          R"({"ambient_dim":3,"rays":[[0,0,1],[0,1,1],[1,3,0],[2,3,0]]})");
}

TEST_CASE("h-representation json and vertex enumeration") {
    ConeH h = ConeH::from_inequalities(2, {zv({1, 0}), zv({1, 1})});
    Json j = coneh_to_json(h);
    CHECK(j.contains("inequalities"));
    CHECK(coneh_from_json(j) == h);
    // {x : x0 >= 0, x0 + x1 >= 0} is spanned by (0,1) and (1,-1)
    CHECK(cone_equal(cone_from_inequalities(h), cone(2, {{0, 1}, {1, -1}})));
    // consistency with the dual: same rows as generators
    CHECK(cone_equal(cone_from_inequalities(h),
                     dual_cone(ConeV::from_rays(2, h.inequalities))));
}

TEST_CASE("class json uses num/den strings") {
    RingPresentation pres(2, 2);
    RawPoly p;
    p[{1, 3}] = make_rat(-5, 3);
    p[{2, 2}] = 2;
    NumClass a = reduce(p, pres);
    Json j = numclass_to_json(a);
    CHECK(j["coeffs"]["1"] == "-5/3");
    CHECK(j["coeffs"]["2"] == "2");
    CHECK(numclass_from_json(j) == a);
}

TEST_CASE("covariant json round-trip") {
    RingPresentation pres(2, 3);
    CovClass c = make_cov(pres, 5, QVec{Rat(1), make_rat(7, 2), Rat(0)});
    Json j = covclass_to_json(c);
    CHECK(j["coords"][1] == "7/2");
    CHECK(covclass_from_json(j) == c);
}

TEST_CASE("rational string forms") {
    CHECK(rat_to_string(make_rat(4, -6)) == "-2/3");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_from_string("-2/3") == make_rat(-2, 3));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK_THROWS_AS(rat_from_string("seven"), std::invalid_argument);
}

TEST_CASE("big integers serialize as strings") {
    Int big("123456789012345678901234567890");
    Json j = int_to_json(big);
    CHECK(j.is_string());
    CHECK(int_from_json(j) == big);
    CHECK(int_to_json(Int(42)).is_number_integer());
}
