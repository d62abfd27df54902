#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effcones/suite.hpp"

using namespace effcones;

// The default verification matrix ships as data; these tests pin the file to
// the in-library tables so edits to either side surface immediately.

TEST_CASE("paper suite file matches the built-in tables") {
    std::vector<SuiteCase> from_file = load_suite_file(EFFCONES_SUITE_FILE);
    std::vector<SuiteCase> generated = paper_suite_cases();
    REQUIRE(from_file.size() == generated.size());
    for (size_t k = 0; k < generated.size(); ++k) {
        const SuiteCase& a = from_file[k];
        const SuiteCase& b = generated[k];
        CHECK(a.n == b.n);
        CHECK(a.d == b.d);
        CHECK(a.i == b.i);
        CHECK(a.expect_status == b.expect_status);
        REQUIRE(a.expect_lower.has_value() == b.expect_lower.has_value());
        REQUIRE(a.expect_upper.has_value() == b.expect_upper.has_value());
        if (a.expect_lower) CHECK(*a.expect_lower == *b.expect_lower);
        if (a.expect_upper) CHECK(*a.expect_upper == *b.expect_upper);
    }
}

TEST_CASE("suite json round-trip") {
    std::vector<SuiteCase> cases = paper_suite_cases();
    Json j = suite_to_json(cases);
    std::vector<SuiteCase> back = suite_from_json(j);
    REQUIRE(back.size() == cases.size());
    for (size_t k = 0; k < cases.size(); ++k) {
        CHECK(back[k].n == cases[k].n);
        CHECK(back[k].i == cases[k].i);
        CHECK(back[k].expect_status == cases[k].expect_status);
    }
}
