#pragma once

#include "effcones/json_io.hpp"

namespace effcones {

struct SuiteCase {
    int n = 0;
    int d = 0;
    long i = 0;
    BoundStatus expect_status = BoundStatus::Unknown;
    std::optional<ConeV> expect_lower;
    std::optional<ConeV> expect_upper;
};

struct CaseResult {
    SuiteCase c;
    const BoundPair* computed = nullptr;
    bool pass = false;
    std::string message;
};

// The default verification matrix: the conic, quadric and delta-table cases,
// the open X_{2,3} dimensions, and the divisor cones pinned by their tables.
// Shipped as data/paper_suite.json; this generator exists to (re)emit that
// file and to let tests assert the file matches the tables.
std::vector<SuiteCase> paper_suite_cases();

std::vector<SuiteCase> suite_from_json(const Json& j);
Json suite_to_json(const std::vector<SuiteCase>& cases);
std::vector<SuiteCase> load_suite_file(const std::string& path);

// Runs each case through the verifier; cases are independent, results come
// back in input order.
std::vector<CaseResult> run_suite(Verifier& v, const std::vector<SuiteCase>& cases);

bool all_passed(const std::vector<CaseResult>& results);

}  // namespace effcones
