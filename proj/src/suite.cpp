#include "effcones/suite.hpp"

#include <fstream>
#include <sstream>

namespace effcones {

namespace {

BoundStatus status_from_string(const std::string& s) {
    if (s == "EQUAL") return BoundStatus::Equal;
    if (s == "STRICT_BOUNDS") return BoundStatus::StrictBounds;
    if (s == "UNKNOWN") return BoundStatus::Unknown;
    throw std::invalid_argument("unknown status string: " + s);
}

}  // namespace

std::vector<SuiteCase> paper_suite_cases() {
    std::vector<SuiteCase> cases;
    auto add = [&](int n, int d, long i, BoundStatus st, std::optional<ConeV> lo,
                   std::optional<ConeV> up) {
        cases.push_back({n, d, i, st, std::move(lo), std::move(up)});
    };

    // Universal conic: all nontrivial cones.
    for (long i = 1; i <= 5; ++i)
        add(2, 2, i, BoundStatus::Equal, tables::conic_cone(i), tables::conic_cone(i));

    // Universal quadrics, the slightly-higher-dimension range.
    for (int n : {2, 3, 4})
        for (long i = n; i <= 2 * static_cast<long>(n); ++i)
            add(n, 2, i, BoundStatus::Equal, tables::quadric_cone(n, i),
                tables::quadric_cone(n, i));

    // Universal plane curves: the delta table.
    for (long i = 2; i <= 6; ++i)
        for (int d = 3; d <= 6; ++d)
            add(2, d, i, BoundStatus::Equal, tables::delta_cone(i), tables::delta_cone(i));
    for (long i : {7L, 10L})
        for (int d = 4; d <= 6; ++d)
            add(2, d, i, BoundStatus::Equal, tables::delta_cone(i), tables::delta_cone(i));

    // Open cones on the universal cubic: strict bounds only.
    for (long i : {7L, 8L})
        add(2, 3, i, BoundStatus::StrictBounds, tables::x23_lower(i), tables::x23_upper(i));

    // Eff_9(X_{2,3}): the machinery certifies only the generic divisor-side
    // bounds, reported UNKNOWN.
    add(2, 3, 9, BoundStatus::Unknown,
        ConeV::from_rays(3, std::vector<ZVec>{{Int(0), Int(1), Int(3)}}),
        ConeV::from_rays(3, std::vector<ZVec>{{Int(1), Int(3), Int(0)}, {Int(0), Int(1), Int(3)}}));

    return cases;
}

std::vector<SuiteCase> suite_from_json(const Json& j) {
    std::vector<SuiteCase> out;
    for (const Json& jc : j.at("cases")) {
        SuiteCase c;
        c.n = jc.at("n").get<int>();
        c.d = jc.at("d").get<int>();
        c.i = jc.at("i").get<long>();
        c.expect_status = status_from_string(jc.at("status").get<std::string>());
        if (jc.contains("lower")) c.expect_lower = cone_from_json(jc.at("lower"));
        if (jc.contains("upper")) c.expect_upper = cone_from_json(jc.at("upper"));
        out.push_back(std::move(c));
    }
    return out;
}

Json suite_to_json(const std::vector<SuiteCase>& cases) {
    Json j;
    j["suite"] = "paper";
    Json arr = Json::array();
    for (const SuiteCase& c : cases) {
        Json jc;
        jc["n"] = c.n;
        jc["d"] = c.d;
        jc["i"] = c.i;
        jc["status"] = to_string(c.expect_status);
        if (c.expect_lower) jc["lower"] = cone_to_json(*c.expect_lower);
        if (c.expect_upper) jc["upper"] = cone_to_json(*c.expect_upper);
        arr.push_back(std::move(jc));
    }
    j["cases"] = std::move(arr);
    return j;
}

std::vector<SuiteCase> load_suite_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open suite file: " + path);
    Json j = Json::parse(in);
    return suite_from_json(j);
}

std::vector<CaseResult> run_suite(Verifier& v, const std::vector<SuiteCase>& cases) {
    std::vector<CaseResult> out;
    for (const SuiteCase& c : cases) {
        CaseResult r;
        r.c = c;
        std::ostringstream msg;
        try {
            const BoundPair& bp = v.verify(c.n, c.d, c.i);
            r.computed = &bp;
            r.pass = true;
            if (bp.status != c.expect_status) {
                r.pass = false;
                msg << "status " << to_string(bp.status) << " != expected "
                    << to_string(c.expect_status) << "; ";
            }
            if (c.expect_lower && !cone_equal(bp.lower, *c.expect_lower)) {
                r.pass = false;
                msg << "lower bound differs from expected cone; ";
            }
            if (c.expect_upper && !cone_equal(bp.upper, *c.expect_upper)) {
                r.pass = false;
                msg << "upper bound differs from expected cone; ";
            }
        } catch (const std::exception& e) {
            r.pass = false;
            msg << "exception: " << e.what();
        }
        r.message = msg.str();
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<CaseResult>& results) {
    for (const CaseResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace effcones
