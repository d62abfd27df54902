// Command-line front end: ring arithmetic, cone operations, pushforward
// tables, stable bounds, and theorem verification with machine-readable
// reports.
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "effcones/suite.hpp"

using namespace effcones;

namespace {

Json read_json_arg(const std::string& path) {
    if (path == "-" || path.empty()) return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open file: " + path);
    return Json::parse(in);
}

QVec parse_tuple(const std::string& csv) {
    QVec out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(rat_from_string(tok));
    if (out.empty()) throw CLI::ValidationError("empty tuple: " + csv);
    return out;
}

std::vector<long> parse_longs(const std::string& csv) {
    std::vector<long> out;
    for (const Rat& q : parse_tuple(csv)) {
        if (q.get_den() != 1 || !q.get_num().fits_slong_p())
            throw CLI::ValidationError("expected integers: " + csv);
        out.push_back(q.get_num().get_si());
    }
    return out;
}

std::string csv_of_cone(const ConeV& c) {
    std::ostringstream os;
    for (const ZVec& r : c.rays) {
        for (size_t j = 0; j < r.size(); ++j) {
            if (j) os << ',';
            os << r[j].get_str();
        }
        os << '\n';
    }
    return os.str();
}

void emit(const Json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump() << '\n';
    else
        std::cout << j.dump(2) << '\n';
}

std::string cone_tuples(const Json& cone_json) {
    std::ostringstream os;
    bool first_ray = true;
    for (const Json& ray : cone_json.at("rays")) {
        if (!first_ray) os << ' ';
        first_ray = false;
        os << '(';
        bool first = true;
        for (const Json& x : ray) {
            if (!first) os << ';';
            first = false;
            os << x.dump();
        }
        os << ')';
    }
    return os.str();
}

void emit_report(const Json& j, const std::string& format) {
    if (format != "csv") {
        emit(j, format);
        return;
    }
    std::cout << "n,d,i,status,lower,upper\n"
              << j.at("case").at("n") << ',' << j.at("case").at("d") << ','
              << j.at("case").at("i") << ',' << j.at("status").get<std::string>() << ','
              << cone_tuples(j.at("lower")) << ',' << cone_tuples(j.at("upper")) << '\n';
}

std::string default_suite_file() {
#ifdef EFFCONES_SUITE_FILE
    return EFFCONES_SUITE_FILE;
#else
    return "data/paper_suite.json";
#endif
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact effective-cone computations on universal hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --format after the subcommand
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();

    // ring ------------------------------------------------------------------
    auto* ring = app.add_subcommand("ring", "arithmetic in the numerical ring");
    std::string ring_a, ring_b;
    bool ring_mul = false, ring_degree = false, ring_reduce = false, ring_covariant = false;
    ring->add_option("--a", ring_a, "first class (JSON file, '-' for stdin)")->required();
    ring->add_option("--b", ring_b, "second class (JSON file)");
    ring->add_flag("--mul", ring_mul, "multiply --a by --b");
    ring->add_flag("--degree", ring_degree, "degree of --a");
    ring->add_flag("--reduce", ring_reduce, "reduce --a to the monomial basis");
    ring->add_flag("--covariant", ring_covariant, "covariant tuple of --a");

    // cone ------------------------------------------------------------------
    auto* cone_cmd = app.add_subcommand("cone", "polyhedral cone kernel");
    std::string cone_in, cone_other, cone_point;
    bool cone_dual = false, cone_rays = false, cone_simplicial = false, cone_vrep = false;
    cone_cmd->add_option("--in", cone_in, "cone (JSON file, '-' for stdin)")->required();
    cone_cmd->add_flag("--dual", cone_dual, "dual cone");
    cone_cmd->add_flag("--rays", cone_rays, "extremal rays");
    cone_cmd->add_flag("--simplicial", cone_simplicial, "simpliciality test");
    cone_cmd->add_option("--member", cone_point, "membership test for a comma-separated point");
    cone_cmd->add_option("--minkowski", cone_other, "Minkowski sum with a second cone file");
    cone_cmd->add_flag("--vrep", cone_vrep,
                       "generators of a cone given by halfspace inequalities");

    // push ------------------------------------------------------------------
    auto* push = app.add_subcommand("push", "product-map pushforward of one tuple");
    long push_s = 0, push_t = 0;
    int push_n = 2;
    std::string push_deg = "1", push_tuple;
    push->add_option("--n", push_n, "base dimension")->required();
    push->add_option("--s", push_s, "source cycle dimension")->required();
    push->add_option("--t", push_t, "linear-series dimension")->required();
    push->add_option("--deg", push_deg, "linear-series degree (rational)");
    push->add_option("--tuple", push_tuple, "covariant tuple d_n,...,d_0")->required();

    // table -----------------------------------------------------------------
    auto* table = app.add_subcommand("table", "pushforward cone tables");
    int table_formulary = 1, table_n = 2, table_d = 1;
    table->add_option("--formulary", table_formulary, "1 = line sources, 2 = conic sources")
        ->check(CLI::IsMember({1, 2}))
        ->required();
    table->add_option("--n", table_n, "base dimension (formulary 1)");
    table->add_option("--d", table_d, "degree of the Y factor")->required();

    // verify ----------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "compute and check cone bounds");
    std::string verify_case, verify_suite, suite_file = default_suite_file();
    verify_cmd->add_option("--case", verify_case, "single case n,d,i");
    verify_cmd->add_option("--suite", verify_suite, "named suite (paper)");
    verify_cmd->add_option("--suite-file", suite_file, "suite JSON file")
        ->capture_default_str();
    bool emit_suite = false;
    verify_cmd->add_flag("--emit-suite", emit_suite,
                         "print the built-in paper suite as JSON and exit");

    // stable ----------------------------------------------------------------
    auto* stable = app.add_subcommand("stable", "stable-cone delta bounds");
    long stable_i = 0, stable_check = 0;
    stable->add_option("--i", stable_i, "cycle dimension");
    stable->add_option("--check-650", stable_check, "verify monotonicity up to this bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*ring) {
            NumClass a = numclass_from_json(read_json_arg(ring_a));
            if (ring_mul) {
                if (ring_b.empty()) throw CLI::ValidationError("--mul needs --b");
                NumClass b = numclass_from_json(read_json_arg(ring_b));
                emit(numclass_to_json(multiply(a, b)), format);
            } else if (ring_degree) {
                Json j;
                j["degree"] = rat_to_string(degree(a));
                emit(j, format);
            } else if (ring_covariant) {
                emit(covclass_to_json(to_covariant(a)), format);
            } else if (ring_reduce) {
                emit(numclass_to_json(a), format);  // parsing already reduces
            } else {
                throw CLI::ValidationError("ring: pick one of --mul/--degree/--reduce/--covariant");
            }
        } else if (*cone_cmd) {
            if (cone_vrep) {
                ConeH h = coneh_from_json(read_json_arg(cone_in));
                emit(cone_to_json(cone_from_inequalities(h)), format);
                return 0;
            }
            ConeV c = cone_from_json(read_json_arg(cone_in));
            if (cone_dual) {
                ConeV d = dual_cone(c);
                if (format == "csv")
                    std::cout << csv_of_cone(d);
                else
                    emit(cone_to_json(d), format);
            } else if (cone_rays) {
                ExtremalRays ex = extremal_rays(c);
                Json j;
                j["pointed"] = ex.pointed;
                j["rays"] = cone_to_json(ex.rays)["rays"];
                if (!ex.pointed) {
                    Json lin = Json::array();
                    for (const ZVec& l : ex.lineality) {
                        Json row = Json::array();
                        for (const Int& x : l) row.push_back(int_to_json(x));
                        lin.push_back(std::move(row));
                    }
                    j["lineality"] = std::move(lin);
                }
                emit(j, format);
            } else if (cone_simplicial) {
                Json j;
                j["simplicial"] = is_simplicial(c);
                emit(j, format);
            } else if (!cone_point.empty()) {
                Json j;
                j["member"] = member(c, parse_tuple(cone_point));
                emit(j, format);
            } else if (!cone_other.empty()) {
                ConeV other = cone_from_json(read_json_arg(cone_other));
                emit(cone_to_json(minkowski_sum(c, other)), format);
            } else {
                throw CLI::ValidationError(
                    "cone: pick one of --dual/--rays/--simplicial/--member/--minkowski");
            }
        } else if (*push) {
            QVec tuple = parse_tuple(push_tuple);
            if (static_cast<int>(tuple.size()) != push_n + 1)
                throw CLI::ValidationError("push: tuple must have n+1 entries");
            PushSpec spec(push_s, push_t, rat_from_string(push_deg), push_n);
            QVec out = product_pushforward_coords(tuple, spec);
            Json j;
            j["i"] = push_s + push_t;
            Json coords = Json::array();
            for (const Rat& x : out) coords.push_back(rat_to_string(x));
            j["coords"] = std::move(coords);
            emit(j, format);
        } else if (*table) {
            long M = RingPresentation(table_formulary == 1 ? table_n : 2, table_d).r;
            Json rows = Json::array();
            if (table_formulary == 1) {
                ProductSource src;
                src.n = table_n;
                src.dim_x1 = 2 * static_cast<long>(table_n) - 1;
                src.M = M;
                for (long j = 0; j <= src.dim_x1; ++j)
                    src.cones.emplace(j, hyperplane_cone(table_n, j));
                for (long i = 0; i <= M + 2 * static_cast<long>(table_n) - 1; ++i) {
                    Json row;
                    row["i"] = i;
                    row["cone"] = cone_to_json(minimal_form(product_cone_pushforward(src, i)));
                    rows.push_back(std::move(row));
                }
            } else {
                ProductSource src;
                src.n = 2;
                src.dim_x1 = 6;
                src.M = M;
                for (long j = 0; j <= 6; ++j) src.cones.emplace(j, tables::conic_cone(j));
                for (long i = 0; i <= M + 6; ++i) {
                    Json row;
                    row["i"] = i;
                    row["cone"] = cone_to_json(minimal_form(product_cone_pushforward(src, i)));
                    rows.push_back(std::move(row));
                }
            }
            Json j;
            j["formulary"] = table_formulary;
            j["n"] = (table_formulary == 1 ? table_n : 2);
            j["d"] = table_d;
            j["M"] = M;
            j["rows"] = std::move(rows);
            if (format == "csv") {
                std::cout << "i,cone\n";
                for (const Json& row : j["rows"])
                    std::cout << row.at("i") << ',' << cone_tuples(row.at("cone")) << '\n';
            } else {
                emit(j, format);
            }
        } else if (*verify_cmd) {
            if (emit_suite) {
                emit(suite_to_json(paper_suite_cases()), format);
                return 0;
            }
            Verifier v;
            if (!verify_case.empty()) {
                std::vector<long> nums = parse_longs(verify_case);
                if (nums.size() != 3) throw CLI::ValidationError("--case wants n,d,i");
                int n = static_cast<int>(nums[0]);
                int d = static_cast<int>(nums[1]);
                long i = nums[2];
                const BoundPair& bp = v.verify(n, d, i);
                emit_report(boundpair_to_json(n, d, i, bp), format);
                return 0;
            }
            if (verify_suite.empty())
                throw CLI::ValidationError("verify: pick --case or --suite");
            if (verify_suite != "paper")
                throw CLI::ValidationError("unknown suite: " + verify_suite);
            std::vector<SuiteCase> cases = load_suite_file(suite_file);
            std::vector<CaseResult> results = run_suite(v, cases);
            Json out = Json::array();
            int failed = 0;
            for (const CaseResult& r : results) {
                Json j = r.computed
                             ? boundpair_to_json(r.c.n, r.c.d, r.c.i, *r.computed)
                             : Json{{"case", {{"n", r.c.n}, {"d", r.c.d}, {"i", r.c.i}}}};
                j["pass"] = r.pass;
                if (!r.message.empty()) j["message"] = r.message;
                out.push_back(std::move(j));
                if (!r.pass) {
                    ++failed;
                    std::cerr << "FAIL case (" << r.c.n << "," << r.c.d << "," << r.c.i
                              << "): " << r.message << '\n';
                }
            }
            if (format == "csv") {
                std::cout << "n,d,i,status,pass\n";
                for (const Json& j : out)
                    std::cout << j.at("case").at("n") << ',' << j.at("case").at("d") << ','
                              << j.at("case").at("i") << ','
                              << (j.contains("status") ? j.at("status").get<std::string>() : "")
                              << ',' << (j.at("pass").get<bool>() ? "true" : "false") << '\n';
            } else {
                emit(out, format);
            }
            return failed == 0 ? 0 : 1;
        } else if (*stable) {
            if (stable_check > 0) {
                Check650Report rep = check_650(stable_check);
                Json j;
                j["ok"] = rep.ok;
                if (!rep.ok) {
                    j["first_violation"] = rep.first_violation;
                    j["detail"] = rep.detail;
                }
                emit(j, format);
                if (!rep.ok) return 1;
            } else {
                if (stable_i < 2) throw CLI::ValidationError("stable: --i must be >= 2");
                Json j = stable_to_json(stable_delta_bounds(stable_i));
                if (format == "csv") {
                    std::cout << "i,m,d0,delta_min,delta_max,M\n"
                              << j.at("i") << ',' << j.at("m") << ',' << j.at("d0") << ','
                              << j.at("delta_min").get<std::string>() << ','
                              << j.at("delta_max").get<std::string>() << ',' << j.at("M") << '\n';
                } else {
                    emit(j, format);
                }
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
