#include "effcones/json_io.hpp"

namespace effcones {

Json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("int_from_json: expected integer or string");
}

Json cone_to_json(const ConeV& c) {
    Json j;
    j["ambient_dim"] = c.ambient_dim;
    Json rays = Json::array();
    for (const ZVec& r : c.rays) {
        Json row = Json::array();
        for (const Int& x : r) row.push_back(int_to_json(x));
        rays.push_back(std::move(row));
    }
    j["rays"] = std::move(rays);
    return j;
}

namespace {

std::vector<ZVec> rows_from_json(const Json& arr) {
    std::vector<ZVec> out;
    for (const Json& row : arr) {
        ZVec v;
        for (const Json& x : row) v.push_back(int_from_json(x));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

ConeV cone_from_json(const Json& j) {
    return ConeV::from_rays(j.at("ambient_dim").get<int>(), rows_from_json(j.at("rays")));
}

Json coneh_to_json(const ConeH& h) {
    Json j;
    j["ambient_dim"] = h.ambient_dim;
    Json rows = Json::array();
    for (const ZVec& r : h.inequalities) {
        Json row = Json::array();
        for (const Int& x : r) row.push_back(int_to_json(x));
        rows.push_back(std::move(row));
    }
    j["inequalities"] = std::move(rows);
    return j;
}

ConeH coneh_from_json(const Json& j) {
    return ConeH::from_inequalities(j.at("ambient_dim").get<int>(),
                                    rows_from_json(j.at("inequalities")));
}

Json numclass_to_json(const NumClass& a) {
    Json j;
    j["n"] = a.pres.n;
    j["d"] = a.pres.d;
    j["codim"] = a.codim;
    Json coeffs = Json::object();
    for (const auto& [e, c] : a.coeffs) coeffs[std::to_string(e)] = rat_to_string(c);
    j["coeffs"] = std::move(coeffs);
    return j;
}

NumClass numclass_from_json(const Json& j) {
    RingPresentation pres(j.at("n").get<int>(), j.at("d").get<int>());
    long codim = j.at("codim").get<long>();
    RawPoly p;
    for (const auto& [key, val] : j.at("coeffs").items()) {
        long a = std::stol(key);
        p[{a, codim - a}] = rat_from_string(val.get<std::string>());
    }
    NumClass out = reduce(p, pres);
    out.codim = codim;
    return out;
}

Json covclass_to_json(const CovClass& c) {
    Json j;
    j["n"] = c.pres.n;
    j["d"] = c.pres.d;
    j["i"] = c.i;
    Json coords = Json::array();
    for (const Rat& x : c.coords) coords.push_back(rat_to_string(x));
    j["coords"] = std::move(coords);
    return j;
}

CovClass covclass_from_json(const Json& j) {
    RingPresentation pres(j.at("n").get<int>(), j.at("d").get<int>());
    QVec coords;
    for (const Json& x : j.at("coords")) coords.push_back(rat_from_string(x.get<std::string>()));
    return make_cov(pres, j.at("i").get<long>(), std::move(coords));
}

Json boundpair_to_json(int n, int d, long i, const BoundPair& bp) {
    Json j;
    j["case"] = Json{{"n", n}, {"d", d}, {"i", i}};
    j["status"] = to_string(bp.status);
    j["lower"] = cone_to_json(bp.lower);
    j["upper"] = cone_to_json(bp.upper);
    j["certificates"] = bp.provenance;
    return j;
}

Json stable_to_json(const StableBounds& sb) {
    Json j;
    j["i"] = sb.i;
    j["m"] = sb.m;
    j["d0"] = sb.d0;
    j["delta_min"] = rat_to_string(sb.delta_min);
    j["delta_max"] = rat_to_string(sb.delta_max);
    j["M"] = sb.M;
    return j;
}

}  // namespace effcones
