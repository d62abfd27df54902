#pragma once

#include <json.hpp>

#include "effcones/theorems.hpp"

namespace effcones {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits serialize as JSON numbers, larger ones as
// decimal strings; parsing accepts both.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json cone_to_json(const ConeV& c);
ConeV cone_from_json(const Json& j);

Json coneh_to_json(const ConeH& h);
ConeH coneh_from_json(const Json& j);

// {"n":..,"d":..,"codim":..,"coeffs":{"a":"num/den",...}}
Json numclass_to_json(const NumClass& a);
NumClass numclass_from_json(const Json& j);

// {"n":..,"d":..,"i":..,"coords":["num/den",...]}
Json covclass_to_json(const CovClass& c);
CovClass covclass_from_json(const Json& j);

Json boundpair_to_json(int n, int d, long i, const BoundPair& bp);

Json stable_to_json(const StableBounds& sb);

}  // namespace effcones
