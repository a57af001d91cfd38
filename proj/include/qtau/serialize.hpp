#pragma once

#include "qtau/hbar_series.hpp"
#include "qtau/partitions.hpp"
#include "qtau/poly.hpp"

#include <json.hpp>

namespace qtau {

using Json = nlohmann::ordered_json;

// Scalars serialize as: decimal strings for integers, "p/q" for rationals,
// {a, b} objects for Q(sqrt2) elements, arrays of {beta, nu, value} for
// full coefficients.  Round-trips are bit-exact.

inline Json to_json(const Rational& r) { return to_string(r); }
inline Rational rational_from_json(const Json& j) {
    return rational_from_string(j.get<std::string>());
}

inline Json to_json(const Root2Number& v) {
    return Json{{"a", to_string(v.a())}, {"b", to_string(v.b())}};
}
inline Root2Number root2_from_json(const Json& j) {
    return Root2Number(rational_from_string(j.at("a").get<std::string>()),
                       rational_from_string(j.at("b").get<std::string>()));
}

inline Json to_json(const CoeffScalar& c) {
    Json arr = Json::array();
    for (const auto& [key, val] : c.terms())
        arr.push_back(Json{{"beta", key.beta}, {"nu", key.nu}, {"value", to_json(val)}});
    return arr;
}
inline CoeffScalar coeff_scalar_from_json(const Json& j) {
    CoeffScalar c;
    for (const auto& e : j)
        c += CoeffScalar::monomial(root2_from_json(e.at("value")), e.at("beta").get<int>(),
                                   e.at("nu").get<int>());
    return c;
}

inline Json to_json(const OddMonomial& m) {
    Json exps = Json::array();
    for (const auto& [k, e] : m.factors()) exps.push_back(Json::array({k, e}));
    return exps;
}
inline OddMonomial monomial_from_json(const Json& j) {
    std::vector<OddMonomial::Factor> fs;
    for (const auto& f : j) fs.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
    return OddMonomial::of(std::move(fs));
}

// Cache line schema: {key, weight_cap, terms:[{exps:[[k,e],...], coeff:...}]}.
inline Json poly_to_json(const PolyQ& p, const std::string& key) {
    Json j;
    j["key"] = key;
    j["weight_cap"] = p.weight_cap();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"exps", to_json(m)}, {"coeff", to_json(c)}});
    j["terms"] = std::move(terms);
    return j;
}
inline PolyQ poly_from_json(const Json& j) {
    PolyQ p(j.at("weight_cap").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(monomial_from_json(t.at("exps")), rational_from_json(t.at("coeff")));
    return p;
}

// FNV-1a, used as the cache integrity hash.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace qtau
