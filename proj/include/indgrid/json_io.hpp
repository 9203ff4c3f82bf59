/**
 * JSON and CSV forms of profiles, descriptors and verification records.
 *
 *   profile     {"coeff": "integers", "betti": {"5": 3}, "torsion": {"2": [2]}}
 *   descriptor  {"shape": "point"} | {"shape": "wedge", "spheres": {"10": 1}}
 */
#pragma once

#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "homology.hpp"
#include "predictor.hpp"
#include "verification.hpp"

namespace indgrid {

using Json = nlohmann::json;

namespace json_detail {

inline Json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline BigInt big_from_json(const Json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

inline int dim_key(const std::string& key) {
    std::size_t used = 0;
    const int d = std::stoi(key, &used);
    if (used != key.size()) throw ParseError("bad dimension key '" + key + "'");
    return d;
}

} // namespace json_detail

inline Json to_json(const HomologyProfile& p) {
    Json betti = Json::object(), torsion = Json::object();
    for (const auto& [d, b] : p.betti) betti[std::to_string(d)] = b;
    for (const auto& [d, t] : p.torsion) {
        Json list = Json::array();
        for (const auto& x : t) list.push_back(json_detail::big_to_json(x));
        torsion[std::to_string(d)] = std::move(list);
    }
    return Json{{"coeff", coefficients_name(p.coeff)}, {"betti", betti}, {"torsion", torsion}};
}

inline HomologyProfile profile_from_json(const Json& j) {
    HomologyProfile p;
    p.coeff = parse_coefficients(j.at("coeff").get<std::string>());
    for (const auto& [k, v] : j.at("betti").items()) p.betti[json_detail::dim_key(k)] = v.get<std::uint64_t>();
    for (const auto& [k, v] : j.at("torsion").items()) {
        auto& t = p.torsion[json_detail::dim_key(k)];
        for (const auto& x : v) t.push_back(json_detail::big_from_json(x));
    }
    return p;
}

inline Json to_json(const WedgeDescriptor& d) {
    if (d.is_point()) return Json{{"shape", "point"}};
    Json spheres = Json::object();
    for (const auto& [dim, c] : d.sphere_counts()) spheres[std::to_string(dim)] = c;
    return Json{{"shape", "wedge"}, {"spheres", spheres}};
}

inline WedgeDescriptor descriptor_from_json(const Json& j) {
    const auto shape = j.at("shape").get<std::string>();
    if (shape == "point") return WedgeDescriptor::point();
    if (shape != "wedge") throw ParseError("unknown descriptor shape '" + shape + "'");
    WedgeDescriptor d;
    for (const auto& [k, v] : j.at("spheres").items()) d.add(json_detail::dim_key(k), v.get<std::uint64_t>());
    if (d.is_point()) throw ParseError("wedge descriptor without spheres");
    return d;
}

inline Json to_json(const VerificationRecord& r) {
    return Json{{"spec", r.spec.to_string()},
                {"predicted", to_json(r.predicted)},
                {"computed", r.computed ? to_json(*r.computed) : Json(nullptr)},
                {"method", r.method},
                {"free_certified", r.free_certified},
                {"verdict", verdict_name(r.verdict)},
                {"reason", r.reason},
                {"ms", r.wall_ms}};
}

inline VerificationRecord record_from_json(const Json& j) {
    VerificationRecord r;
    r.spec = FamilySpec::parse(j.at("spec").get<std::string>());
    r.predicted = descriptor_from_json(j.at("predicted"));
    if (!j.at("computed").is_null()) r.computed = profile_from_json(j.at("computed"));
    r.method = j.at("method").get<std::string>();
    r.free_certified = j.at("free_certified").get<bool>();
    const auto v = j.at("verdict").get<std::string>();
    if (v == "match")
        r.verdict = Verdict::Match;
    else if (v == "mismatch")
        r.verdict = Verdict::Mismatch;
    else if (v == "skipped")
        r.verdict = Verdict::Skipped;
    else
        throw ParseError("unknown verdict '" + v + "'");
    r.reason = j.at("reason").get<std::string>();
    r.wall_ms = j.at("ms").get<double>();
    return r;
}

inline Json to_json(const std::vector<VerificationRecord>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    return a;
}

/// Compact one-line form, e.g. "H5:Z^3 H2:Z/2" or "0".
inline std::string profile_summary(const HomologyProfile& p) {
    std::string s;
    std::map<int, std::string> parts;
    for (const auto& [d, b] : p.betti) parts[d] += (p.coeff == Coefficients::Mod2 ? "F2^" : p.coeff == Coefficients::Rationals ? "Q^" : "Z^") + std::to_string(b);
    for (const auto& [d, t] : p.torsion)
        for (const auto& x : t) parts[d] += (parts[d].empty() ? "" : "+") + std::string("Z/") + x.str();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) s += (s.empty() ? "" : " ") + ("H" + std::to_string(it->first) + ":" + it->second);
    return s.empty() ? "0" : s;
}

inline void write_csv(std::ostream& out, const std::vector<VerificationRecord>& rs) {
    out << "spec,predicted,computed,method,verdict,ms\n";
    for (const auto& r : rs) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
        out << r.spec.to_string() << ',' << r.predicted.to_string() << ','
            << (r.computed ? profile_summary(*r.computed) : std::string()) << ',' << r.method << ','
            << verdict_name(r.verdict) << ',' << ms << '\n';
    }
}

} // namespace indgrid
