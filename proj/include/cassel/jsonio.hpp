#pragma once

// JSON encoding of character data and reports. A character is
//   {"group": "GSp4" | "GU22" | "GSO42" | "GL4",
//    "values": ["p/q" | "symbol", ...],
//    "q": "p/q" | "symbol"}
// Rational-looking strings become exact constants, anything else becomes a
// named free symbol; all entries of one character share a symbol context.

#include <json.hpp>

#include "cassel/lfactor.hpp"
#include "cassel/theta.hpp"

namespace cassel {

using nlohmann::json;

inline bool looks_rational(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool slash_seen = false, digit_after_slash = false, digit_before = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (slash_seen || !digit_before) return false;
            slash_seen = true;
            continue;
        }
        if (s[i] < '0' || s[i] > '9') return false;
        (slash_seen ? digit_after_slash : digit_before) = true;
    }
    return digit_before && (!slash_seen || digit_after_slash);
}

inline Group group_from_name(const std::string& s) {
    if (s == "GSp4") return Group::GSp4;
    if (s == "GU22") return Group::GU22;
    if (s == "GSO42") return Group::GSO42;
    if (s == "GL4") return Group::GL4;
    throw constraint_error("unknown group tag", s);
}

inline CharacterTriple character_from_json(const json& j) {
    if (!j.contains("group") || !j.contains("values") || !j.contains("q"))
        throw constraint_error("malformed character", "need group, values, q");
    CharacterTriple chi;
    chi.group = group_from_name(j.at("group").get<std::string>());
    std::vector<std::string> raw;
    for (const auto& v : j.at("values")) raw.push_back(v.get<std::string>());
    raw.push_back(j.at("q").get<std::string>());
    size_t expected = chi.group == Group::GL4 ? 4u : 3u;
    if (raw.size() != expected + 1)
        throw constraint_error("malformed character", "wrong number of values");
    // collect symbols in order of first appearance
    std::vector<std::string> symbols;
    for (const auto& s : raw)
        if (!looks_rational(s) &&
            std::find(symbols.begin(), symbols.end(), s) == symbols.end())
            symbols.push_back(s);
    int arity = static_cast<int>(symbols.size());
    auto to_value = [&](const std::string& s) {
        if (looks_rational(s))
            return RationalFn::constant(arity, Rat::from_string(s));
        auto at = std::find(symbols.begin(), symbols.end(), s) - symbols.begin();
        return RationalFn::var(arity, static_cast<int>(at));
    };
    for (size_t i = 0; i < expected; ++i) chi.values.push_back(to_value(raw[i]));
    chi.q = to_value(raw.back());
    chi.var_names = symbols;
    return chi;
}

inline json character_to_json(const CharacterTriple& chi) {
    json j;
    j["group"] = group_name(chi.group);
    json vals = json::array();
    for (const auto& v : chi.values) {
        auto r = v.as_rat();
        vals.push_back(r ? r->to_string() : v.to_string(chi.var_names));
    }
    j["values"] = vals;
    auto qr = chi.q.as_rat();
    j["q"] = qr ? qr->to_string() : chi.q.to_string(chi.var_names);
    return j;
}

inline json shalika_report_to_json(const ShalikaReport& r) {
    json j;
    j["exists"] = r.exists;
    j["unique"] = r.unique;
    j["via"] = r.via == ShalikaRoute::ThetaDihedral ? "theta-dihedral" : "mackey-open-orbit";
    j["case_tag"] = theta_case_name(r.case_tag);
    j["conditions"] = {{"cond1", r.cond1}, {"cond2", r.cond2}};
    j["theta_source"] = character_to_json(r.theta_source);
    j["xi"] = character_to_json(r.xi);
    json orbits = json::array();
    for (int i : closed_orbit_contributions(r.xi)) orbits.push_back(i);
    j["closed_orbit_contributions"] = orbits;
    return j;
}

inline json identity_report_to_json(const IdentityReport& r) {
    json j;
    j["case"] = r.cs_case == CSCase::Inert ? "inert" : "split";
    j["order"] = r.order;
    j["equal"] = r.equal;
    if (r.first_mismatch) {
        j["first_mismatch"] = *r.first_mismatch;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
    }
    return j;
}

}  // namespace cassel
