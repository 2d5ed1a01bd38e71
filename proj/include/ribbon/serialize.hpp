#pragma once

// JSON forms: a polynomial is {"min_deg": k, "coeffs": [...]}; polynomial sets
// are {"rsets": [{"r": r, "polys": [{"poly": ..., "text": ..., "witness": ...}]}]}.

#include <string>
#include <vector>

#include <json.hpp>

#include "ribbon/code.hpp"
#include "ribbon/enumeration.hpp"
#include "ribbon/error.hpp"
#include "ribbon/laurent.hpp"

namespace ribbon {

inline void to_json(nlohmann::json& j, const LaurentPoly& p)
{
    j = nlohmann::json{{"min_deg", p.min_deg()}, {"coeffs", p.coeffs()}};
}

inline void from_json(const nlohmann::json& j, LaurentPoly& p)
{
    p = LaurentPoly(j.at("coeffs").get<std::vector<Coeff>>(), j.at("min_deg").get<int>());
}

inline nlohmann::json rsets_to_json(const std::vector<RSet>& sets)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : sets) {
        nlohmann::json polys = nlohmann::json::array();
        for (const auto& [p, w] : s.witnesses) {
            polys.push_back({{"poly", p.poly()}, {"text", to_string(p.poly())}, {"witness", to_string(w)}});
        }
        arr.push_back({{"r", s.r}, {"polys", polys}});
    }
    return {{"rsets", arr}};
}

inline std::vector<RSet> rsets_from_json(const nlohmann::json& j)
{
    std::vector<RSet> out;
    try {
        for (const auto& s : j.at("rsets")) {
            RSet set;
            set.r = s.at("r").get<int>();
            for (const auto& p : s.at("polys")) {
                const LaurentPoly poly = p.at("poly").get<LaurentPoly>();
                if (poly.is_zero()) throw DataError("rsets: zero polynomial");
                RibbonCode w = p.contains("witness") ? parse_code(p.at("witness").get<std::string>()) : RibbonCode();
                set.witnesses.emplace(canonicalize(poly), std::move(w));
            }
            out.push_back(std::move(set));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("rsets: malformed JSON: ") + e.what());
    }
    return out;
}

}  // namespace ribbon
