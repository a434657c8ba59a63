/*
   Copyright 2026 The regdes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef REGDES_REPORT_HPP
#define REGDES_REPORT_HPP

#include <json.hpp>
#include <string>

#include "regdes/covering.hpp"
#include "regdes/dessin.hpp"
#include "regdes/unicellular.hpp"

namespace regdes {

using json = nlohmann::json;

/// Exact integer for JSON: a 64-bit number when it fits, a decimal string
/// beyond that. Floats never appear.
inline json json_int(const bigint& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

/// |<b> ∩ <w>| from the two power lists (works for structural models too).
inline std::uint64_t edge_multiplicity(const RegularDessin& D) {
    auto sb = cyclic_subgroup(*D.group, D.b);
    auto sw = cyclic_subgroup(*D.group, D.w);
    std::unordered_set<GroupElement> wset(sw.begin(), sw.end());
    std::uint64_t c = 0;
    for (const auto& x : sb)
        if (wset.count(x)) ++c;
    return c;
}

inline json dessin_report(const RegularDessin& D) {
    json j;
    j["group_spec"] = D.group->spec_string();
    j["b"] = D.group->format(D.b);
    j["w"] = D.group->format(D.w);
    j["signature"] = {D.ord_b, D.ord_w, D.ord_bw};
    j["counts"] = {{"black", json_int(D.black)},
                   {"white", json_int(D.white)},
                   {"edges", json_int(D.edges)},
                   {"faces", json_int(D.faces)}};
    j["chi"] = json_int(D.chi_val);
    j["genus"] = json_int(D.genus_val);
    j["unicellular"] = D.is_unicellular();
    j["hurwitz"] = D.is_hurwitz();
    j["multiplicity"] = edge_multiplicity(D);
    if (D.generation_certified_by_construction) j["generation"] = "asserted_by_construction";
    return j;
}

inline json covering_report_json(const CoveringReport& R) {
    json j;
    j["sheets"] = json_int(R.sheets);
    j["smooth"] = R.smooth;
    j["quasi_smooth"] = R.quasi_smooth;
    j["totally_branched"] = R.totally_branched;
    switch (R.minimal) {
        case MinimalFlag::Yes: j["minimal"] = true; break;
        case MinimalFlag::No: j["minimal"] = false; break;
        case MinimalFlag::Unknown: j["minimal"] = "unknown"; break;
    }
    j["e_b"] = R.e_b;
    j["e_w"] = R.e_w;
    j["e_f"] = R.e_f;
    j["ram_points"] = json_int(R.ram_points);
    j["chi"] = json_int(R.chi_top);
    j["chi_quotient"] = json_int(R.chi_bottom);
    auto v = check_chi_bounds(R);
    j["ratio"] = v.ratio;
    j["bounds"] = {{"lower_ok", v.lower_ok},
                   {"upper_ok", v.upper_applicable ? json(v.upper_ok) : json(true)},
                   {"upper_applicable", v.upper_applicable}};
    return j;
}

inline json unicellular_atlas_row(const UnicellularDescriptor& d) {
    return json{{"ell", d.ell},   {"k", d.k},           {"m", d.m},
                {"n", d.n},       {"lambda", d.lambda}, {"genus", d.genus}};
}

inline json unicellular_counting_report(std::uint64_t ell) {
    json per = json::array();
    for (std::uint64_t lambda : divisors(ell)) {
        if (p_part(lambda, 2) >= std::max<std::uint64_t>(p_part(ell, 2), 2)) continue;
        per.push_back({{"lambda", lambda}, {"count", count_U_lambda(ell, lambda)}});
    }
    auto dec = decomposition_identity(ell);
    return json{{"ell", ell},
                {"total", ell},
                {"T_size", count_T(ell)},
                {"uncolored_graphs", uncolored_graph_count(ell)},
                {"per_lambda", per},
                {"identity_ok", dec.ok}};
}

}  // namespace regdes

#endif  // REGDES_REPORT_HPP
