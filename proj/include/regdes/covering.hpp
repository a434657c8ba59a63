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

#ifndef REGDES_COVERING_HPP
#define REGDES_COVERING_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "regdes/dessin.hpp"
#include "regdes/group.hpp"

namespace regdes {

/// Quotient group together with the natural projection map.
struct QuotientData {
    GroupPtr quotient;
    std::function<GroupElement(const GroupElement&)> project;
};

/// G/N with projection; structural subgroups quotient onto cyclic models.
inline QuotientData make_quotient(GroupPtr parent, NormalSubgroupPtr N) {
    switch (N->kind()) {
        case NormalSubgroup::Kind::Enumerated: {
            GroupPtr q = Group::quotient_of(parent, N);
            return {q, [N](const GroupElement& g) { return N->coset_rep(g); }};
        }
        case NormalSubgroup::Kind::WreathBase: {
            const auto& m = std::get<WreathModel>(parent->model());
            GroupPtr q = Group::cyclic(m.k);
            return {q, [](const GroupElement& g) {
                        return GroupElement(CyclicElt{std::get<WreathElt>(g.v).top});
                    }};
        }
        case NormalSubgroup::Kind::AffineTranslations: {
            const auto& m = std::get<Affine1Model>(parent->model());
            GroupPtr q = Group::cyclic(m.ell);
            return {q, [](const GroupElement& g) {
                        return GroupElement(CyclicElt{std::get<Affine1Elt>(g.v).mult});
                    }};
        }
        case NormalSubgroup::Kind::SemiMatBase: {
            const auto& m = std::get<SemiMat2Model>(parent->model());
            GroupPtr q = Group::cyclic(m.field->f());
            return {q, [](const GroupElement& g) {
                        return GroupElement(CyclicElt{std::get<SemiMat2Elt>(g.v).frob});
                    }};
        }
    }
    throw std::logic_error("unreachable");
}

/// The algebraic quotient D/N = D(G/N, bN, wN) of Definition 1.1(ii).
inline RegularDessin algebraic_quotient(const RegularDessin& D, NormalSubgroupPtr N,
                                        std::uint64_t cap = kEnumCap) {
    QuotientData q = make_quotient(D.group, N);
    return make_dessin(q.quotient, q.project(D.b), q.project(D.w),
                       /*asserted_by_construction=*/true, cap);
}

namespace detail {

/// Per-element orbit representatives for the N-action by right multiplication.
struct OrbitCanon {
    const RegularDessin& D;
    std::vector<GroupElement> nelems;
    std::vector<GroupElement> sub_b, sub_w;

    OrbitCanon(const RegularDessin& d, const NormalSubgroup& N, std::uint64_t cap)
        : D(d), sub_b(cyclic_subgroup(*d.group, d.b)), sub_w(cyclic_subgroup(*d.group, d.w)) {
        if (N.kind() == NormalSubgroup::Kind::Enumerated) {
            nelems = N.elements();
        } else {
            for (const auto& g : d.group->enumeration(cap).elems)
                if (N.contains(g)) nelems.push_back(g);
        }
    }

    GroupElement rep(const GroupElement& g,
                     const std::function<GroupElement(const GroupElement&)>& canon) const {
        std::optional<GroupElement> best;
        for (const auto& n : nelems) {
            GroupElement c = canon(D.group->mul(g, n));
            if (!best || c < *best) best = c;
        }
        return *best;
    }
    GroupElement black(const GroupElement& g) const {
        return rep(g, [&](const GroupElement& h) { return coset_min(*D.group, sub_b, h); });
    }
    GroupElement white(const GroupElement& g) const {
        return rep(g, [&](const GroupElement& h) { return coset_min(*D.group, sub_w, h); });
    }
    GroupElement edge(const GroupElement& g) const {
        return rep(g, [](const GroupElement& h) { return h; });
    }
    GroupElement face(const GroupElement& g) const {
        return rep(g, [&](const GroupElement& h) { return face_canonical_rep(D, h); });
    }
};

}  // namespace detail

/// The geometric quotient of Definition 1.1(i): N-orbit contraction of the
/// explicit incidence structure, with per-orbit sizes for the preimage counts
/// of Lemmas 3.3/3.4.
struct GeometricQuotient {
    std::vector<GroupElement> black_orbits, white_orbits, edge_orbits, face_orbits;
    std::map<GroupElement, std::uint64_t> black_size, white_size, edge_size, face_size;
    // incidence, indexed per edge orbit
    std::vector<std::uint32_t> edge_black, edge_white;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_faces;
};

inline GeometricQuotient geometric_quotient(const RegularDessin& D, const NormalSubgroup& N,
                                            std::uint64_t cap = kEnumCap) {
    const Group& G = *D.group;
    const auto& en = G.enumeration(cap);
    detail::OrbitCanon oc(D, N, cap);

    GeometricQuotient Q;
    std::map<GroupElement, std::uint32_t> bidx, widx, eidx, fidx;
    std::map<GroupElement, std::set<GroupElement>> bmem, wmem, emem, fmem;
    for (const auto& g : en.elems) {
        GroupElement ob = oc.black(g), ow = oc.white(g), oe = oc.edge(g), of = oc.face(g);
        if (!bidx.count(ob)) {
            bidx.emplace(ob, static_cast<std::uint32_t>(Q.black_orbits.size()));
            Q.black_orbits.push_back(ob);
        }
        if (!widx.count(ow)) {
            widx.emplace(ow, static_cast<std::uint32_t>(Q.white_orbits.size()));
            Q.white_orbits.push_back(ow);
        }
        if (!eidx.count(oe)) {
            eidx.emplace(oe, static_cast<std::uint32_t>(Q.edge_orbits.size()));
            Q.edge_orbits.push_back(oe);
        }
        if (!fidx.count(of)) {
            fidx.emplace(of, static_cast<std::uint32_t>(Q.face_orbits.size()));
            Q.face_orbits.push_back(of);
        }
        bmem[ob].insert(detail::coset_min(G, oc.sub_b, g));
        wmem[ow].insert(detail::coset_min(G, oc.sub_w, g));
        emem[oe].insert(g);
        fmem[of].insert(face_canonical_rep(D, g));
    }
    for (const auto& [k, s] : bmem) Q.black_size[k] = s.size();
    for (const auto& [k, s] : wmem) Q.white_size[k] = s.size();
    for (const auto& [k, s] : emem) Q.edge_size[k] = s.size();
    for (const auto& [k, s] : fmem) Q.face_size[k] = s.size();

    Q.edge_black.resize(Q.edge_orbits.size());
    Q.edge_white.resize(Q.edge_orbits.size());
    Q.edge_faces.resize(Q.edge_orbits.size());
    for (std::size_t i = 0; i < Q.edge_orbits.size(); ++i) {
        const GroupElement& g = Q.edge_orbits[i];
        Q.edge_black[i] = bidx.at(oc.black(g));
        Q.edge_white[i] = widx.at(oc.white(g));
        Q.edge_faces[i] = {fidx.at(oc.face(g)), fidx.at(oc.face(G.mul(G.inv(D.w), g)))};
    }
    return Q;
}

/// Theorem 3.1: the geometric and algebraic quotients agree. Checks equal
/// counts and an incidence-preserving bijection induced by the projection.
inline bool verify_quotient_theorem(const RegularDessin& D, NormalSubgroupPtr N,
                                    std::uint64_t cap = kEnumCap) {
    const Group& G = *D.group;
    GeometricQuotient GQ = geometric_quotient(D, *N, cap);
    QuotientData qd = make_quotient(D.group, N);
    RegularDessin AD = algebraic_quotient(D, N, cap);
    const Group& Q = *AD.group;

    if (bigint(GQ.black_orbits.size()) != AD.black) return false;
    if (bigint(GQ.white_orbits.size()) != AD.white) return false;
    if (bigint(GQ.edge_orbits.size()) != AD.edges) return false;
    if (bigint(GQ.face_orbits.size()) != AD.faces) return false;

    detail::OrbitCanon oc(D, *N, cap);
    const auto qsub_b = cyclic_subgroup(Q, AD.b);
    const auto qsub_w = cyclic_subgroup(Q, AD.w);

    // The projection must send every orbit to a single quotient object,
    // distinct orbits to distinct objects; incidence then carries over by
    // construction of the maps on edges.
    std::map<GroupElement, GroupElement> bmap, wmap, emap, fmap;
    auto consistent = [](std::map<GroupElement, GroupElement>& mp, const GroupElement& key,
                         const GroupElement& val) {
        auto [it, inserted] = mp.emplace(key, val);
        return inserted || it->second == val;
    };
    for (const auto& g : G.enumeration(cap).elems) {
        GroupElement gbar = qd.project(g);
        if (!consistent(emap, oc.edge(g), gbar)) return false;
        if (!consistent(bmap, oc.black(g), detail::coset_min(Q, qsub_b, gbar))) return false;
        if (!consistent(wmap, oc.white(g), detail::coset_min(Q, qsub_w, gbar))) return false;
        if (!consistent(fmap, oc.face(g), face_canonical_rep(AD, gbar))) return false;
    }
    auto injective = [](const std::map<GroupElement, GroupElement>& mp) {
        std::set<GroupElement> img;
        for (const auto& [k, v] : mp) img.insert(v);
        return img.size() == mp.size();
    };
    if (!injective(bmap) || !injective(wmap) || !injective(emap) || !injective(fmap))
        return false;

    // incidence preservation on the geometric side vs the quotient dessin
    for (std::size_t i = 0; i < GQ.edge_orbits.size(); ++i) {
        const GroupElement gbar = emap.at(GQ.edge_orbits[i]);
        if (bmap.at(GQ.black_orbits[GQ.edge_black[i]]) != detail::coset_min(Q, qsub_b, gbar))
            return false;
        if (wmap.at(GQ.white_orbits[GQ.edge_white[i]]) != detail::coset_min(Q, qsub_w, gbar))
            return false;
        const auto [f1, f2] = GQ.edge_faces[i];
        auto [qf1, qf2] = faces_of_edge(AD, gbar);
        std::multiset<GroupElement> got{fmap.at(GQ.face_orbits[f1]), fmap.at(GQ.face_orbits[f2])};
        std::multiset<GroupElement> want{qf1, qf2};
        if (got != want) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// covering classification (Definition 1.3, Theorem 3.6)

enum class MinimalFlag { No, Yes, Unknown };

/// Full classification of the covering D -> D_N.
struct CoveringReport {
    bigint sheets;
    bool smooth = false, quasi_smooth = false, totally_branched = false;
    MinimalFlag minimal = MinimalFlag::Unknown;
    std::uint64_t e_b = 1, e_w = 1, e_f = 1;  // |<b> ∩ N| etc.
    bool black_ramified = false, white_ramified = false, face_ramified = false;
    bigint ram_points;
    bigint chi_top, chi_bottom;
    std::uint64_t quot_ord_b = 0, quot_ord_w = 0, quot_ord_f = 0;
};

inline CoveringReport classify_covering(const RegularDessin& D, NormalSubgroupPtr N,
                                        std::uint64_t cap = kEnumCap) {
    const Group& G = *D.group;
    CoveringReport R;
    R.sheets = N->size();
    R.e_b = cyclic_intersection_size(G, D.b, *N);
    R.e_w = cyclic_intersection_size(G, D.w, *N);
    R.e_f = cyclic_intersection_size(G, D.bw, *N);
    R.smooth = R.e_b == 1 && R.e_w == 1 && R.e_f == 1;
    R.quasi_smooth = R.e_b == 1 && R.e_w == 1;
    R.totally_branched =
        bigint(R.e_b) == R.sheets && bigint(R.e_w) == R.sheets && bigint(R.e_f) == R.sheets;
    R.chi_top = D.euler_characteristic();

    RegularDessin DN = algebraic_quotient(D, N, cap);
    R.chi_bottom = DN.euler_characteristic();
    R.quot_ord_b = DN.ord_b;
    R.quot_ord_w = DN.ord_w;
    R.quot_ord_f = DN.ord_bw;
    // the image orders drop by exactly the intersection sizes
    if (DN.ord_b != D.ord_b / R.e_b || DN.ord_w != D.ord_w / R.e_w ||
        DN.ord_bw != D.ord_bw / R.e_f)
        throw std::logic_error("classify_covering: quotient orders inconsistent");

    // ramification per the proof of Theorem 3.6: i with black/<b>, j with
    // white/<w>, k with faces/<bw>
    R.black_ramified = R.e_b > 1;
    R.white_ramified = R.e_w > 1;
    R.face_ramified = R.e_f > 1;
    const bigint qorder = DN.edges;  // |G/N|
    R.ram_points = (R.black_ramified ? qorder / DN.ord_b : bigint(0)) +
                   (R.white_ramified ? qorder / DN.ord_w : bigint(0)) +
                   (R.face_ramified ? qorder / DN.ord_bw : bigint(0));

    // minimality is best-effort: needs an enumerable parent and a subgroup
    // small enough to sweep; otherwise reported unknown
    constexpr std::uint64_t kMinimalBudget = 4096;
    if (G.enumerable(cap) && R.sheets <= kMinimalBudget) {
        if (N->kind() == NormalSubgroup::Kind::Enumerated) {
            R.minimal = is_minimal_normal(D.group, *N, cap) ? MinimalFlag::Yes : MinimalFlag::No;
        } else {
            std::vector<GroupElement> nel;
            for (const auto& g : G.enumeration(cap).elems)
                if (N->contains(g)) nel.push_back(g);
            auto NE = NormalSubgroup::enumerated(D.group, std::move(nel), false);
            R.minimal = is_minimal_normal(D.group, *NE, cap) ? MinimalFlag::Yes : MinimalFlag::No;
        }
    }
    return R;
}

/// Exact-rational verdict on |N| <= chi/chi_N <= 42|N| - 41 (Lemma 3.5,
/// Theorem 3.8), as integer cross-multiplications.
struct ChiBoundsVerdict {
    bool lower_ok = false;        // chi <= |N| * chi_N, i.e. ratio >= |N|
    bool lower_equality = false;  // iff smooth
    bool upper_applicable = false;  // requires chi_N < 0
    bool upper_ok = false;          // ratio <= 42|N| - 41
    bool upper_equality = false;    // iff totally branched and quotient Hurwitz
    std::string ratio;              // "a/b" in lowest terms (sign-normalized)
};

inline ChiBoundsVerdict check_chi_bounds(const CoveringReport& R) {
    ChiBoundsVerdict v;
    const bigint &chi = R.chi_top, &chiN = R.chi_bottom;
    v.lower_ok = chi <= R.sheets * chiN;
    v.lower_equality = chi == R.sheets * chiN;
    v.upper_applicable = chiN < 0;
    if (v.upper_applicable) {
        const bigint bound = 42 * R.sheets - 41;
        // chi/chiN <= bound with chiN < 0 <=> chi >= bound * chiN
        v.upper_ok = chi >= bound * chiN;
        v.upper_equality = chi == bound * chiN;
    }
    bigint a = chi, b = chiN;
    if (b < 0) a = -a, b = -b;
    if (b != 0) {
        bigint g = boost::multiprecision::gcd(a < 0 ? bigint(-a) : a, b);
        if (g > 1) a /= g, b /= g;
    }
    v.ratio = a.str() + "/" + b.str();
    return v;
}

/// Definition 1.4(b): the covering group test — the three orders survive the
/// quotient, equivalently all three cyclic intersections with N are trivial.
inline bool smooth_covering_group_test(const RegularDessin& D, const NormalSubgroup& N) {
    return cyclic_intersection_size(*D.group, D.b, N) == 1 &&
           cyclic_intersection_size(*D.group, D.w, N) == 1 &&
           cyclic_intersection_size(*D.group, D.bw, N) == 1;
}

/// Lemma 6.2 for SL(2,q): smoothness of the Schur covering is triviality of
/// the three center intersections; for odd q this is oddness of all orders.
inline bool schur_smooth_test(const RegularDessin& D) {
    const auto* mm = std::get_if<Mat2Model>(&D.group->model());
    if (!mm) throw std::invalid_argument("schur_smooth_test: expected an SL(2,q) model");
    if (mm->field->q() < 4)
        throw std::invalid_argument("schur_smooth_test: SL(2,q) is not quasisimple for q < 4");
    if (mm->field->p() == 2) return true;  // trivial center
    return D.ord_b % 2 == 1 && D.ord_w % 2 == 1 && D.ord_bw % 2 == 1;
}

struct HurwitzVerdict {
    bool holds = false;
    bool equality = false;
    bigint bound;  // 42|chi|
};

/// Lemma 3.7: |G| <= 42|chi| with equality exactly on Hurwitz signatures.
inline HurwitzVerdict hurwitz_bound_check(const RegularDessin& D) {
    if (D.euler_characteristic() >= 0)
        throw std::domain_error("hurwitz_bound_check: requires chi < 0");
    HurwitzVerdict v;
    v.bound = 42 * (-D.euler_characteristic());
    v.holds = D.edges <= v.bound;
    v.equality = D.edges == v.bound;
    return v;
}

}  // namespace regdes

#endif  // REGDES_COVERING_HPP
