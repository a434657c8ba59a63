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

#ifndef REGDES_DESSIN_HPP
#define REGDES_DESSIN_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "regdes/group.hpp"

namespace regdes {

struct NotGenerating : std::runtime_error {
    bigint closure_size;
    NotGenerating(const std::string& what, bigint sz)
        : std::runtime_error(what), closure_size(std::move(sz)) {}
};

/// The coset regular dessin D(G, b, w): edges are group elements, black
/// vertices the cosets <b>g, white vertices <w>g, faces the boundary-cycle
/// translates C(b,w)g. Signature and counts are cached at construction.
class RegularDessin {
  public:
    GroupPtr group;
    GroupElement b, w, bw;
    std::uint64_t ord_b, ord_w, ord_bw;  // (l, m, n) signature
    bigint edges, black, white, faces;
    bigint chi_val, genus_val;
    bool generation_certified_by_construction = false;

    const std::uint64_t& l() const { return ord_b; }

    std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> signature() const {
        return {ord_b, ord_w, ord_bw};
    }
    const bigint& euler_characteristic() const { return chi_val; }
    const bigint& genus() const { return genus_val; }

    /// Unicellular iff G = <bw> (Lemma 2.4(ii)); equivalently |bw| = |G|.
    bool is_unicellular() const { return bigint(ord_bw) == group->order(); }

    bool is_hurwitz() const {
        std::multiset<std::uint64_t> sig{ord_b, ord_w, ord_bw};
        return sig == std::multiset<std::uint64_t>{2, 3, 7};
    }
};

/// Build D(G,b,w). For enumerable groups the generation requirement <b,w> = G
/// is checked by closure; structural groups must certify it by construction.
inline RegularDessin make_dessin(GroupPtr G, const GroupElement& b, const GroupElement& w,
                                 bool asserted_by_construction = false,
                                 std::uint64_t cap = kEnumCap) {
    RegularDessin D;
    D.group = G;
    D.b = b;
    D.w = w;
    D.bw = G->mul(b, w);
    if (G->enumerable(cap)) {
        const auto closure = generated_subgroup(*G, {b, w}, cap);
        if (bigint(closure.size()) != G->order(cap))
            throw NotGenerating("make_dessin: <b,w> has index > 1 in G", bigint(closure.size()));
    } else if (!asserted_by_construction) {
        throw CapExceeded("make_dessin: group not enumerable and generation not certified");
    } else {
        D.generation_certified_by_construction = true;
    }
    D.ord_b = G->element_order(b);
    D.ord_w = G->element_order(w);
    D.ord_bw = G->element_order(D.bw);
    const bigint n = G->order(cap);
    D.edges = n;
    D.black = n / D.ord_b;
    D.white = n / D.ord_w;
    D.faces = n / D.ord_bw;
    D.chi_val = D.black + D.white - D.edges + D.faces;
    if (D.chi_val % 2 != 0)
        throw std::logic_error("make_dessin: Euler characteristic came out odd");
    D.genus_val = (2 - D.chi_val) / 2;
    if (D.genus_val < 0) throw std::logic_error("make_dessin: negative genus");
    return D;
}

/// A face boundary cycle: the 2|bw| edge labels starting at a representative,
/// ordered 1, b^{-1}, (bw)^{-1}, b^{-1}(bw)^{-1}, ... then translated. Arcs at
/// even positions run white->black, odd positions black->white.
struct FaceCycle {
    GroupElement canonical;  // minimal element of <bw> g
    std::vector<GroupElement> edges;

    friend bool operator==(const FaceCycle& a, const FaceCycle& b) {
        return a.canonical == b.canonical;
    }
    friend bool operator<(const FaceCycle& a, const FaceCycle& b) {
        return a.canonical < b.canonical;
    }
};

/// Minimal element of the coset <bw> g, the face identity criterion of
/// Lemma 2.1 (Cg1 = Cg2 iff g1 g2^{-1} in <bw>).
inline GroupElement face_canonical_rep(const RegularDessin& D, const GroupElement& g) {
    const Group& G = *D.group;
    GroupElement best = g;
    GroupElement cur = g;
    const GroupElement bw = D.bw;
    for (std::uint64_t i = 1; i < D.ord_bw; ++i) {
        cur = G.mul(bw, cur);
        if (cur < best) best = cur;
    }
    return best;
}

inline FaceCycle boundary_cycle(const RegularDessin& D, const GroupElement& g) {
    const Group& G = *D.group;
    FaceCycle C;
    C.canonical = face_canonical_rep(D, g);
    const GroupElement binv = G.inv(D.b);
    const GroupElement bwinv = G.inv(D.bw);
    GroupElement cur = C.canonical;
    C.edges.reserve(2 * D.ord_bw);
    for (std::uint64_t i = 0; i < D.ord_bw; ++i) {
        C.edges.push_back(cur);               // white -> black arc
        C.edges.push_back(G.mul(binv, cur));  // black -> white arc
        cur = G.mul(bwinv, cur);
    }
    return C;
}

/// All |G|/|bw| distinct boundary cycles.
inline std::vector<FaceCycle> face_set(const RegularDessin& D, std::uint64_t cap = kEnumCap) {
    const auto& en = D.group->enumeration(cap);
    std::set<GroupElement> reps;
    for (const auto& g : en.elems) reps.insert(face_canonical_rep(D, g));
    std::vector<FaceCycle> faces;
    faces.reserve(reps.size());
    for (const auto& r : reps) faces.push_back(boundary_cycle(D, r));
    return faces;
}

/// The two faces incident with edge g: C g and C w^{-1} g (Definition 2.2).
inline std::pair<GroupElement, GroupElement> faces_of_edge(const RegularDessin& D,
                                                           const GroupElement& g) {
    return {face_canonical_rep(D, g),
            face_canonical_rep(D, D.group->mul(D.group->inv(D.w), g))};
}

/// Underlying bi-coset graph BiCos(G, <b>, <w>).
struct BiCosetGraph {
    std::vector<GroupElement> black, white;      // canonical coset representatives
    std::vector<GroupElement> edges;             // group elements
    std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints;  // (black, white) per edge
    std::uint64_t multiplicity = 1;              // |<b> ∩ <w>|
    bool complete_bipartite = false;             // iff G = <b><w>
};

namespace detail {

inline GroupElement coset_min(const Group& G, const std::vector<GroupElement>& sub,
                              const GroupElement& g) {
    GroupElement best = G.mul(sub.front(), g);
    for (std::size_t i = 1; i < sub.size(); ++i) {
        GroupElement cand = G.mul(sub[i], g);
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace detail

inline BiCosetGraph underlying_graph(const RegularDessin& D, std::uint64_t cap = kEnumCap) {
    const Group& G = *D.group;
    const auto& en = G.enumeration(cap);
    const auto sub_b = cyclic_subgroup(G, D.b);
    const auto sub_w = cyclic_subgroup(G, D.w);

    BiCosetGraph Ga;
    std::map<GroupElement, std::uint32_t> bidx, widx;
    for (const auto& g : en.elems) {
        GroupElement cb = detail::coset_min(G, sub_b, g);
        if (!bidx.count(cb)) {
            bidx.emplace(cb, static_cast<std::uint32_t>(Ga.black.size()));
            Ga.black.push_back(cb);
        }
        GroupElement cw = detail::coset_min(G, sub_w, g);
        if (!widx.count(cw)) {
            widx.emplace(cw, static_cast<std::uint32_t>(Ga.white.size()));
            Ga.white.push_back(cw);
        }
    }
    Ga.edges = en.elems;
    Ga.endpoints.reserve(en.elems.size());
    for (const auto& g : en.elems)
        Ga.endpoints.emplace_back(bidx.at(detail::coset_min(G, sub_b, g)),
                                  widx.at(detail::coset_min(G, sub_w, g)));
    std::uint64_t inter = 0;
    std::unordered_set<GroupElement> wset(sub_w.begin(), sub_w.end());
    for (const auto& x : sub_b)
        if (wset.count(x)) ++inter;
    Ga.multiplicity = inter;
    Ga.complete_bipartite =
        bigint(sub_b.size()) * bigint(sub_w.size()) / inter == G.order(cap);
    return Ga;
}

/// Dessin isomorphism via generator-determined map extension (Lemma 2.8).
inline bool dessin_isomorphic(const RegularDessin& D1, const RegularDessin& D2,
                              std::uint64_t cap = kEnumCap) {
    if (D1.group->order(cap) != D2.group->order(cap)) return false;
    return extend_generator_map(*D1.group, D1.b, D1.w, *D2.group, D2.b, D2.w, cap).ok;
}

}  // namespace regdes

#endif  // REGDES_DESSIN_HPP
