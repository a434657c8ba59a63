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

#include <catch2/catch_amalgamated.hpp>

#include "regdes/covering.hpp"

using namespace regdes;

namespace {

GroupElement sl2_elt(const GroupPtr& G, std::int64_t a, std::int64_t b, std::int64_t c,
                     std::int64_t d) {
    const auto& F = std::get<Mat2Model>(G->model()).field;
    return Mat2Elt{{F->from_int(a), F->from_int(b), F->from_int(c), F->from_int(d)}};
}

RegularDessin quaternion_dessin(std::uint32_t m) {
    auto G = Group::dicyclic(4 * m);
    return make_dessin(G, DicyclicElt{1, 1}, G->inv(DicyclicElt{0, 1}));
}

NormalSubgroupPtr center_of(const RegularDessin& D) {
    return NormalSubgroup::enumerated(D.group, center_elements(*D.group));
}


}  // namespace

TEST_CASE("trivial and full quotients", "[covering]") {
    auto D = quaternion_dessin(2);
    auto T = NormalSubgroup::trivial(D.group);
    auto DT = algebraic_quotient(D, T);
    CHECK(dessin_isomorphic(D, DT));
    auto RT = classify_covering(D, T);
    CHECK(RT.smooth);
    CHECK(RT.sheets == 1);
    CHECK(RT.ram_points == 0);

    // N = G: K_{1,1} on the sphere
    auto full = NormalSubgroup::enumerated(D.group, D.group->enumeration().elems, false);
    auto DF = algebraic_quotient(D, full);
    CHECK(DF.black == 1);
    CHECK(DF.white == 1);
    CHECK(DF.edges == 1);
    CHECK(DF.faces == 1);
    CHECK(DF.euler_characteristic() == 2);
}

TEST_CASE("quaternion center quotient: Example 3.2", "[covering]") {
    auto D = quaternion_dessin(2);
    auto N = center_of(D);
    REQUIRE(N->size() == 2);

    auto R = classify_covering(D, N);
    CHECK(R.e_b == 2);
    CHECK(R.e_w == 2);
    CHECK(R.e_f == 2);
    CHECK(R.totally_branched);
    CHECK_FALSE(R.smooth);
    CHECK_FALSE(R.quasi_smooth);
    CHECK(R.ram_points == 6);
    CHECK(R.chi_top == -2);
    CHECK(R.chi_bottom == 2);  // sphere
    CHECK(R.minimal == MinimalFlag::Yes);

    // geometric quotient: 4 edges, 2+2 vertices, 2 faces
    auto GQ = geometric_quotient(D, *N);
    CHECK(GQ.edge_orbits.size() == 4);
    CHECK(GQ.black_orbits.size() == 2);
    CHECK(GQ.white_orbits.size() == 2);
    CHECK(GQ.face_orbits.size() == 2);

    CHECK(verify_quotient_theorem(D, N));
}

TEST_CASE("quaternion family m = 2..10", "[covering]") {
    for (std::uint32_t m = 2; m <= 10; ++m) {
        auto D = quaternion_dessin(m);
        CHECK(D.euler_characteristic() == -2 * (static_cast<std::int64_t>(m) - 1));
        auto N = center_of(D);
        REQUIRE(N->size() == 2);
        auto R = classify_covering(D, N);
        CHECK(R.chi_bottom == 2);
        CHECK(verify_quotient_theorem(D, N));
        // Riemann-Hurwitz consistency, exact
        const bigint qorder = bigint(4 * m) / R.sheets;
        bigint rhs = 0;
        rhs += (qorder / R.quot_ord_b) * (R.sheets - R.sheets / R.e_b);
        rhs += (qorder / R.quot_ord_w) * (R.sheets - R.sheets / R.e_w);
        rhs += (qorder / R.quot_ord_f) * (R.sheets - R.sheets / R.e_f);
        CHECK(R.sheets * R.chi_bottom - R.chi_top == rhs);
    }
}

TEST_CASE("orbit sizes match the preimage-count lemmas", "[covering]") {
    // vertex orbits have |N|/|N ∩ <b>| members, edge orbits |N|, faces
    // |N|/|N ∩ <bw>|
    std::vector<std::pair<RegularDessin, NormalSubgroupPtr>> cases;
    {
        auto D = quaternion_dessin(3);
        cases.emplace_back(D, center_of(D));
    }
    {
        auto G = Group::sl2(5);
        auto D = make_dessin(G, sl2_elt(G, 1, 0, 1, 1), sl2_elt(G, 1, 1, 0, 1));
        cases.emplace_back(D, center_of(D));
    }
    {
        auto Z12 = Group::cyclic(12);
        auto D = make_dessin(Z12, CyclicElt{3}, CyclicElt{10});
        auto N = NormalSubgroup::enumerated(Z12, cyclic_subgroup(*Z12, CyclicElt{4}));
        cases.emplace_back(D, N);
    }
    for (const auto& [D, N] : cases) {
        auto R = classify_covering(D, N);
        auto GQ = geometric_quotient(D, *N);
        for (const auto& [k, s] : GQ.edge_size) CHECK(bigint(s) == N->size());
        for (const auto& [k, s] : GQ.black_size) CHECK(bigint(s) * R.e_b == N->size());
        for (const auto& [k, s] : GQ.white_size) CHECK(bigint(s) * R.e_w == N->size());
        for (const auto& [k, s] : GQ.face_size) CHECK(bigint(s) * R.e_f == N->size());
        CHECK(verify_quotient_theorem(D, N));
    }
}

TEST_CASE("Z12 quotient by <h^4>", "[covering]") {
    auto Z12 = Group::cyclic(12);
    auto D = make_dessin(Z12, CyclicElt{3}, CyclicElt{10});
    auto N = NormalSubgroup::enumerated(Z12, cyclic_subgroup(*Z12, CyclicElt{4}));
    CHECK(verify_quotient_theorem(D, N));
}

TEST_CASE("smooth SL(2,11) -> PSL(2,11) covering at i = 8", "[covering]") {
    auto G = Group::sl2(11);
    auto b = sl2_elt(G, 1, 0, 1, 1);
    auto w = sl2_elt(G, 1, 1, 0, 1);
    auto D = make_dessin(G, b, G->pow(w, 8));  // |bw^8| = 3 (order-detection table)
    CHECK(D.ord_bw == 3);
    auto N = center_of(D);
    auto R = classify_covering(D, N);
    CHECK(R.smooth);
    CHECK(R.ram_points == 0);
    auto DN = algebraic_quotient(D, N);
    CHECK(DN.signature() == D.signature());
    CHECK(schur_smooth_test(D));
    // chi ratio is exactly |N| on smooth coverings
    auto v = check_chi_bounds(R);
    CHECK(v.lower_ok);
    CHECK(v.lower_equality);
}

TEST_CASE("non-smooth SL(2,5) covering (i = 1, |bw| = 10)", "[covering]") {
    auto G = Group::sl2(5);
    auto D = make_dessin(G, sl2_elt(G, 1, 0, 1, 1), sl2_elt(G, 1, 1, 0, 1));
    CHECK_FALSE(schur_smooth_test(D));
    auto R = classify_covering(D, center_of(D));
    CHECK_FALSE(R.smooth);
    CHECK(R.quasi_smooth);  // b, w have odd order p
    CHECK(R.e_f == 2);
}

TEST_CASE("schur smooth test on SL(2,5) with (b, w^2)", "[covering]") {
    auto G = Group::sl2(5);
    auto b = sl2_elt(G, 1, 0, 1, 1);
    auto w = sl2_elt(G, 1, 1, 0, 1);
    auto D = make_dessin(G, b, G->pow(w, 2));
    CHECK(D.ord_bw == 3);
    CHECK(schur_smooth_test(D));
    // any pair with b of even order fails
    auto Deven = make_dessin(G, G->mul(b, w), w);  // |bw| = 10 even
    CHECK_FALSE(schur_smooth_test(Deven));
}

TEST_CASE("chi bounds: strictly-between case on SL(2,7)", "[covering]") {
    // (3,3,8)-pair in SL(2,7) covers a (3,3,4) PSL(2,7) dessin: ratio 5
    auto G = Group::sl2(7);
    const auto& en = G->enumeration();
    std::optional<RegularDessin> D;
    for (const auto& b : en.elems) {
        if (G->element_order(b) != 3) continue;
        for (const auto& w : en.elems) {
            if (G->element_order(w) != 3) continue;
            if (G->element_order(G->mul(b, w)) != 8) continue;
            try {
                D = make_dessin(G, b, w);
                break;
            } catch (const NotGenerating&) {
            }
        }
        if (D) break;
    }
    REQUIRE(D.has_value());
    CHECK(D->euler_characteristic() == -70);
    auto R = classify_covering(*D, center_of(*D));
    CHECK(R.chi_bottom == -14);
    auto v = check_chi_bounds(R);
    CHECK(v.ratio == "5/1");
    CHECK(v.lower_ok);
    CHECK_FALSE(v.lower_equality);
    CHECK(v.upper_applicable);
    CHECK(v.upper_ok);
    CHECK_FALSE(v.upper_equality);
}

TEST_CASE("upper bound not applicable on positive quotient characteristic", "[covering]") {
    auto D = quaternion_dessin(2);
    auto R = classify_covering(D, center_of(D));
    auto v = check_chi_bounds(R);
    CHECK_FALSE(v.upper_applicable);
    CHECK(v.lower_ok);
}

TEST_CASE("hurwitz bound over small corpus", "[covering]") {
    std::vector<RegularDessin> corpus;
    for (std::uint32_t m = 2; m <= 6; ++m) corpus.push_back(quaternion_dessin(m));
    {
        auto G = Group::sl2(5);
        corpus.push_back(make_dessin(G, sl2_elt(G, 1, 0, 1, 1), sl2_elt(G, 1, 1, 0, 1)));
    }
    for (const auto& D : corpus) {
        if (D.euler_characteristic() >= 0) continue;
        auto v = hurwitz_bound_check(D);
        CHECK(v.holds);
        CHECK(v.equality == D.is_hurwitz());
    }
    // SL(2,5): 120 <= 2520 strictly
    auto G = Group::sl2(5);
    auto D = make_dessin(G, sl2_elt(G, 1, 0, 1, 1), sl2_elt(G, 1, 1, 0, 1));
    auto v = hurwitz_bound_check(D);
    CHECK(v.bound == 2520);
    CHECK_FALSE(v.equality);
    // precondition gate
    auto Z6 = Group::cyclic(6);
    auto sphere = make_dessin(Z6, CyclicElt{1}, CyclicElt{0});
    CHECK_THROWS_AS(hurwitz_bound_check(sphere), std::domain_error);
}

TEST_CASE("simple normal quotient kills multiplicity (Corollary 3.2)", "[covering]") {
    for (std::uint32_t m = 2; m <= 4; ++m) {
        auto D = quaternion_dessin(m);
        auto Ga = underlying_graph(D);
        REQUIRE(Ga.multiplicity == 2);
        // N = <b> ∩ <w>
        auto sb = cyclic_subgroup(*D.group, D.b);
        auto sw = cyclic_subgroup(*D.group, D.w);
        std::vector<GroupElement> inter;
        std::unordered_set<GroupElement> wset(sw.begin(), sw.end());
        for (const auto& x : sb)
            if (wset.count(x)) inter.push_back(x);
        auto N = NormalSubgroup::enumerated(D.group, inter);  // verifies normality
        auto DN = algebraic_quotient(D, N);
        CHECK(underlying_graph(DN).multiplicity == 1);
    }
}

TEST_CASE("covering flags coherence", "[covering]") {
    auto D = quaternion_dessin(3);
    auto R = classify_covering(D, center_of(D));
    // smooth <=> quasi_smooth and e_f = 1
    CHECK(R.smooth == (R.quasi_smooth && R.e_f == 1));
    // totally branched with |N| > 1 excludes quasi-smooth
    if (R.totally_branched && R.sheets > 1) CHECK_FALSE(R.quasi_smooth);
}

TEST_CASE("smooth covering group test", "[covering]") {
    auto D = quaternion_dessin(2);
    CHECK_FALSE(smooth_covering_group_test(D, *center_of(D)));
    auto T = NormalSubgroup::trivial(D.group);
    CHECK(smooth_covering_group_test(D, *T));
}
