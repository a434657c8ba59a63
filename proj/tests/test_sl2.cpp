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
#include "regdes/sl2.hpp"

using namespace regdes;

TEST_CASE("standard pairs", "[sl2]") {
    auto P5 = standard_pair(5);
    CHECK(P5.generation_verified);
    CHECK(generated_subgroup(*P5.G, {P5.b, P5.w}).size() == 120);
    auto P7 = standard_pair(7);
    CHECK(generated_subgroup(*P7.G, {P7.b, P7.w}).size() == 336);
    CHECK_THROWS_AS(standard_pair(3), std::invalid_argument);
    CHECK_THROWS_AS(standard_pair(4), std::invalid_argument);
}

TEST_CASE("bw orders by eigenvalue method", "[sl2]") {
    CHECK(bw_order(5, 1) == 10);   // i = p - 4
    CHECK(bw_order(11, 1) == 5);
    CHECK(bw_order(7, 6) == 6);
    CHECK(bw_order(5, 2) == 3);
    CHECK(bw_order(5, 4) == 6);
    for (std::uint64_t p : {5, 7, 11}) CHECK(bw_order(p, p - 4) == 2 * p);
    CHECK_THROWS_AS(bw_order(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(bw_order(7, 7), std::invalid_argument);
}

TEST_CASE("eigenvalue method equals brute-force powering up to 37", "[sl2]") {
    for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        for (std::uint64_t i = 1; i <= p - 1; ++i)
            CHECK(bw_order(p, i) == bw_order_bruteforce(p, i));
}

TEST_CASE("smooth index sets", "[sl2]") {
    CHECK(smooth_indices(5) == std::set<std::uint64_t>{2});
    CHECK(smooth_indices(7).size() == 1);
    CHECK(smooth_indices(11) == std::set<std::uint64_t>{1, 5, 8});
    for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31})
        CHECK(smooth_indices(p).size() == (odd_part(p + 1) + odd_part(p - 1)) / 2 - 1);
}

TEST_CASE("indices with a given order match the psi-star roots", "[sl2]") {
    CHECK(indices_with_order(11, 5) == std::set<std::uint64_t>{1, 5});
    CHECK(indices_with_order(13, 7) == std::set<std::uint64_t>{5, 6, 8});
    CHECK(indices_with_order(19, 9) == std::set<std::uint64_t>{1, 5, 7});
    for (std::uint64_t p : {5, 7, 11, 13, 17, 19}) {
        for (std::uint64_t n = 3; n <= 2 * p; ++n) {
            if ((p - 1) % n != 0 && (p + 1) % n != 0) continue;
            if (n < 3) continue;
            auto direct = indices_with_order(p, n);
            std::set<std::uint64_t> via_psi;
            for (auto r : poly_roots_mod_p(psi_star_poly(n), p))
                if (r >= 1 && r <= p - 1) via_psi.insert(r);
            CHECK(direct == via_psi);
            CHECK(direct.size() == euler_phi(n) / 2);
        }
    }
}

TEST_CASE("fibonacci orders", "[sl2]") {
    CHECK(fibonacci_order(5).order == 10);
    CHECK(fibonacci_order(101).order == 25);
    CHECK(fibonacci_order(41).order == 20);
    CHECK(fibonacci_order(29).order == 7);
    CHECK(fibonacci_order(109).order == 54);
    CHECK(fibonacci_order(101).smooth);
    CHECK_FALSE(fibonacci_order(41).smooth);
}

TEST_CASE("pisano consistency to 200", "[sl2]") {
    for (std::uint64_t p : primes_up_to(200)) {
        if (p < 5) continue;
        CHECK(2 * fibonacci_order(p).order == pisano_period(p));
    }
}

TEST_CASE("fibonacci verdict lists of Example 1.12", "[sl2]") {
    for (auto& v : fibonacci_smooth_verdicts({11, 19, 31})) CHECK(v.smooth);
    for (auto& v : fibonacci_smooth_verdicts({7, 13, 17, 23})) CHECK_FALSE(v.smooth);
    for (auto& v : fibonacci_smooth_verdicts({101, 181, 461})) CHECK(v.smooth);
    for (auto& v : fibonacci_smooth_verdicts({41, 61, 241})) CHECK_FALSE(v.smooth);
}

TEST_CASE("spectra: closed forms verified against enumeration", "[sl2]") {
    CHECK(spectrum(5, false) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 10});
    CHECK(spectrum(5, true) == std::set<std::uint64_t>{1, 2, 3, 5});
    CHECK(spectrum(9, true) == std::set<std::uint64_t>{1, 2, 3, 4, 5});
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, int>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        const std::uint64_t q = ipow(p, f);
        auto G = Group::sl2(p, f);
        std::set<std::uint64_t> got;
        for (const auto& g : G->enumeration().elems) got.insert(G->element_order(g));
        CHECK(got == spectrum(q, false));
        auto P = Group::psl2(p, f);
        std::set<std::uint64_t> gotp;
        for (const auto& g : P->enumeration().elems) gotp.insert(P->element_order(g));
        CHECK(gotp == spectrum(q, true));
    }
}

TEST_CASE("lmn criterion examples", "[sl2]") {
    CHECK(lmn_group_criterion(5, 3, 5, 5, false));
    CHECK_FALSE(lmn_group_criterion(9, 3, 5, 5, false));  // the (3,5,5,9) exception
    CHECK(lmn_group_criterion(5, 3, 3, 5, true));
    CHECK_FALSE(lmn_group_criterion(5, 3, 3, 5, false));  // (3,3,p,p)
    CHECK_FALSE(lmn_group_criterion(5, 5, 5, 5, false));  // (p,p,p,p)
    CHECK(lmn_group_criterion(7, 3, 7, 7, false));
    CHECK_THROWS_AS(lmn_group_criterion(5, 3, 3, 3, false), std::invalid_argument);  // not hyperbolic
    CHECK_THROWS_AS(lmn_group_criterion(5, 3, 4, 5, false), std::invalid_argument);  // even
}

TEST_CASE("criterion agrees with brute force on q = 5", "[sl2]") {
    const std::uint64_t q = 5;
    for (bool projective : {false, true}) {
        auto spec = spectrum(q, projective);
        std::vector<std::uint64_t> odd;
        for (auto x : spec)
            if (x % 2 == 1 && x > 1) odd.push_back(x);
        for (auto l : odd)
            for (auto m : odd)
                for (auto n : odd) {
                    if (!(l <= m && m <= n)) continue;
                    if (m * n + l * n + l * m >= l * m * n) continue;
                    const bool predicted = lmn_group_criterion(q, l, m, n, projective);
                    const bool found = brute_force_lmn(q, l, m, n, projective).has_value();
                    INFO("q=" << q << " (" << l << "," << m << "," << n << ") proj=" << projective);
                    CHECK(predicted == found);
                }
    }
}

TEST_CASE("brute force witnesses", "[sl2]") {
    auto w1 = brute_force_lmn(5, 3, 5, 5, false);
    REQUIRE(w1.has_value());
    auto w2 = brute_force_lmn(5, 3, 3, 5, false);
    CHECK_FALSE(w2.has_value());
    auto w3 = brute_force_lmn(7, 2, 3, 7, true);  // Hurwitz pair
    REQUIRE(w3.has_value());
}

TEST_CASE("schur smooth existence", "[sl2]") {
    CHECK_FALSE(schur_smooth_exists(7, 3, 3, 7));  // (3,3,p,p)
    CHECK(schur_smooth_exists(7, 3, 7, 7));
    CHECK_FALSE(schur_smooth_exists(25, 3, 5, 5));  // contained in Spec(PSL(2,5))
    CHECK_THROWS_AS(schur_smooth_exists(9, 3, 5, 5), std::invalid_argument);
    CHECK_FALSE(schur_smooth_exists(7, 3, 3, 3));
}

TEST_CASE("eq trace witnesses", "[sl2]") {
    auto W = eq_trace_witness(5, 2, 2, 2);
    auto G = Group::sl2(5);
    const auto& F = std::get<Mat2Model>(G->model()).field;
    const auto& bm = std::get<Mat2Elt>(W.b.v).m;
    const auto& wm = std::get<Mat2Elt>(W.w.v).m;
    CHECK(bm[0] + bm[3] == F->from_int(2));
    CHECK(wm[0] + wm[3] == F->from_int(2));
    auto pm = std::get<Mat2Elt>(G->mul(W.b, W.w).v).m;
    CHECK(pm[0] + pm[3] == F->from_int(2));

    // order-4 pair via trace 0
    auto W0 = eq_trace_witness(5, 0, 0, 2);
    CHECK(G->element_order(W0.b) == 4);
    CHECK(G->element_order(W0.w) == 4);

    // a (3,3,2p)-pair via (tau_3, tau_3, -2) in SL(2,7): tau_3 = -1
    auto W3 = eq_trace_witness(7, -1, -1, -2);
    auto G7 = Group::sl2(7);
    CHECK(G7->element_order(W3.b) == 3);
    CHECK(G7->element_order(W3.w) == 3);
    CHECK(G7->element_order(G7->mul(W3.b, W3.w)) == 14);
}

TEST_CASE("smooth indices match covering classification (Lemma 6.12(iii))", "[sl2]") {
    for (std::uint64_t p : {5, 7, 11, 13}) {
        auto SP = standard_pair(p);
        auto smooth = smooth_indices(p);
        auto center = NormalSubgroup::enumerated(SP.G, center_elements(*SP.G));
        for (std::uint64_t i = 1; i <= p - 1; ++i) {
            auto D = make_dessin(SP.G, SP.b, SP.G->pow(SP.w, static_cast<std::int64_t>(i)));
            auto R = classify_covering(D, center);
            CHECK(R.smooth == (smooth.count(i) != 0));
            CHECK(R.smooth == schur_smooth_test(D));
        }
    }
}

TEST_CASE("normalization of Lemma 6.12(i): graphs all agree", "[sl2]") {
    for (std::uint64_t p : {5, 7}) {
        auto SP = standard_pair(p);
        for (std::uint64_t k = 1; k <= p - 1; ++k)
            for (std::uint64_t i = 1; i <= p - 1; ++i) {
                auto D1 = make_dessin(SP.G, SP.G->pow(SP.b, static_cast<std::int64_t>(k)),
                                      SP.G->pow(SP.w, static_cast<std::int64_t>(i)));
                auto D2 = make_dessin(SP.G, SP.b,
                                      SP.G->pow(SP.w, static_cast<std::int64_t>(i * k % p)));
                CHECK(dessin_isomorphic(D1, D2));
            }
    }
}

TEST_CASE("pairwise rigidity of the standard family (Lemma 6.12(ii))", "[sl2]") {
    auto SP = standard_pair(5);
    std::vector<RegularDessin> ds;
    for (std::uint64_t i = 1; i <= 4; ++i)
        ds.push_back(make_dessin(SP.G, SP.b, SP.G->pow(SP.w, static_cast<std::int64_t>(i))));
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            CHECK_FALSE(dessin_isomorphic(ds[i], ds[j]));
}
