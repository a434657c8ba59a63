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
#include <map>

#include "regdes/unicellular.hpp"

using namespace regdes;

TEST_CASE("descriptor basics", "[unicellular]") {
    auto d1 = enumerate_unicellular(1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].genus == 0);

    auto d3 = enumerate_unicellular(3);
    REQUIRE(d3.size() == 3);
    CHECK(d3[0].m == 3);
    CHECK(d3[0].n == 1);
    CHECK(d3[0].lambda == 1);
    CHECK(d3[1].m == 1);
    CHECK(d3[1].n == 3);
    CHECK(d3[1].lambda == 1);
    CHECK(d3[2].m == 1);
    CHECK(d3[2].n == 1);
    CHECK(d3[2].lambda == 3);
    CHECK(d3[2].genus == 1);

    // ell = 6: no descriptor with lambda even while m = n = 1
    for (const auto& d : enumerate_unicellular(6))
        if (d.m == 1 && d.n == 1) CHECK(d.lambda % 2 == 1);
}

TEST_CASE("triple sets", "[unicellular]") {
    auto T3 = triple_set(3);
    REQUIRE(T3.triples.size() == 3);
    auto T4 = triple_set(4);
    CHECK(T4.triples.size() == 4);
    CHECK(triple_set(12).triples.size() == 12);
    CHECK(triple_set(15).triples.size() == 9);
    CHECK(triple_set(2).triples.size() == 2);
    CHECK(count_T(12) == 12);
    CHECK(count_T(15) == 9);
    CHECK(count_T(2) == 2);
    CHECK(count_T(1) == 1);
    CHECK(uncolored_graph_count(12) == 6);
    CHECK(uncolored_graph_count(15) == 5);
    CHECK(uncolored_graph_count(2) == 1);
    CHECK(uncolored_graph_count(1) == 1);
}

TEST_CASE("count_K examples", "[unicellular]") {
    CHECK(count_K(1, 1, 15) == 3);
    CHECK(count_K(3, 1, 1) == 1);
    // |K_{1,1}^{(p^e)}| = p^e - 2p^{e-1} for odd prime powers
    CHECK(count_K(1, 1, 5) == 3);
    CHECK(count_K(1, 1, 9) == 3);       // 9 - 6
    CHECK(count_K(1, 1, 27) == 9);      // 27 - 18
    CHECK(count_K(1, 1, 7) == 5);
    CHECK_THROWS_AS(count_K(2, 2, 1), std::invalid_argument);  // gcd(m,n) != 1
}

TEST_CASE("count_U_lambda examples", "[unicellular]") {
    CHECK(count_U_lambda(3, 3) == 1);
    CHECK(count_U_lambda(3, 1) == 2);
    CHECK(count_U_lambda(6, 3) == 2);
    CHECK_THROWS_AS(count_U_lambda(4, 4), std::invalid_argument);  // lambda_2 too large
}

TEST_CASE("full counting chain for ell <= 60", "[unicellular]") {
    for (std::uint64_t ell = 1; ell <= 60; ++ell) {
        auto ds = enumerate_unicellular(ell);
        REQUIRE(ds.size() == ell);
        std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> bucket;
        for (const auto& d : ds) {
            CHECK(in_triple_set(d.m, d.n, d.lambda, ell));
            ++bucket[{d.m, d.n, d.lambda}];
            // chi = m + n - ell + 1 is even
            CHECK((d.m + d.n + ell + 1) % 2 == 0);
        }
        auto T = triple_set(ell);
        CHECK(T.triples.size() == count_T(ell));
        CHECK(bucket.size() == T.triples.size());
        std::map<std::uint64_t, std::uint64_t> by_lambda;
        for (const auto& t : T.triples) {
            auto [m, n, lambda] = t;
            CHECK(bucket[t] == count_K(m, n, lambda));
            by_lambda[lambda] += bucket[t];
        }
        std::uint64_t total = 0;
        for (const auto& [lambda, cnt] : by_lambda) {
            CHECK(cnt == count_U_lambda(ell, lambda));
            total += cnt;
        }
        CHECK(total == ell);
        CHECK(decomposition_identity(ell).ok);
    }
}

TEST_CASE("descriptor dessins are unicellular with graph K_{m,n}^{(lambda)}",
          "[unicellular]") {
    for (std::uint64_t ell = 1; ell <= 30; ++ell) {
        for (const auto& d : enumerate_unicellular(ell)) {
            auto D = unicellular_dessin(d);
            CHECK(D.is_unicellular());
            CHECK(face_set(D).size() == 1);
            auto Ga = underlying_graph(D);
            CHECK(Ga.black.size() == d.m);
            CHECK(Ga.white.size() == d.n);
            CHECK(Ga.multiplicity == d.lambda);
            CHECK(Ga.complete_bipartite);
            CHECK(D.genus() == d.genus);
        }
    }
}

TEST_CASE("pairwise non-isomorphic (Lemma 4.2) at ell = 8", "[unicellular]") {
    const std::uint64_t ell = 8;
    std::vector<RegularDessin> ds;
    for (const auto& d : enumerate_unicellular(ell)) ds.push_back(unicellular_dessin(d));
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            CHECK_FALSE(dessin_isomorphic(ds[i], ds[j]));
}

TEST_CASE("direct products", "[unicellular]") {
    // single factor: unchanged
    auto D3 = unicellular_dessin(enumerate_unicellular(3)[2]);  // k=2 at ell=3
    CHECK(dessin_isomorphic(direct_product({D3}), D3));

    // K-class factors at p=3 and p=5 reproduce the ell=15 descriptor k=2
    auto D5 = unicellular_dessin(enumerate_unicellular(5)[2]);  // k=2 at ell=5
    auto P = direct_product({D3, D5});
    CHECK(P.is_unicellular());
    CHECK(P.ord_bw == 15);
    auto D15 = unicellular_dessin(enumerate_unicellular(15)[2]);  // k=2 at ell=15
    CHECK(dessin_isomorphic(P, D15));

    // ell=2 x ell=3 with coprime valencies: face length 12, still unicellular
    auto D2 = unicellular_dessin(enumerate_unicellular(2)[1]);  // k=1: b=h, w=1
    auto P6 = direct_product({D2, D3});
    CHECK(P6.is_unicellular());
    CHECK(P6.ord_bw == 6);

    // coprimality violation
    CHECK_THROWS_AS(direct_product({D3, D3}), std::invalid_argument);
}
