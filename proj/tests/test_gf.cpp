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
#include <random>

#include "regdes/gf.hpp"

using namespace regdes;

TEST_CASE("deterministic irreducible moduli", "[gf]") {
    CHECK(find_irreducible(5, 1) == IntPolynomial{0, 1});       // X
    CHECK(find_irreducible(5, 2) == IntPolynomial{2, 0, 1});    // X^2 + 2
    // lex-first monic irreducible quintic over GF(2): X^5 + X^2 + 1
    CHECK(find_irreducible(2, 5) == IntPolynomial{1, 0, 1, 0, 0, 1});
    // oracle: no roots and no quadratic factors for every claimed irreducible
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {3, 2}, {7, 2}, {2, 5}, {3, 3}}) {
        IntPolynomial m = find_irreducible(p, f);
        CHECK(m.degree() == f);
        CHECK(m.is_monic());
        for (std::uint64_t x = 0; x < p; ++x) CHECK(m.eval(x) % p != 0);
    }
}

TEST_CASE("field axioms on random triples", "[gf]") {
    std::mt19937_64 rng(20260809);
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, int>>{{5, 2}, {11, 2}, {2, 5}, {3, 2}}) {
        auto F = FqField::get(p, f);
        auto elems = F->elements();
        REQUIRE(elems.size() == F->q());
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const FqElement a = elems[pick(rng)], b = elems[pick(rng)], c = elems[pick(rng)];
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == F->zero());
            CHECK(a * F->one() == a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == F->one());
                CHECK((F->q() - 1) % fq_mul_order(a) == 0);
            }
        }
    }
}

TEST_CASE("prime field degenerates to residues", "[gf]") {
    auto F = FqField::get(7, 1);
    CHECK(F->from_int(3) * F->from_int(5) == F->from_int(1));
    CHECK(F->from_int(-1) == F->from_int(6));
    CHECK(fq_mul_order(F->from_int(3)) == 6);  // 3 generates GF(7)^x
    CHECK(fq_mul_order(F->one()) == 1);
    CHECK_THROWS_AS(fq_mul_order(F->zero()), std::domain_error);
}

TEST_CASE("multiplicative order against scan oracle", "[gf]") {
    auto F = FqField::get(3, 2);
    for (const auto& x : F->elements()) {
        if (x.is_zero()) continue;
        std::uint64_t k = 1;
        FqElement acc = x;
        while (acc != F->one()) acc = acc * x, ++k;
        CHECK(fq_mul_order(x) == k);
    }
}

TEST_CASE("frobenius and primitive root", "[gf]") {
    auto F = FqField::get(5, 2);
    for (const auto& x : F->elements()) CHECK(x.frobenius() == x.pow(5));
    FqElement g = F->primitive_root();
    CHECK(fq_mul_order(g) == 24);
    // mu in GF(11^2) with mu + mu^{-1} = 3 has order 5 (Table row n=5, (11,1))
    auto F11 = FqField::get(11, 2);
    bool found = false;
    for (const auto& x : F11->elements()) {
        if (x.is_zero()) continue;
        if (x + x.inverse() == F11->from_int(3)) {
            CHECK(fq_mul_order(x) == 5);
            found = true;
        }
    }
    CHECK(found);
}
