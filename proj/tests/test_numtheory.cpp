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
#include <numeric>

#include "regdes/numtheory.hpp"

using namespace regdes;

namespace {
// independent oracle: factorization by naive division, smallest prime first
std::vector<std::pair<std::uint64_t, int>> factor_oracle(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d <= n; ++d) {
        int e = 0;
        while (n % d == 0) n /= d, ++e;
        if (e) out.emplace_back(d, e);
    }
    return out;
}
}  // namespace

TEST_CASE("factorize basics", "[numtheory]") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(12).factors == std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {3, 1}});
    // |SL(2,32)| = 32736, expected factorization frozen from the trial-division oracle
    CHECK(factorize(32736).factors ==
          std::vector<std::pair<std::uint64_t, int>>{{2, 5}, {3, 1}, {11, 1}, {31, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    for (std::uint64_t n : {2u, 97u, 1024u, 9999u, 720720u}) {
        auto f = factorize(n);
        CHECK(f.factors == factor_oracle(n));
        std::uint64_t prod = 1;
        for (auto [p, e] : f.factors)
            for (int i = 0; i < e; ++i) prod *= p;
        CHECK(prod == n);
    }
}

TEST_CASE("euler phi", "[numtheory]") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(22) == 10);
    // definition oracle
    for (std::uint64_t n = 1; n <= 120; ++n) {
        std::uint64_t cnt = 0;
        for (std::uint64_t k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++cnt;
        CHECK(euler_phi(n) == cnt);
    }
}

TEST_CASE("odd part and p-part", "[numtheory]") {
    CHECK(odd_part(8) == 1);
    CHECK(odd_part(12) == 3);
    CHECK(odd_part(102) == 51);
    CHECK(p_part(12, 2) == 4);
    CHECK(p_part(12, 5) == 1);
    CHECK(p_part(45, 3) == 9);
    CHECK_THROWS_AS(p_part(10, 4), std::invalid_argument);
}

TEST_CASE("primitive divisors", "[numtheory]") {
    CHECK(is_primitive_divisor(3, 2, 2));
    CHECK(is_primitive_divisor(4, 5, 1));
    CHECK_FALSE(is_primitive_divisor(3, 7, 2));
    // direct oracle over a small grid
    for (std::uint64_t ell = 1; ell <= 40; ++ell)
        for (std::uint64_t p : {2u, 3u, 5u, 7u})
            for (unsigned d = 1; d <= 5; ++d) {
                bool expect = (ipow(p, d) - 1) % ell == 0;
                for (unsigned i = 1; i < d && expect; ++i)
                    if ((ipow(p, i) - 1) % ell == 0) expect = false;
                CHECK(is_primitive_divisor(ell, p, d) == expect);
            }
}

TEST_CASE("divisors", "[numtheory]") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
}
