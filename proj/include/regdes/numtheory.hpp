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

#ifndef REGDES_NUMTHEORY_HPP
#define REGDES_NUMTHEORY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace regdes {

/// Prime factorization of a positive integer, primes strictly increasing.
struct FactoredInt {
    std::uint64_t value = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;  // (prime, exponent)

    std::vector<std::uint64_t> primes() const {
        std::vector<std::uint64_t> ps;
        ps.reserve(factors.size());
        for (const auto& [p, e] : factors) ps.push_back(p);
        return ps;
    }
};

inline FactoredInt factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    FactoredInt out;
    out.value = n;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.factors.emplace_back(p, e);
    }
    if (n > 1) out.factors.emplace_back(n, 1);
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// π(n): set of prime divisors.
inline std::set<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::set<std::uint64_t> s;
    for (const auto& [p, e] : factorize(n).factors) s.insert(p);
    return s;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
    std::uint64_t r = n;
    for (const auto& [p, e] : factorize(n).factors) r = r / p * (p - 1);
    return r;
}

/// n with every factor of two removed.
inline std::uint64_t odd_part(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("odd_part: n must be >= 1");
    while ((n & 1) == 0) n >>= 1;
    return n;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::invalid_argument("p_part: n must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("p_part: p must be prime");
    std::uint64_t r = 1;
    while (n % p == 0) n /= p, r *= p;
    return r;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// True iff ell | p^d - 1 and ell does not divide p^i - 1 for any 1 <= i < d.
inline bool is_primitive_divisor(std::uint64_t ell, std::uint64_t p, unsigned d) {
    if (!is_prime(p)) throw std::invalid_argument("is_primitive_divisor: p must be prime");
    if (d < 1) throw std::invalid_argument("is_primitive_divisor: d must be >= 1");
    if (ell == 0) return false;
    // p^i mod ell walks the powers; divisibility of p^i - 1 by ell is p^i = 1 (mod ell).
    if (ell == 1) return d == 1;
    std::uint64_t pw = 1;
    for (unsigned i = 1; i < d; ++i) {
        pw = (pw * (p % ell)) % ell;
        if (pw == 1) return false;
    }
    pw = (pw * (p % ell)) % ell;
    return pw == 1;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, e] : factorize(n).factors) {
        const std::size_t base = ds.size();
        std::uint64_t pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pw);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<std::uint64_t> ps;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        ps.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return ps;
}

}  // namespace regdes

#endif  // REGDES_NUMTHEORY_HPP
