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

#ifndef REGDES_SL2_HPP
#define REGDES_SL2_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "regdes/dessin.hpp"
#include "regdes/gf.hpp"
#include "regdes/group.hpp"
#include "regdes/intpoly.hpp"
#include "regdes/numtheory.hpp"

namespace regdes {

struct SearchExhaustedSl2 : std::runtime_error {
    explicit SearchExhaustedSl2(const std::string& what) : std::runtime_error(what) {}
};

/// The fixed unipotent pair b = [[1,0],[1,1]], w = [[1,1],[0,1]] of SL(2,p).
struct StandardPair {
    std::uint64_t p;
    GroupPtr G;
    GroupElement b, w;
    bool generation_verified;  // closure-checked for p <= 31, asserted beyond
};

inline StandardPair standard_pair(std::uint64_t p) {
    if (p < 5 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("standard_pair: p must be an odd prime >= 5");
    auto G = Group::sl2(p);
    const auto& F = std::get<Mat2Model>(G->model()).field;
    GroupElement b = Mat2Elt{{F->one(), F->zero(), F->one(), F->one()}};
    GroupElement w = Mat2Elt{{F->one(), F->one(), F->zero(), F->one()}};
    bool verified = false;
    if (p <= 31) {
        if (!is_generating_pair(*G, b, w))
            throw std::logic_error("standard_pair: transvections failed to generate");
        verified = true;
    }
    return {p, G, b, w, verified};
}

/// Eigenvalue mu of X^2 - tau X + 1 as an element of GF(p) or GF(p^2),
/// for tau not congruent to +-2.
inline FqElement sl2_eigenvalue(std::uint64_t p, std::uint64_t tau) {
    // split case: a root in GF(p)
    for (std::uint64_t r = 0; r < p; ++r) {
        if ((r * r + 1) % p == (tau * r) % p) {
            return FqField::get(p, 1)->from_int(static_cast<std::int64_t>(r));
        }
    }
    // non-split: mu = x + y Y in GF(p)[Y]/(Y^2 + aY + c) with
    // y^2 = (tau^2 - 4)/(a^2 - 4c) and x = (tau + y a)/2
    auto F = FqField::get(p, 2);
    const auto& mod = F->modulus();
    const std::uint64_t a = (mod[1] % p).convert_to<std::uint64_t>();
    const std::uint64_t c = (mod[0] % p).convert_to<std::uint64_t>();
    const std::uint64_t num = ((tau * tau + 4 * (p - 1)) % p);       // tau^2 - 4
    const std::uint64_t den = ((a * a + 4 * (p - c % p)) % p);       // a^2 - 4c
    std::uint64_t deninv = 0;
    for (std::uint64_t t = 1; t < p; ++t)
        if ((den * t) % p == 1) { deninv = t; break; }
    const std::uint64_t y2 = (num * deninv) % p;
    for (std::uint64_t y = 1; y < p; ++y) {
        if ((y * y) % p != y2) continue;
        // x = (tau + y a) / 2
        const std::uint64_t inv2 = (p + 1) / 2;
        const std::uint64_t x = ((tau + y * a) % p) * inv2 % p;
        FqElement mu = F->from_coeffs({static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
        if (mu * mu - F->from_int(static_cast<std::int64_t>(tau)) * mu + F->one() == F->zero())
            return mu;
    }
    throw std::logic_error("sl2_eigenvalue: no root found in GF(p^2)");
}

/// |b w^i| by the eigenvalue method: trace tau = i + 2; tau = -2 gives 2p,
/// otherwise the multiplicative order of the root of X^2 - tau X + 1.
inline std::uint64_t bw_order(std::uint64_t p, std::uint64_t i) {
    if (i < 1 || i > p - 1) throw std::invalid_argument("bw_order: need 1 <= i <= p-1");
    const std::uint64_t tau = (i + 2) % p;
    if (tau == 2) throw std::logic_error("bw_order: tau = 2 would force i = 0 (mod p)");
    if (tau == p - 2) return 2 * p;
    return fq_mul_order(sl2_eigenvalue(p, tau));
}

/// Oracle: repeated matrix multiplication until the identity.
inline std::uint64_t bw_order_bruteforce(std::uint64_t p, std::uint64_t i) {
    auto F = FqField::get(p, 1);
    const FqElement one = F->one();
    const FqElement ii = F->from_int(static_cast<std::int64_t>(i));
    // bw^i = [[1, i], [1, i+1]]
    std::array<FqElement, 4> m{one, ii, one, ii + one};
    std::array<FqElement, 4> acc = m;
    std::uint64_t k = 1;
    while (!(acc[0] == one && acc[1].is_zero() && acc[2].is_zero() && acc[3] == one)) {
        acc = detail::mat_mul(acc, m);
        ++k;
    }
    return k;
}

/// Indices i with |b w^i| odd; the count is pinned to Theorem 1.11's
/// closed form ((p+1)_{2'} + (p-1)_{2'})/2 - 1.
inline std::set<std::uint64_t> smooth_indices(std::uint64_t p) {
    if (p < 5 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("smooth_indices: p must be an odd prime >= 5");
    std::set<std::uint64_t> out;
    for (std::uint64_t i = 1; i <= p - 1; ++i)
        if (bw_order(p, i) % 2 == 1) out.insert(i);
    const std::uint64_t expected = (odd_part(p + 1) + odd_part(p - 1)) / 2 - 1;
    if (out.size() != expected)
        throw std::logic_error("smooth_indices: count disagrees with the closed form");
    return out;
}

/// Indices i with |b w^i| = n, for n >= 3 dividing p-1 or p+1; exactly
/// phi(n)/2 of them exist.
inline std::set<std::uint64_t> indices_with_order(std::uint64_t p, std::uint64_t n) {
    if (n < 3 || ((p - 1) % n != 0 && (p + 1) % n != 0))
        throw std::invalid_argument("indices_with_order: n must be >= 3 and divide p-1 or p+1");
    std::set<std::uint64_t> out;
    for (std::uint64_t i = 1; i <= p - 1; ++i)
        if (bw_order(p, i) == n) out.insert(i);
    if (out.size() != euler_phi(n) / 2)
        throw std::logic_error("indices_with_order: count disagrees with phi(n)/2");
    return out;
}

// ---------------------------------------------------------------------------
// Fibonacci coverings (the i = 1 family)

struct FibonacciInfo {
    std::uint64_t p;
    std::uint64_t order;      // |bw|
    bool smooth;              // order odd
    std::uint64_t p_mod_20;
    std::string classification;
};

inline FibonacciInfo fibonacci_order(std::uint64_t p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("fibonacci_order: p must be a prime >= 5");
    FibonacciInfo info;
    info.p = p;
    info.order = bw_order(p, 1);
    info.smooth = info.order % 2 == 1;
    info.p_mod_20 = p % 20;
    if (p == 5) {
        info.classification = "p = 5: order 10";
    } else if (p % 5 == 1 || p % 5 == 4) {
        info.classification = "p = +-1 (mod 5): |bw| divides (p-1)/2";
        if (p % 4 == 3) info.classification += ", odd since p = 3 (mod 4)";
    } else {
        info.classification = "p = +-2 (mod 5): |bw| divides p+1 but not (p+1)/2, so even";
    }
    return info;
}

inline std::vector<FibonacciInfo> fibonacci_smooth_verdicts(const std::vector<std::uint64_t>& ps) {
    std::vector<FibonacciInfo> out;
    out.reserve(ps.size());
    for (std::uint64_t p : ps) out.push_back(fibonacci_order(p));
    return out;
}

/// Pisano period of the Fibonacci sequence modulo p.
inline std::uint64_t pisano_period(std::uint64_t p) {
    std::uint64_t a = 1, b = 1, k = 1;  // (F_1, F_2)
    while (!(a == 0 && b == 1)) {
        std::uint64_t c = (a + b) % p;
        a = b;
        b = c;
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// spectra and the (l,m,n)-group criteria

/// Element-order sets of SL(2,q) / PSL(2,q) for odd q, by the standard
/// closed forms (verified against enumeration for small q in the tests).
inline std::set<std::uint64_t> spectrum(std::uint64_t q, bool projective) {
    auto f = factorize(q).factors;
    if (f.size() != 1 || f[0].first == 2)
        throw std::invalid_argument("spectrum: q must be an odd prime power");
    const std::uint64_t p = f[0].first;
    std::set<std::uint64_t> s;
    if (!projective) {
        for (auto d : divisors(q - 1)) s.insert(d);
        for (auto d : divisors(q + 1)) s.insert(d);
        s.insert(p);
        s.insert(2 * p);
    } else {
        for (auto d : divisors((q - 1) / 2)) s.insert(d);
        for (auto d : divisors((q + 1) / 2)) s.insert(d);
        s.insert(p);
    }
    return s;
}

namespace detail {

inline void require_admissible_triple(std::uint64_t q, std::uint64_t l, std::uint64_t m,
                                      std::uint64_t n, bool projective) {
    if (!(l <= m && m <= n))
        throw std::invalid_argument("lmn: need l <= m <= n");
    if (l % 2 == 0 || m % 2 == 0 || n % 2 == 0)
        throw std::invalid_argument("lmn: the triple must be odd");
    const auto spec = spectrum(q, projective);
    if (!spec.count(l) || !spec.count(m) || !spec.count(n))
        throw std::invalid_argument("lmn: triple not inside the spectrum");
    // 1/l + 1/m + 1/n < 1  <=>  mn + ln + lm < lmn
    if (m * n + l * n + l * m >= l * m * n)
        throw std::invalid_argument("lmn: the triple is not hyperbolic");
}

}  // namespace detail

/// Theorem 6.10: whether SL(2,q) (or PSL(2,q)) is an (l,m,n)-group, for odd
/// hyperbolic triples in the spectrum.
inline bool lmn_group_criterion(std::uint64_t q, std::uint64_t l, std::uint64_t m,
                                std::uint64_t n, bool projective) {
    detail::require_admissible_triple(q, l, m, n, projective);
    const auto fac = factorize(q).factors;
    const std::uint64_t p = fac[0].first;
    const unsigned f = static_cast<unsigned>(fac[0].second);
    // subfield condition on proper divisors e of f
    for (std::uint64_t e : divisors(f)) {
        if (e == f) continue;
        auto sub = spectrum(ipow(p, static_cast<unsigned>(e)), projective);
        if (sub.count(l) && sub.count(m) && sub.count(n)) return false;
    }
    if (!projective) {
        if (l == 3 && m == 3 && n == p && q == p) return false;
        if (l == p && m == p && n == p && q == p) return false;
        if (l == 3 && m == 5 && n == 5 && q == 9) return false;
    }
    return true;
}

/// Theorem 1.10: existence of a regular dessin of type (l,m,n) on PSL(2,q)
/// admitting a non-trivial smooth Schur covering.
inline bool schur_smooth_exists(std::uint64_t q, std::uint64_t l, std::uint64_t m,
                                std::uint64_t n) {
    if (q == 9)
        throw std::invalid_argument(
            "schur_smooth_exists: q = 9 has Schur multiplier 6 and is out of scope");
    if (q < 5) throw std::invalid_argument("schur_smooth_exists: q must be >= 5");
    if (!(l > 1 && l <= m && m <= n))
        throw std::invalid_argument("schur_smooth_exists: need 1 < l <= m <= n");
    const auto spec = spectrum(q, true);
    if (!spec.count(l) || !spec.count(m) || !spec.count(n))
        throw std::invalid_argument("schur_smooth_exists: triple not in Spec(PSL(2,q))");
    const auto fac = factorize(q).factors;
    const std::uint64_t p = fac[0].first;
    const unsigned f = static_cast<unsigned>(fac[0].second);
    // (1) odd, not (3,3,3), not (3,3,p,p) or (p,p,p,p)
    if (l % 2 == 0 || m % 2 == 0 || n % 2 == 0) return false;
    if (l == 3 && m == 3 && n == 3) return false;
    if (l == 3 && m == 3 && n == p && q == p) return false;
    if (l == p && m == p && n == p && q == p) return false;
    // (2) subfield-spectrum condition
    for (std::uint64_t e : divisors(f)) {
        if (e == f) continue;
        auto sub = spectrum(ipow(p, static_cast<unsigned>(e)), true);
        if (sub.count(l) && sub.count(m) && sub.count(n)) return false;
    }
    return true;
}

struct LmnWitness {
    GroupElement b, w;
};

/// Exhaustive search for a generating (l,m,n)-pair: b runs over conjugacy-
/// class representatives of order l, w over all elements of order m.
inline std::optional<LmnWitness> brute_force_lmn(std::uint64_t q, std::uint64_t l,
                                                 std::uint64_t m, std::uint64_t n,
                                                 bool projective,
                                                 std::uint64_t cap = kEnumCap) {
    const auto fac = factorize(q).factors;
    GroupPtr G = projective ? Group::psl2(fac[0].first, fac[0].second)
                            : Group::sl2(fac[0].first, fac[0].second);
    const auto& en = G->enumeration(cap);
    std::vector<std::uint64_t> orders(en.elems.size());
    for (std::size_t i = 0; i < en.elems.size(); ++i)
        orders[i] = G->element_order(en.elems[i]);

    std::vector<GroupElement> b_reps;
    for (const auto& [rep, sz] : conjugacy_classes(*G, cap))
        if (G->element_order(rep) == l) b_reps.push_back(rep);

    std::vector<GroupElement> ws;
    for (std::size_t i = 0; i < en.elems.size(); ++i)
        if (orders[i] == m) ws.push_back(en.elems[i]);

    const bigint target = G->order(cap);
    for (const auto& b : b_reps) {
        for (const auto& w : ws) {
            GroupElement bw = G->mul(b, w);
            if (G->element_order(bw) != n) continue;
            if (bigint(generated_subgroup(*G, {b, w}, cap).size()) == target)
                return LmnWitness{b, w};
        }
    }
    return std::nullopt;
}

/// Lemma 6.5(1): some pair with prescribed traces (alpha, beta, gamma); b is
/// fixed as the companion matrix of X^2 - alpha X + 1, w is scanned.
inline LmnWitness eq_trace_witness(std::uint64_t q, std::int64_t alpha, std::int64_t beta,
                                   std::int64_t gamma, std::uint64_t cap = kEnumCap) {
    const auto fac = factorize(q).factors;
    GroupPtr G = Group::sl2(fac[0].first, fac[0].second);
    const auto& F = std::get<Mat2Model>(G->model()).field;
    const FqElement fa = F->from_int(alpha), fb = F->from_int(beta), fg = F->from_int(gamma);
    GroupElement b = Mat2Elt{{F->zero(), -(F->one()), F->one(), fa}};
    for (const auto& w : G->enumeration(cap).elems) {
        const auto& wm = std::get<Mat2Elt>(w.v).m;
        if (wm[0] + wm[3] != fb) continue;
        const auto& pm = std::get<Mat2Elt>(G->mul(b, w).v).m;
        if (pm[0] + pm[3] != fg) continue;
        return {b, w};
    }
    throw SearchExhaustedSl2("eq_trace_witness: E_q slice empty (contradicts the theory)");
}

}  // namespace regdes

#endif  // REGDES_SL2_HPP
