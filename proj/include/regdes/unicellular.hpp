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

#ifndef REGDES_UNICELLULAR_HPP
#define REGDES_UNICELLULAR_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

#include "regdes/dessin.hpp"
#include "regdes/numtheory.hpp"

namespace regdes {

/// The unicellular regular dessin D(Z_ell, h^k, h^{1-k}) in descriptor form:
/// m and n are the bipartition sizes of the underlying K_{m,n}^{(lambda)},
/// lambda the edge multiplicity.
struct UnicellularDescriptor {
    std::uint64_t ell, k, m, n, lambda;
    std::int64_t genus;
};

/// One descriptor per k in [0, ell); the ell pairwise non-isomorphic
/// unicellular dessins of face length 2*ell.
inline std::vector<UnicellularDescriptor> enumerate_unicellular(std::uint64_t ell) {
    if (ell == 0) throw std::invalid_argument("enumerate_unicellular: ell must be >= 1");
    std::vector<UnicellularDescriptor> out;
    out.reserve(ell);
    for (std::uint64_t k = 0; k < ell; ++k) {
        UnicellularDescriptor d;
        d.ell = ell;
        d.k = k;
        d.m = std::gcd(k, ell);  // gcd(0, ell) = ell
        d.n = std::gcd((1 + ell - k % ell) % ell, ell);
        d.lambda = ell / (d.m * d.n);
        const std::int64_t chi =
            static_cast<std::int64_t>(d.m) + static_cast<std::int64_t>(d.n) -
            static_cast<std::int64_t>(ell) + 1;
        if (chi % 2 != 0) throw std::logic_error("enumerate_unicellular: odd characteristic");
        d.genus = (2 - chi) / 2;
        out.push_back(d);
    }
    return out;
}

/// Membership in T_ell: ell = m n lambda, gcd(m,n) = 1, and the 2-part of
/// lambda is strictly below max(ell_2, 2).
inline bool in_triple_set(std::uint64_t m, std::uint64_t n, std::uint64_t lambda,
                          std::uint64_t ell) {
    if (m * n * lambda != ell) return false;
    if (std::gcd(m, n) != 1) return false;
    return p_part(lambda, 2) < std::max<std::uint64_t>(p_part(ell, 2), 2);
}

struct TripleSet {
    std::uint64_t ell;
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> triples;  // (m,n,lambda)
};

inline TripleSet triple_set(std::uint64_t ell) {
    if (ell == 0) throw std::invalid_argument("triple_set: ell must be >= 1");
    TripleSet T{ell, {}};
    for (std::uint64_t lambda : divisors(ell)) {
        const std::uint64_t mn = ell / lambda;
        for (std::uint64_t m : divisors(mn)) {
            const std::uint64_t n = mn / m;
            if (in_triple_set(m, n, lambda, ell)) T.triples.emplace_back(m, n, lambda);
        }
    }
    return T;
}

namespace detail {

/// phi(lambda) * prod_{p in pi} (p-2)/(p-1) as an exact integer; the product
/// is integral by the counting theorem, enforced here.
inline std::uint64_t k_class_value(std::uint64_t lambda, const std::set<std::uint64_t>& pi) {
    std::uint64_t num = euler_phi(lambda), den = 1;
    for (std::uint64_t p : pi) {
        num *= (p - 2);
        den *= (p - 1);
    }
    if (den == 0 || num % den != 0)
        throw std::logic_error("count_K: non-integral class count (implementation bug)");
    return num / den;
}

}  // namespace detail

/// |K_{m,n}^{(lambda)}|: dessins with underlying graph K_{m,n}^{(lambda)}.
inline std::uint64_t count_K(std::uint64_t m, std::uint64_t n, std::uint64_t lambda) {
    const std::uint64_t ell = m * n * lambda;
    if (!in_triple_set(m, n, lambda, ell))
        throw std::invalid_argument("count_K: (m,n,lambda) not in T_ell");
    std::set<std::uint64_t> pi = prime_divisors(lambda);
    for (std::uint64_t p : prime_divisors(ell / lambda)) pi.erase(p);
    return detail::k_class_value(lambda, pi);
}

/// |U_ell^(lambda)|: unicellular dessins of face length 2 ell and edge
/// multiplicity lambda.
inline std::uint64_t count_U_lambda(std::uint64_t ell, std::uint64_t lambda) {
    if (lambda == 0 || ell % lambda != 0 ||
        p_part(lambda, 2) >= std::max<std::uint64_t>(p_part(ell, 2), 2))
        throw std::invalid_argument("count_U_lambda: invalid lambda");
    const std::set<std::uint64_t> sigma = prime_divisors(ell / lambda);
    std::set<std::uint64_t> pi = prime_divisors(lambda);
    for (std::uint64_t p : sigma) pi.erase(p);
    std::uint64_t v = detail::k_class_value(lambda, pi);
    return (std::uint64_t(1) << sigma.size()) * v;
}

/// |T_ell| by the closed form (2e_1 + delta)(2e_2 + 1)...(2e_s + 1).
inline std::uint64_t count_T(std::uint64_t ell) {
    if (ell == 0) throw std::invalid_argument("count_T: ell must be >= 1");
    const auto f = factorize(ell).factors;
    const std::uint64_t delta = ell % 2 ? 1 : 0;
    if (f.empty()) return 1;  // ell = 1: empty product times delta = 1
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::uint64_t e = f[i].second;
        r *= (i == 0 && f[i].first == 2) ? 2 * e : 2 * e + 1;
    }
    return r;
}

/// Non-isomorphic uncolored graphs underlying a dessin in U_ell.
inline std::uint64_t uncolored_graph_count(std::uint64_t ell) {
    const std::uint64_t delta = ell % 2 ? 1 : 0;
    return (count_T(ell) + delta) / 2;
}

struct DecompositionVerdict {
    std::uint64_t ell;
    std::uint64_t sum;
    bool ok;
};

/// Corollary 1.8: ell = sum over admissible lambda | ell of
/// 2^{|pi'_lambda|} phi(lambda) prod_{p in pi_lambda} (p-2)/(p-1).
inline DecompositionVerdict decomposition_identity(std::uint64_t ell) {
    std::uint64_t sum = 0;
    for (std::uint64_t lambda : divisors(ell)) {
        if (p_part(lambda, 2) >= std::max<std::uint64_t>(p_part(ell, 2), 2)) continue;
        sum += count_U_lambda(ell, lambda);
    }
    return {ell, sum, sum == ell};
}

/// The dessin D(Z_ell, h^k, h^{1-k}) realizing a descriptor.
inline RegularDessin unicellular_dessin(const UnicellularDescriptor& d) {
    auto Z = Group::cyclic(d.ell);
    return make_dessin(Z, CyclicElt{d.k}, CyclicElt{(1 + d.ell - d.k % d.ell) % d.ell});
}

/// Direct product of regular dessins (Definition 4.3): componentwise pair on
/// the product group; requires the black orders pairwise coprime and the
/// white orders pairwise coprime.
inline RegularDessin direct_product(const std::vector<RegularDessin>& ds,
                                    std::uint64_t cap = kEnumCap) {
    if (ds.empty()) throw std::invalid_argument("direct_product: empty factor list");
    if (ds.size() == 1) return ds.front();
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j) {
            if (std::gcd(ds[i].ord_b, ds[j].ord_b) != 1)
                throw std::invalid_argument("direct_product: black orders not coprime");
            if (std::gcd(ds[i].ord_w, ds[j].ord_w) != 1)
                throw std::invalid_argument("direct_product: white orders not coprime");
        }
    std::vector<GroupPtr> factors;
    ProdElt b, w;
    for (const auto& d : ds) {
        factors.push_back(d.group);
        b.comps.push_back(d.b);
        w.comps.push_back(d.w);
    }
    auto P = Group::product(std::move(factors));
    return make_dessin(P, b, w, false, cap);
}

}  // namespace regdes

#endif  // REGDES_UNICELLULAR_HPP
