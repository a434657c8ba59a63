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

#ifndef REGDES_FACE_QP_HPP
#define REGDES_FACE_QP_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "regdes/covering.hpp"
#include "regdes/dessin.hpp"
#include "regdes/group.hpp"
#include "regdes/numtheory.hpp"

namespace regdes {

struct SearchExhausted : std::runtime_error {
    explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// HA: affine family b = h^i x, w = x^{-1} h^{j-i} inside AGL(1, p^d)

struct HAParams {
    std::uint64_t p;
    int d;
    std::uint64_t ell;
    std::uint64_t i, j;
    std::optional<FqElement> x;  // defaults to the field one

    bool smooth_flag() const { return i != 0 && i != j; }
};

inline void validate_ha(const HAParams& P) {
    if (!is_primitive_divisor(P.ell, P.p, P.d))
        throw std::invalid_argument("HA: ell is not a primitive divisor of p^d - 1");
    if (P.i >= P.ell || P.j >= P.ell) throw std::invalid_argument("HA: i, j must lie in [0, ell)");
    if (std::gcd(P.j, P.ell) != 1) throw std::invalid_argument("HA: gcd(j, ell) must be 1");
    if (P.x && P.x->is_zero()) throw std::invalid_argument("HA: x must be nonzero");
}

inline RegularDessin construct_ha(const HAParams& P, std::uint64_t cap = kEnumCap) {
    validate_ha(P);
    GroupPtr G = Group::agl1(P.p, P.d, P.ell);
    const auto& m = std::get<Affine1Model>(G->model());
    FqElement x0 = P.x ? *P.x : m.field->one();
    if (x0.is_zero()) throw std::invalid_argument("HA: x must be nonzero");
    // b = h^i x (apply h^i, then translate), w = x^{-1} h^{j-i}
    GroupElement b = Affine1Elt{x0, static_cast<std::uint32_t>(P.i), 0};
    const std::uint64_t ji = (P.j + P.ell - P.i) % P.ell;
    GroupElement w = Affine1Elt{-(x0 * m.h.pow(ji)), static_cast<std::uint32_t>(ji), 0};
    return make_dessin(G, b, w, false, cap);
}

/// Theorem 5.8: D_{i1,j1} and D_{i2,j2} are isomorphic iff (i2,j2) is a
/// simultaneous p^k-multiple of (i1,j1) mod ell.
inline bool ha_isomorphic(std::uint64_t i1, std::uint64_t j1, std::uint64_t i2, std::uint64_t j2,
                          std::uint64_t p, int d, std::uint64_t ell) {
    std::uint64_t pk = 1;
    for (int k = 0; k < d; ++k) {
        if ((i1 * pk) % ell == i2 % ell && (j1 * pk) % ell == j2 % ell) return true;
        pk = (pk * (p % ell)) % ell;
    }
    return false;
}

struct HAClass {
    std::uint64_t i, j;
    bool smooth;
    bool black_primitive, white_primitive;
};

struct HAEnumeration {
    std::uint64_t p;
    int d;
    std::uint64_t ell;
    std::vector<HAClass> classes;  // orbit representatives, lexicographic minima
    std::uint64_t expected;        // phi(ell) * ell / d
};

/// Lemma 5.6-adjacent primitivity conditions on the two vertex actions.
inline std::pair<bool, bool> ha_primitivity(std::uint64_t i, std::uint64_t j, std::uint64_t ell) {
    const bool black = std::gcd(i, ell) == 1;
    const bool white = std::gcd((j + ell - i % ell) % ell, ell) == 1;
    return {black, white};
}

inline HAEnumeration ha_enumerate(std::uint64_t p, int d, std::uint64_t ell) {
    if (!is_primitive_divisor(ell, p, d))
        throw std::invalid_argument("ha_enumerate: ell is not a primitive divisor of p^d - 1");
    HAEnumeration out{p, d, ell, {}, euler_phi(ell) * ell / d};
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t i = 0; i < ell; ++i) {
        for (std::uint64_t j = 0; j < ell; ++j) {
            if (std::gcd(j, ell) != 1) continue;
            if (seen.count({i, j})) continue;
            // mark the whole p^k-orbit; (i,j) is its lexicographic minimum
            std::uint64_t pk = 1;
            for (int k = 0; k < d; ++k) {
                seen.insert({(i * pk) % ell, (j * pk) % ell});
                pk = (pk * (p % ell)) % ell;
            }
            auto [bp, wp] = ha_primitivity(i, j, ell);
            out.classes.push_back({i, j, i != 0 && i != j, bp, wp});
        }
    }
    if (out.classes.size() != out.expected)
        throw std::logic_error("ha_enumerate: class count disagrees with phi(ell) ell / d");
    return out;
}

// ---------------------------------------------------------------------------
// TW: T wr Z_k with T = A5, b = g^2 x^{-1}, w = x g^{-1} (k odd >= 5)

namespace detail {

inline Perm a5_s() { return Perm{1, 2, 3, 4, 0}; }        // (1 2 3 4 5)
inline Perm a5_t() { return Perm{1, 0, 3, 2, 4}; }        // (1 2)(3 4)

inline bigint pow_bigint(std::uint64_t base, std::uint32_t exp) {
    bigint r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace detail

struct TWResult {
    RegularDessin dessin;
    bool telescoping_w;  // x x^g x^{g^2} ... x^{g^{k-1}} = 1
    bool telescoping_b;  // x x^{g^2} ... x^{g^{2k-2}} = 1
    bigint chi_expected;  // (3 - k) |T|^k
};

inline TWResult construct_tw(std::uint32_t k, std::uint64_t cap = kEnumCap) {
    if (k < 5 || k % 2 == 0)
        throw std::invalid_argument("construct_tw: k must be odd and >= 5");
    const Perm s = detail::a5_s(), t = detail::a5_t();
    // <s,t> = A5 with |t| = 2, checked by closure
    {
        auto A5 = Group::perm_group(5, {s, t}, "perm:5:a5");
        if (A5->enumeration().elems.size() != 60)
            throw std::logic_error("construct_tw: <s,t> is not A5");
        if (porder(t) != 2) throw std::logic_error("construct_tw: |t| != 2");
    }
    std::vector<Perm> base(k, pid(5));
    base[0] = s;
    base[2] = t;
    base[4] = pinv(pmul(t, s));  // (ts)^{-1}
    GroupElement x = WreathElt{base, 0};
    GroupElement g = WreathElt{std::vector<Perm>(k, pid(5)), 1};
    auto G = Group::wreath_a5(k, {x, g}, detail::pow_bigint(60, k) * k);

    GroupElement b = G->mul(G->pow(g, 2), G->inv(x));
    GroupElement w = G->mul(x, G->inv(g));

    // symbolic telescoping products (Lemma 5.13 proof)
    auto telescope = [&](std::uint32_t step) {
        GroupElement prod = G->identity();
        GroupElement gs = G->pow(g, step);
        GroupElement cur = x;
        for (std::uint32_t i = 0; i < k; ++i) {
            prod = G->mul(prod, cur);
            cur = G->mul(G->mul(G->inv(gs), cur), gs);
        }
        return G->is_identity(prod);
    };
    TWResult R{make_dessin(G, b, w, /*asserted_by_construction=*/true, cap), telescope(1),
               telescope(2), (bigint(3) - k) * detail::pow_bigint(60, k)};
    return R;
}

// ---------------------------------------------------------------------------
// PA: G = T^k <g> with g = (1,...,1,a) pi, a != 1 inner, b = g^2 x, w = x^{-1} g^{-1}

struct PAResult {
    RegularDessin dessin;
    bool enumeration_verified;  // closure of {x, g} matched |T|^k * k
    bool qp_type_pa;            // <g> ∩ N != 1, the PA certificate
};

inline PAResult construct_pa(std::uint32_t k, const Perm& a, std::uint64_t cap = kEnumCap) {
    if (k < 2) throw std::invalid_argument("construct_pa: k must be >= 2");
    if (pis_id(a)) throw std::invalid_argument("construct_pa: a must be a non-identity element");
    const Perm s = detail::a5_s(), t = detail::a5_t();
    std::vector<Perm> xb(k, pid(5));
    xb[0] = s;
    xb[1] = t;
    GroupElement x = WreathElt{xb, 0};
    std::vector<Perm> gb(k, pid(5));
    gb[k - 1] = a;
    GroupElement g = WreathElt{gb, 1};

    const bigint order = detail::pow_bigint(60, k) * k;
    auto G = Group::wreath_a5(k, {x, g}, order);
    bool verified = false;
    if (order <= bigint(cap)) {
        if (bigint(G->enumeration(cap).elems.size()) != order)
            throw std::logic_error("construct_pa: closure disagrees with |T|^k k");
        verified = true;
    }
    GroupElement b = G->mul(G->pow(g, 2), x);
    GroupElement w = G->mul(G->inv(x), G->inv(g));
    // <g> ∩ N contains g^k = (a,...,a) != 1
    GroupElement gk = G->pow(g, static_cast<std::int64_t>(k));
    const bool qp = std::get<WreathElt>(gk.v).top == 0 && !G->is_identity(gk);
    return {make_dessin(G, b, w, /*asserted_by_construction=*/true, cap), verified, qp};
}

// ---------------------------------------------------------------------------
// AS: SigmaL(2, 2^r) = SL(2, 2^r):<phi>, b = phi^{j-1}, w = phi x with
// x = [phi, s] = [phi^j, t] generating together with phi (Construction 5.19)

struct ASWitness {
    int r;
    std::uint64_t j;
    GroupElement x, s, t, b, w;
};

struct ASResult {
    ASWitness witness;
    RegularDessin dessin;
};

inline ASResult construct_as(int r, std::uint64_t cap = kEnumCap) {
    if (r < 5 || !is_prime(r)) throw std::invalid_argument("construct_as: r must be a prime >= 5");
    GroupPtr G = Group::sigmal2(r);
    const auto& model = std::get<SemiMat2Model>(G->model());
    const std::uint64_t q = model.field->q();
    const std::uint64_t t_order = q * (q - 1) * (q + 1);
    if (t_order > cap) throw CapExceeded("construct_as: SL(2,2^r) exceeds the enumeration cap");

    GroupElement phi = SemiMat2Elt{std::get<SemiMat2Elt>(G->identity().v).m, 1};
    // the socle T = SL(2, 2^r): closure of the matrix transvections
    std::vector<GroupElement> mat_gens;
    for (const auto& gen : G->generators())
        if (std::get<SemiMat2Elt>(gen.v).frob == 0) mat_gens.push_back(gen);
    std::vector<GroupElement> T = generated_subgroup(*G, mat_gens, cap);
    if (T.size() != t_order) throw std::logic_error("construct_as: |SL(2,2^r)| mismatch");

    auto commutator = [&](const GroupElement& u, const GroupElement& v) {
        return G->mul(G->mul(G->inv(u), G->inv(v)), G->mul(u, v));
    };

    // D_1 = {[phi, s]} with a witness s per value
    std::unordered_map<GroupElement, GroupElement> d1;
    for (const auto& s : T) d1.emplace(commutator(phi, s), s);

    for (std::uint64_t j = 2; j < static_cast<std::uint64_t>(r); ++j) {
        GroupElement phij = G->pow(phi, static_cast<std::int64_t>(j));
        for (const auto& t : T) {
            GroupElement x = commutator(phij, t);
            auto it = d1.find(x);
            if (it == d1.end()) continue;
            // generation: the phi-orbit of x must generate all of T
            std::vector<GroupElement> orbit;
            GroupElement cur = x;
            for (int e = 0; e < r; ++e) {
                orbit.push_back(cur);
                cur = G->mul(G->mul(G->inv(phi), cur), phi);
            }
            if (generated_subgroup(*G, orbit, cap).size() != t_order) continue;

            ASWitness W;
            W.r = r;
            W.j = j;
            W.x = x;
            W.s = it->second;
            W.t = t;
            W.b = G->pow(phi, static_cast<std::int64_t>(j - 1));
            W.w = G->mul(phi, x);
            const auto rr = static_cast<std::uint64_t>(r);
            if (G->element_order(W.b) != rr || G->element_order(W.w) != rr ||
                G->element_order(G->mul(W.b, W.w)) != rr)
                throw std::logic_error("construct_as: order identities violated");
            RegularDessin D = make_dessin(G, W.b, W.w, false, cap);
            return {W, std::move(D)};
        }
    }
    throw SearchExhausted("construct_as: no witness found (contradicts the r >= 5 theory)");
}

}  // namespace regdes

#endif  // REGDES_FACE_QP_HPP
