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

#ifndef REGDES_GROUP_HPP
#define REGDES_GROUP_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "regdes/gf.hpp"
#include "regdes/intpoly.hpp"
#include "regdes/numtheory.hpp"

namespace regdes {

constexpr std::uint64_t kEnumCap = 2'000'000;

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// permutations on points 0..n-1, as image arrays

using Perm = std::vector<std::uint16_t>;

inline Perm pid(std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint16_t>(i);
    return p;
}

/// Apply a, then b.
inline Perm pmul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

inline Perm pinv(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
    return r;
}

inline bool pis_id(const Perm& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != i) return false;
    return true;
}

inline std::uint64_t porder(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = a[j]) seen[j] = true, ++len;
        ord = std::lcm(ord, len);
    }
    return ord;
}

// ---------------------------------------------------------------------------
// element payloads

struct GroupElement;

struct CyclicElt {
    std::uint64_t r = 0;
    friend bool operator==(const CyclicElt& a, const CyclicElt& b) { return a.r == b.r; }
    friend bool operator<(const CyclicElt& a, const CyclicElt& b) { return a.r < b.r; }
};

struct PermElt {
    Perm img;
    friend bool operator==(const PermElt& a, const PermElt& b) { return a.img == b.img; }
    friend bool operator<(const PermElt& a, const PermElt& b) { return a.img < b.img; }
};

/// 2x2 matrix over GF(q) with determinant 1, row-major.
struct Mat2Elt {
    std::array<FqElement, 4> m;
    friend bool operator==(const Mat2Elt& a, const Mat2Elt& b) { return a.m == b.m; }
    friend bool operator<(const Mat2Elt& a, const Mat2Elt& b) {
        for (int i = 0; i < 4; ++i) {
            if (a.m[i] < b.m[i]) return true;
            if (b.m[i] < a.m[i]) return false;
        }
        return false;
    }
};

/// Element A * phi^frob of SigmaL(2,q) = SL(2,q):<phi>, phi the field Frobenius.
struct SemiMat2Elt {
    std::array<FqElement, 4> m;
    std::uint32_t frob = 0;
    friend bool operator==(const SemiMat2Elt& a, const SemiMat2Elt& b) {
        return a.frob == b.frob && a.m == b.m;
    }
    friend bool operator<(const SemiMat2Elt& a, const SemiMat2Elt& b) {
        if (a.frob != b.frob) return a.frob < b.frob;
        return Mat2Elt{a.m} < Mat2Elt{b.m};
    }
};

/// The affine-semilinear map x -> x^(p^frob) * h^mult + trans on GF(p^d).
struct Affine1Elt {
    FqElement trans;
    std::uint32_t mult = 0;
    std::uint32_t frob = 0;
    friend bool operator==(const Affine1Elt& a, const Affine1Elt& b) {
        return a.mult == b.mult && a.frob == b.frob && a.trans == b.trans;
    }
    friend bool operator<(const Affine1Elt& a, const Affine1Elt& b) {
        if (a.frob != b.frob) return a.frob < b.frob;
        if (a.mult != b.mult) return a.mult < b.mult;
        return a.trans < b.trans;
    }
};

/// (t_0,...,t_{k-1}) g^top in T wr Z_k, inner entries permutations of T.
struct WreathElt {
    std::vector<Perm> base;
    std::uint32_t top = 0;
    friend bool operator==(const WreathElt& a, const WreathElt& b) {
        return a.top == b.top && a.base == b.base;
    }
    friend bool operator<(const WreathElt& a, const WreathElt& b) {
        if (a.top != b.top) return a.top < b.top;
        return a.base < b.base;
    }
};

/// x^a y^e in the generalized quaternion group Q_{4m} (|x| = 2m, y^2 = x^m).
struct DicyclicElt {
    std::uint32_t a = 0;
    std::uint8_t e = 0;
    friend bool operator==(const DicyclicElt& l, const DicyclicElt& r) {
        return l.a == r.a && l.e == r.e;
    }
    friend bool operator<(const DicyclicElt& l, const DicyclicElt& r) {
        if (l.e != r.e) return l.e < r.e;
        return l.a < r.a;
    }
};

struct ProdElt {
    std::vector<GroupElement> comps;
    friend bool operator==(const ProdElt& a, const ProdElt& b);
    friend bool operator<(const ProdElt& a, const ProdElt& b);
};

using EltVariant = std::variant<CyclicElt, PermElt, Mat2Elt, SemiMat2Elt, Affine1Elt,
                                WreathElt, DicyclicElt, ProdElt>;

struct GroupElement {
    EltVariant v;
    GroupElement() = default;
    template <typename T,
              typename = std::enable_if_t<!std::is_same_v<std::decay_t<T>, GroupElement> &&
                                          std::is_constructible_v<EltVariant, T&&>>>
    GroupElement(T&& x) : v(std::forward<T>(x)) {}  // NOLINT: implicit by design

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.v == b.v; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.v < b.v; }

    std::size_t hash() const;
};

inline bool operator==(const ProdElt& a, const ProdElt& b) { return a.comps == b.comps; }
inline bool operator<(const ProdElt& a, const ProdElt& b) {
    return std::lexicographical_compare(a.comps.begin(), a.comps.end(), b.comps.begin(),
                                        b.comps.end());
}

namespace detail {
inline void hash_mix(std::size_t& h, std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}
}  // namespace detail

inline std::size_t GroupElement::hash() const {
    std::size_t h = v.index();
    std::visit(
        [&h](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, CyclicElt>) {
                detail::hash_mix(h, std::hash<std::uint64_t>{}(e.r));
            } else if constexpr (std::is_same_v<T, PermElt>) {
                for (auto x : e.img) detail::hash_mix(h, x);
            } else if constexpr (std::is_same_v<T, Mat2Elt>) {
                for (const auto& x : e.m) detail::hash_mix(h, x.hash());
            } else if constexpr (std::is_same_v<T, SemiMat2Elt>) {
                detail::hash_mix(h, e.frob);
                for (const auto& x : e.m) detail::hash_mix(h, x.hash());
            } else if constexpr (std::is_same_v<T, Affine1Elt>) {
                detail::hash_mix(h, e.mult);
                detail::hash_mix(h, e.frob);
                detail::hash_mix(h, e.trans.hash());
            } else if constexpr (std::is_same_v<T, WreathElt>) {
                detail::hash_mix(h, e.top);
                for (const auto& p : e.base)
                    for (auto x : p) detail::hash_mix(h, x);
            } else if constexpr (std::is_same_v<T, DicyclicElt>) {
                detail::hash_mix(h, e.a);
                detail::hash_mix(h, e.e);
            } else if constexpr (std::is_same_v<T, ProdElt>) {
                for (const auto& c : e.comps) detail::hash_mix(h, c.hash());
            }
        },
        v);
    return h;
}

}  // namespace regdes

namespace std {
template <>
struct hash<regdes::GroupElement> {
    std::size_t operator()(const regdes::GroupElement& g) const { return g.hash(); }
};
}  // namespace std

namespace regdes {

// ---------------------------------------------------------------------------
// group models

class Group;
using GroupPtr = std::shared_ptr<const Group>;
class NormalSubgroup;

struct CyclicModel {
    std::uint64_t n;
};
struct PermModel {
    std::uint32_t degree;
};
struct Mat2Model {
    FqFieldPtr field;
};
struct SemiMat2Model {
    FqFieldPtr field;  // GF(2^r); frobenius exponent runs mod r
};
struct Affine1Model {
    FqFieldPtr field;
    std::uint64_t ell;  // order of the multiplier subgroup <h>
    FqElement h;        // deterministic generator of that subgroup
};
struct WreathModel {
    std::uint32_t k;
    std::uint32_t inner_degree;
    std::uint64_t inner_order;  // |T|
};
struct DicyclicModel {
    std::uint32_t m;  // Q_{4m}
};
struct ProdModel {
    std::vector<GroupPtr> factors;
};
struct QuotientModel {
    GroupPtr parent;
    std::shared_ptr<const NormalSubgroup> sub;
};

using ModelVariant = std::variant<CyclicModel, PermModel, Mat2Model, SemiMat2Model,
                                  Affine1Model, WreathModel, DicyclicModel, ProdModel,
                                  QuotientModel>;

struct Enumeration {
    std::vector<GroupElement> elems;
    std::unordered_map<GroupElement, std::uint32_t> index;
};

/// A finite group: a concrete model plus a generator list. Enumeration (when
/// within the cap) and order are computed lazily and cached write-once.
class Group {
  public:
    Group(ModelVariant model, std::vector<GroupElement> gens, std::string spec,
          std::optional<bigint> structural_order = std::nullopt)
        : model_(std::move(model)),
          gens_(std::move(gens)),
          spec_(std::move(spec)),
          structural_order_(std::move(structural_order)) {}

    // -- factories ---------------------------------------------------------
    static GroupPtr cyclic(std::uint64_t n);
    static GroupPtr perm_group(std::uint32_t degree, std::vector<Perm> gens, std::string spec);
    static GroupPtr alternating5();
    static GroupPtr sl2(std::uint64_t p, int f = 1);
    static GroupPtr psl2(std::uint64_t p, int f = 1);
    static GroupPtr dicyclic(std::uint32_t order_4m);
    static GroupPtr agl1(std::uint64_t p, int d, std::uint64_t ell);
    static GroupPtr sigmal2(int r);
    /// T wr Z_k with T = A5; generators chosen by the caller (constructions
    /// supply theirs), order |T|^k * k certified structurally.
    static GroupPtr wreath_a5(std::uint32_t k, std::vector<GroupElement> gens,
                              std::optional<bigint> structural_order);
    static GroupPtr product(std::vector<GroupPtr> factors);
    static GroupPtr quotient_of(GroupPtr parent, std::shared_ptr<const NormalSubgroup> sub);

    // -- structure ----------------------------------------------------------
    const ModelVariant& model() const { return model_; }
    const std::vector<GroupElement>& generators() const { return gens_; }
    const std::string& spec_string() const { return spec_; }

    GroupElement identity() const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement pow(const GroupElement& g, std::int64_t e) const;
    bool is_identity(const GroupElement& g) const { return g == identity(); }

    std::uint64_t element_order(const GroupElement& g) const;

    /// |G|: structural when known, else the enumeration size.
    bigint order(std::uint64_t cap = kEnumCap) const {
        if (structural_order_) return *structural_order_;
        return bigint(enumeration(cap).elems.size());
    }
    bool order_is_structural() const { return structural_order_.has_value(); }

    bool enumerable(std::uint64_t cap = kEnumCap) const {
        if (try_enumeration(cap)) return true;
        return false;
    }

    /// Full element list (lazy, cached); throws CapExceeded past the cap.
    const Enumeration& enumeration(std::uint64_t cap = kEnumCap) const {
        const Enumeration* e = try_enumeration(cap);
        if (!e) throw CapExceeded("group enumeration exceeds cap for " + spec_);
        return *e;
    }

    const Enumeration* try_enumeration(std::uint64_t cap = kEnumCap) const;

    std::string format(const GroupElement& g) const;

  private:
    ModelVariant model_;
    std::vector<GroupElement> gens_;
    std::string spec_;
    std::optional<bigint> structural_order_;

    mutable std::mutex mu_;
    mutable std::optional<Enumeration> enum_;
    mutable bool enum_failed_ = false;
    mutable std::uint64_t enum_failed_cap_ = 0;
};

// ---------------------------------------------------------------------------
// normal subgroups

/// Normal subgroup of a parent group: either an explicit element set
/// (verified closed and conjugation-invariant) or a structural description.
class NormalSubgroup {
  public:
    enum class Kind { Enumerated, WreathBase, AffineTranslations, SemiMatBase };

    static std::shared_ptr<const NormalSubgroup> enumerated(GroupPtr parent,
                                                            std::vector<GroupElement> elems,
                                                            bool verify = true);
    static std::shared_ptr<const NormalSubgroup> trivial(GroupPtr parent);
    static std::shared_ptr<const NormalSubgroup> wreath_base(GroupPtr parent);
    static std::shared_ptr<const NormalSubgroup> affine_translations(GroupPtr parent);
    static std::shared_ptr<const NormalSubgroup> semimat_base(GroupPtr parent);

    Kind kind() const { return kind_; }
    const GroupPtr& parent() const { return parent_; }

    bigint size() const;
    bool contains(const GroupElement& g) const;
    bool is_trivial() const { return size() == 1; }

    /// Element list; only for enumerated subgroups.
    const std::vector<GroupElement>& elements() const {
        if (kind_ != Kind::Enumerated)
            throw std::logic_error("NormalSubgroup: structural subgroup has no element list");
        return elems_;
    }

    /// Canonical (minimal) representative of the coset N g.
    GroupElement coset_rep(const GroupElement& g) const {
        if (kind_ != Kind::Enumerated)
            throw std::logic_error("NormalSubgroup: coset_rep needs an enumerated subgroup");
        GroupElement best = g;
        bool first = true;
        for (const auto& n : elems_) {
            GroupElement cand = parent_->mul(n, g);
            if (first || cand < best) best = cand, first = false;
        }
        return best;
    }

    NormalSubgroup(GroupPtr parent, Kind kind, std::vector<GroupElement> elems)
        : parent_(std::move(parent)), kind_(kind), elems_(std::move(elems)) {
        for (const auto& e : elems_) set_.insert(e);
    }

  private:
    GroupPtr parent_;
    Kind kind_;
    std::vector<GroupElement> elems_;
    std::unordered_set<GroupElement> set_;
};

using NormalSubgroupPtr = std::shared_ptr<const NormalSubgroup>;

// ---------------------------------------------------------------------------
// Group implementation

inline GroupElement Group::identity() const {
    return std::visit(
        [this](const auto& m) -> GroupElement {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, CyclicModel>) {
                return CyclicElt{0};
            } else if constexpr (std::is_same_v<M, PermModel>) {
                return PermElt{pid(m.degree)};
            } else if constexpr (std::is_same_v<M, Mat2Model>) {
                const FqField* F = m.field.get();
                return Mat2Elt{{F->one(), F->zero(), F->zero(), F->one()}};
            } else if constexpr (std::is_same_v<M, SemiMat2Model>) {
                const FqField* F = m.field.get();
                return SemiMat2Elt{{F->one(), F->zero(), F->zero(), F->one()}, 0};
            } else if constexpr (std::is_same_v<M, Affine1Model>) {
                return Affine1Elt{m.field->zero(), 0, 0};
            } else if constexpr (std::is_same_v<M, WreathModel>) {
                return WreathElt{std::vector<Perm>(m.k, pid(m.inner_degree)), 0};
            } else if constexpr (std::is_same_v<M, DicyclicModel>) {
                return DicyclicElt{0, 0};
            } else if constexpr (std::is_same_v<M, ProdModel>) {
                ProdElt e;
                for (const auto& f : m.factors) e.comps.push_back(f->identity());
                return e;
            } else {
                static_assert(std::is_same_v<M, QuotientModel>);
                return m.sub->coset_rep(m.parent->identity());
            }
        },
        model_);
}

namespace detail {

inline std::array<FqElement, 4> mat_mul(const std::array<FqElement, 4>& a,
                                        const std::array<FqElement, 4>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline std::array<FqElement, 4> mat_inv_det1(const std::array<FqElement, 4>& a) {
    return {a[3], -a[1], -a[2], a[0]};
}

inline std::array<FqElement, 4> mat_frob(const std::array<FqElement, 4>& a, unsigned k) {
    return {a[0].frobenius(k), a[1].frobenius(k), a[2].frobenius(k), a[3].frobenius(k)};
}

}  // namespace detail

inline GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
    return std::visit(
        [&](const auto& m) -> GroupElement {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, CyclicModel>) {
                return CyclicElt{(std::get<CyclicElt>(a.v).r + std::get<CyclicElt>(b.v).r) % m.n};
            } else if constexpr (std::is_same_v<M, PermModel>) {
                return PermElt{pmul(std::get<PermElt>(a.v).img, std::get<PermElt>(b.v).img)};
            } else if constexpr (std::is_same_v<M, Mat2Model>) {
                return Mat2Elt{detail::mat_mul(std::get<Mat2Elt>(a.v).m, std::get<Mat2Elt>(b.v).m)};
            } else if constexpr (std::is_same_v<M, SemiMat2Model>) {
                const auto& x = std::get<SemiMat2Elt>(a.v);
                const auto& y = std::get<SemiMat2Elt>(b.v);
                const auto f = static_cast<std::uint32_t>(m.field->f());
                // (A, c1)(B, c2) = (A^(phi^c2) B, c1 + c2)
                return SemiMat2Elt{detail::mat_mul(detail::mat_frob(x.m, y.frob), y.m),
                                   (x.frob + y.frob) % f};
            } else if constexpr (std::is_same_v<M, Affine1Model>) {
                const auto& x = std::get<Affine1Elt>(a.v);
                const auto& y = std::get<Affine1Elt>(b.v);
                const auto f = static_cast<std::uint32_t>(m.field->f());
                const std::uint64_t pk = ipow(m.field->p(), y.frob);
                // maps composed left-to-right:
                // (b1,e1,c1)(b2,e2,c2) = (b1^(p^c2) h^e2 + b2, e1 p^c2 + e2, c1 + c2)
                return Affine1Elt{x.trans.frobenius(y.frob) * m.h.pow(y.mult) + y.trans,
                                  static_cast<std::uint32_t>((x.mult * (pk % m.ell) + y.mult) % m.ell),
                                  (x.frob + y.frob) % f};
            } else if constexpr (std::is_same_v<M, WreathModel>) {
                const auto& x = std::get<WreathElt>(a.v);
                const auto& y = std::get<WreathElt>(b.v);
                WreathElt r;
                r.top = (x.top + y.top) % m.k;
                r.base.resize(m.k);
                // (u, e)(v, f) = (u * lshift^e(v), e + f)
                for (std::uint32_t i = 0; i < m.k; ++i)
                    r.base[i] = pmul(x.base[i], y.base[(i + x.top) % m.k]);
                return r;
            } else if constexpr (std::is_same_v<M, DicyclicModel>) {
                const auto& x = std::get<DicyclicElt>(a.v);
                const auto& y = std::get<DicyclicElt>(b.v);
                const std::uint32_t n = 2 * m.m;
                if (x.e == 0) return DicyclicElt{(x.a + y.a) % n, y.e};
                // x^a y x^b y^f: y x^b = x^{-b} y
                std::uint32_t base = (x.a + n - y.a % n) % n;
                if (y.e == 0) return DicyclicElt{base, 1};
                return DicyclicElt{(base + m.m) % n, 0};
            } else if constexpr (std::is_same_v<M, ProdModel>) {
                const auto& x = std::get<ProdElt>(a.v);
                const auto& y = std::get<ProdElt>(b.v);
                ProdElt r;
                r.comps.reserve(m.factors.size());
                for (std::size_t i = 0; i < m.factors.size(); ++i)
                    r.comps.push_back(m.factors[i]->mul(x.comps[i], y.comps[i]));
                return r;
            } else {
                static_assert(std::is_same_v<M, QuotientModel>);
                return m.sub->coset_rep(m.parent->mul(a, b));
            }
        },
        model_);
}

inline GroupElement Group::inv(const GroupElement& a) const {
    return std::visit(
        [&](const auto& m) -> GroupElement {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, CyclicModel>) {
                const auto r = std::get<CyclicElt>(a.v).r;
                return CyclicElt{r == 0 ? 0 : m.n - r};
            } else if constexpr (std::is_same_v<M, PermModel>) {
                return PermElt{pinv(std::get<PermElt>(a.v).img)};
            } else if constexpr (std::is_same_v<M, Mat2Model>) {
                return Mat2Elt{detail::mat_inv_det1(std::get<Mat2Elt>(a.v).m)};
            } else if constexpr (std::is_same_v<M, SemiMat2Model>) {
                const auto& x = std::get<SemiMat2Elt>(a.v);
                const auto f = static_cast<std::uint32_t>(m.field->f());
                const std::uint32_t c = (f - x.frob % f) % f;
                return SemiMat2Elt{detail::mat_frob(detail::mat_inv_det1(x.m), c), c};
            } else if constexpr (std::is_same_v<M, Affine1Model>) {
                const auto& x = std::get<Affine1Elt>(a.v);
                const auto f = static_cast<std::uint32_t>(m.field->f());
                const std::uint32_t c = (f - x.frob % f) % f;
                const std::uint64_t pk = ipow(m.field->p(), c);
                const auto e = static_cast<std::uint32_t>(
                    (m.ell - (x.mult * (pk % m.ell)) % m.ell) % m.ell);
                return Affine1Elt{-(x.trans.frobenius(c) * m.h.pow(e)), e, c};
            } else if constexpr (std::is_same_v<M, WreathModel>) {
                const auto& x = std::get<WreathElt>(a.v);
                WreathElt r;
                r.top = (m.k - x.top) % m.k;
                r.base.resize(m.k);
                for (std::uint32_t i = 0; i < m.k; ++i)
                    r.base[i] = pinv(x.base[(i + r.top) % m.k]);
                return r;
            } else if constexpr (std::is_same_v<M, DicyclicModel>) {
                const auto& x = std::get<DicyclicElt>(a.v);
                const std::uint32_t n = 2 * m.m;
                if (x.e == 0) return DicyclicElt{(n - x.a) % n, 0};
                return DicyclicElt{(x.a + m.m) % n, 1};
            } else if constexpr (std::is_same_v<M, ProdModel>) {
                const auto& x = std::get<ProdElt>(a.v);
                ProdElt r;
                r.comps.reserve(m.factors.size());
                for (std::size_t i = 0; i < m.factors.size(); ++i)
                    r.comps.push_back(m.factors[i]->inv(x.comps[i]));
                return r;
            } else {
                static_assert(std::is_same_v<M, QuotientModel>);
                return m.sub->coset_rep(m.parent->inv(a));
            }
        },
        model_);
}

inline GroupElement Group::pow(const GroupElement& g, std::int64_t e) const {
    GroupElement base = e < 0 ? inv(g) : g;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    GroupElement r = identity();
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

namespace detail {

/// ord(g) by divide-out against a known exponent multiple E (g^E = 1).
template <typename PowFn, typename IsIdFn>
std::uint64_t order_by_divide_out(std::uint64_t E, PowFn&& powfn, IsIdFn&& is_id) {
    std::uint64_t ord = E;
    for (const auto& [p, e] : factorize(E).factors)
        for (int i = 0; i < e; ++i) {
            if (ord % p == 0 && is_id(powfn(ord / p)))
                ord /= p;
            else
                break;
        }
    return ord;
}

}  // namespace detail

inline std::uint64_t Group::element_order(const GroupElement& g) const {
    return std::visit(
        [&](const auto& m) -> std::uint64_t {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, CyclicModel>) {
                return m.n / std::gcd(std::get<CyclicElt>(g.v).r, m.n);
            } else if constexpr (std::is_same_v<M, PermModel>) {
                return porder(std::get<PermElt>(g.v).img);
            } else if constexpr (std::is_same_v<M, Mat2Model>) {
                // orders divide q(q-1)(q+1)
                const std::uint64_t q = m.field->q();
                return detail::order_by_divide_out(
                    q * (q - 1) * (q + 1),
                    [&](std::uint64_t e) { return pow(g, static_cast<std::int64_t>(e)); },
                    [&](const GroupElement& x) { return is_identity(x); });
            } else if constexpr (std::is_same_v<M, SemiMat2Model>) {
                const std::uint64_t q = m.field->q();
                const std::uint64_t E = q * (q - 1) * (q + 1) * m.field->f();
                return detail::order_by_divide_out(
                    E, [&](std::uint64_t e) { return pow(g, static_cast<std::int64_t>(e)); },
                    [&](const GroupElement& x) { return is_identity(x); });
            } else if constexpr (std::is_same_v<M, Affine1Model>) {
                const auto& x = std::get<Affine1Elt>(g.v);
                if (x.frob == 0) {
                    if (x.mult != 0) return m.ell / std::gcd<std::uint64_t>(x.mult, m.ell);
                    return x.trans.is_zero() ? 1 : m.field->p();
                }
                const std::uint64_t E = m.field->p() * (m.field->q() - 1) * m.field->f();
                return detail::order_by_divide_out(
                    E, [&](std::uint64_t e) { return pow(g, static_cast<std::int64_t>(e)); },
                    [&](const GroupElement& y) { return is_identity(y); });
            } else if constexpr (std::is_same_v<M, WreathModel>) {
                const auto& x = std::get<WreathElt>(g.v);
                if (x.top == 0) {
                    std::uint64_t ord = 1;
                    for (const auto& p : x.base) ord = std::lcm(ord, porder(p));
                    return ord;
                }
                // cycle products of the top shift
                const std::uint32_t k = m.k;
                const std::uint32_t L = k / std::gcd(x.top, k);
                std::uint64_t ord = 1;
                std::vector<bool> seen(k, false);
                for (std::uint32_t i0 = 0; i0 < k; ++i0) {
                    if (seen[i0]) continue;
                    Perm prod = pid(m.inner_degree);
                    std::uint32_t i = i0;
                    do {
                        seen[i] = true;
                        prod = pmul(prod, x.base[i]);
                        i = (i + x.top) % k;
                    } while (i != i0);
                    ord = std::lcm(ord, porder(prod));
                }
                return static_cast<std::uint64_t>(L) * ord;
            } else if constexpr (std::is_same_v<M, DicyclicModel>) {
                const auto& x = std::get<DicyclicElt>(g.v);
                if (x.e) return 4;
                return (2 * m.m) / std::gcd<std::uint64_t>(x.a, 2 * m.m);
            } else if constexpr (std::is_same_v<M, ProdModel>) {
                const auto& x = std::get<ProdElt>(g.v);
                std::uint64_t ord = 1;
                for (std::size_t i = 0; i < m.factors.size(); ++i)
                    ord = std::lcm(ord, m.factors[i]->element_order(x.comps[i]));
                return ord;
            } else {
                static_assert(std::is_same_v<M, QuotientModel>);
                // |gN| divides the parent order of the representative
                const std::uint64_t E = m.parent->element_order(g);
                return detail::order_by_divide_out(
                    E, [&](std::uint64_t e) { return pow(g, static_cast<std::int64_t>(e)); },
                    [&](const GroupElement& x) { return is_identity(x); });
            }
        },
        model_);
}

inline const Enumeration* Group::try_enumeration(std::uint64_t cap) const {
    std::lock_guard<std::mutex> lk(mu_);
    if (enum_) return &*enum_;
    if (enum_failed_ && enum_failed_cap_ >= cap) return nullptr;
    if (structural_order_ && *structural_order_ > bigint(cap)) {
        enum_failed_ = true;
        enum_failed_cap_ = std::max(enum_failed_cap_, cap);
        return nullptr;
    }
    Enumeration en;
    const GroupElement id = identity();
    en.elems.push_back(id);
    en.index.emplace(id, 0);
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        const std::uint32_t ui = queue.front();
        queue.pop_front();
        for (const auto& s : gens_) {
            GroupElement v = mul(en.elems[ui], s);
            if (en.index.count(v)) continue;
            if (en.elems.size() >= cap) {
                enum_failed_ = true;
                enum_failed_cap_ = std::max(enum_failed_cap_, cap);
                return nullptr;
            }
            en.index.emplace(v, static_cast<std::uint32_t>(en.elems.size()));
            en.elems.push_back(std::move(v));
            queue.push_back(static_cast<std::uint32_t>(en.elems.size() - 1));
        }
    }
    enum_ = std::move(en);
    return &*enum_;
}

// ---------------------------------------------------------------------------
// free-standing group operations (the spec's group-engine surface)

/// Breadth-first closure of a generating set inside G; throws CapExceeded.
inline std::vector<GroupElement> generated_subgroup(const Group& G,
                                                    const std::vector<GroupElement>& gens,
                                                    std::uint64_t cap = kEnumCap) {
    std::vector<GroupElement> elems{G.identity()};
    std::unordered_set<GroupElement> seen{G.identity()};
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        const std::uint32_t ui = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            GroupElement v = G.mul(elems[ui], s);
            if (seen.count(v)) continue;
            if (elems.size() >= cap)
                throw CapExceeded("generated_subgroup: closure exceeds cap");
            seen.insert(v);
            elems.push_back(std::move(v));
            queue.push_back(static_cast<std::uint32_t>(elems.size() - 1));
        }
    }
    return elems;
}

/// {g^0, ..., g^{|g|-1}}; not asserted normal.
inline std::vector<GroupElement> cyclic_subgroup(const Group& G, const GroupElement& g) {
    std::vector<GroupElement> elems;
    GroupElement cur = G.identity();
    do {
        elems.push_back(cur);
        cur = G.mul(cur, g);
    } while (cur != elems.front());
    return elems;
}

inline bool is_generating_pair(const Group& G, const GroupElement& b, const GroupElement& w,
                               std::uint64_t cap = kEnumCap) {
    const bigint n = G.order(cap);
    const auto closure = generated_subgroup(G, {b, w}, cap);
    return bigint(closure.size()) == n;
}

/// |<g> ∩ N| given the cyclic subgroup's element list.
inline std::uint64_t intersection_size_with(const NormalSubgroup& N,
                                            const std::vector<GroupElement>& cyc) {
    std::uint64_t c = 0;
    for (const auto& g : cyc)
        if (N.contains(g)) ++c;
    return c;
}

/// |<g> ∩ N| via power iteration (no materialized subgroup needed).
inline std::uint64_t cyclic_intersection_size(const Group& G, const GroupElement& g,
                                              const NormalSubgroup& N) {
    std::uint64_t c = 0;
    GroupElement cur = G.identity();
    do {
        if (N.contains(cur)) ++c;
        cur = G.mul(cur, g);
    } while (cur != G.identity());
    return c;
}

struct GeneratorMapResult {
    bool ok = false;
    std::string reason;
    std::unordered_map<GroupElement, GroupElement> map;  // on success: bijective homomorphism
};

/// Attempt to extend (b1,w1) -> (b2,w2) to an isomorphism G -> H by breadth-
/// first assignment over the Cayley graph; conflicts mean no homomorphism.
inline GeneratorMapResult extend_generator_map(const Group& G, const GroupElement& b1,
                                               const GroupElement& w1, const Group& H,
                                               const GroupElement& b2, const GroupElement& w2,
                                               std::uint64_t cap = kEnumCap) {
    GeneratorMapResult res;
    const bigint nG = G.order(cap), nH = H.order(cap);
    if (nG != nH) {
        res.reason = "orders differ";
        return res;
    }
    const std::array<std::pair<GroupElement, GroupElement>, 2> pairs{{{b1, b2}, {w1, w2}}};
    std::unordered_map<GroupElement, GroupElement> map;
    map.emplace(G.identity(), H.identity());
    std::deque<GroupElement> queue{G.identity()};
    while (!queue.empty()) {
        GroupElement u = queue.front();
        queue.pop_front();
        const GroupElement fu = map.at(u);
        for (const auto& [s, t] : pairs) {
            GroupElement v = G.mul(u, s);
            GroupElement img = H.mul(fu, t);
            auto it = map.find(v);
            if (it != map.end()) {
                if (it->second != img) {
                    res.reason = "not a homomorphism";
                    return res;
                }
            } else {
                map.emplace(v, img);
                queue.push_back(std::move(v));
            }
        }
    }
    if (bigint(map.size()) != nG) {
        res.reason = "generators do not generate";
        return res;
    }
    std::unordered_set<GroupElement> image;
    for (const auto& [k, v] : map) image.insert(v);
    if (bigint(image.size()) != nH) {
        res.reason = "not bijective";
        return res;
    }
    res.ok = true;
    res.map = std::move(map);
    return res;
}

/// Smallest normal subgroup of G containing seed: grow a small generating
/// set with escaped conjugates until the closure is conjugation-invariant.
inline std::vector<GroupElement> normal_closure_elements(const Group& G,
                                                         const std::vector<GroupElement>& seed,
                                                         std::uint64_t cap = kEnumCap) {
    std::vector<GroupElement> gens = seed;
    for (;;) {
        std::vector<GroupElement> sub = generated_subgroup(G, gens, cap);
        std::unordered_set<GroupElement> subset(sub.begin(), sub.end());
        std::vector<GroupElement> extra;
        for (const auto& n : sub) {
            for (const auto& g : G.generators()) {
                GroupElement c = G.mul(G.mul(G.inv(g), n), g);
                if (!subset.count(c)) {
                    subset.insert(c);
                    extra.push_back(std::move(c));
                }
            }
            if (extra.size() >= 8) break;  // a few escapees per round suffice
        }
        if (extra.empty()) return sub;
        for (auto& e : extra) gens.push_back(std::move(e));
    }
}

inline NormalSubgroupPtr normal_closure(GroupPtr G, const std::vector<GroupElement>& seed,
                                        std::uint64_t cap = kEnumCap) {
    return NormalSubgroup::enumerated(G, normal_closure_elements(*G, seed, cap), false);
}

/// True iff every non-identity element of N normally generates all of N.
/// Normal closures are constant on G-conjugacy classes, so only class
/// representatives inside N are tested.
inline bool is_minimal_normal(GroupPtr G, const NormalSubgroup& N, std::uint64_t cap = kEnumCap) {
    if (N.kind() != NormalSubgroup::Kind::Enumerated)
        throw CapExceeded("is_minimal_normal: structural subgroup not enumerated");
    if (N.is_trivial()) return false;
    std::unordered_set<GroupElement> pending(N.elements().begin(), N.elements().end());
    pending.erase(G->identity());
    while (!pending.empty()) {
        GroupElement rep = *pending.begin();
        // remove the whole conjugation orbit of rep
        std::vector<GroupElement> orbit{rep};
        pending.erase(rep);
        for (std::size_t h = 0; h < orbit.size(); ++h)
            for (const auto& g : G->generators()) {
                GroupElement c = G->mul(G->mul(G->inv(g), orbit[h]), g);
                if (pending.erase(c)) orbit.push_back(std::move(c));
            }
        if (bigint(normal_closure_elements(*G, {rep}, cap).size()) != N.size()) return false;
    }
    return true;
}

/// Conjugacy classes of an enumerable group: representatives plus class sizes.
inline std::vector<std::pair<GroupElement, std::uint64_t>> conjugacy_classes(
    const Group& G, std::uint64_t cap = kEnumCap) {
    const auto& en = G.enumeration(cap);
    std::vector<bool> done(en.elems.size(), false);
    std::vector<std::pair<GroupElement, std::uint64_t>> classes;
    for (std::size_t i = 0; i < en.elems.size(); ++i) {
        if (done[i]) continue;
        // orbit of en.elems[i] under conjugation by generators
        std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(i)};
        done[i] = true;
        for (std::size_t h = 0; h < orbit.size(); ++h) {
            const GroupElement& x = en.elems[orbit[h]];
            for (const auto& g : G.generators()) {
                GroupElement c = G.mul(G.mul(G.inv(g), x), g);
                const std::uint32_t ci = en.index.at(c);
                if (!done[ci]) {
                    done[ci] = true;
                    orbit.push_back(ci);
                }
            }
        }
        classes.emplace_back(en.elems[i], orbit.size());
    }
    return classes;
}

/// Center of an enumerable group.
inline std::vector<GroupElement> center_elements(const Group& G, std::uint64_t cap = kEnumCap) {
    std::vector<GroupElement> z;
    for (const auto& g : G.enumeration(cap).elems) {
        bool central = true;
        for (const auto& s : G.generators())
            if (G.mul(g, s) != G.mul(s, g)) {
                central = false;
                break;
            }
        if (central) z.push_back(g);
    }
    return z;
}

// ---------------------------------------------------------------------------
// NormalSubgroup implementation

inline std::shared_ptr<const NormalSubgroup> NormalSubgroup::enumerated(
    GroupPtr parent, std::vector<GroupElement> elems, bool verify) {
    auto sub = std::make_shared<NormalSubgroup>(parent, Kind::Enumerated, std::move(elems));
    if (verify) {
        const auto& es = sub->elements();
        std::unordered_set<GroupElement> set(es.begin(), es.end());
        if (!set.count(parent->identity()))
            throw std::invalid_argument("NormalSubgroup: missing identity");
        for (const auto& a : es) {
            if (!set.count(parent->inv(a)))
                throw std::invalid_argument("NormalSubgroup: not closed under inverse");
            for (const auto& b : es)
                if (!set.count(parent->mul(a, b)))
                    throw std::invalid_argument("NormalSubgroup: not closed under product");
        }
        for (const auto& n : es)
            for (const auto& g : parent->generators()) {
                GroupElement c = parent->mul(parent->mul(parent->inv(g), n), g);
                if (!set.count(c))
                    throw std::invalid_argument(
                        "NormalSubgroup: not normal; witness n=" + parent->format(n) +
                        " g=" + parent->format(g));
            }
    }
    return sub;
}

inline std::shared_ptr<const NormalSubgroup> NormalSubgroup::trivial(GroupPtr parent) {
    std::vector<GroupElement> e{parent->identity()};
    return std::make_shared<NormalSubgroup>(std::move(parent), Kind::Enumerated, std::move(e));
}

inline std::shared_ptr<const NormalSubgroup> NormalSubgroup::wreath_base(GroupPtr parent) {
    if (!std::holds_alternative<WreathModel>(parent->model()))
        throw std::invalid_argument("wreath_base: parent is not a wreath model");
    return std::make_shared<NormalSubgroup>(std::move(parent), Kind::WreathBase,
                                            std::vector<GroupElement>{});
}

inline std::shared_ptr<const NormalSubgroup> NormalSubgroup::affine_translations(GroupPtr parent) {
    if (!std::holds_alternative<Affine1Model>(parent->model()))
        throw std::invalid_argument("affine_translations: parent is not an affine model");
    return std::make_shared<NormalSubgroup>(std::move(parent), Kind::AffineTranslations,
                                            std::vector<GroupElement>{});
}

inline std::shared_ptr<const NormalSubgroup> NormalSubgroup::semimat_base(GroupPtr parent) {
    if (!std::holds_alternative<SemiMat2Model>(parent->model()))
        throw std::invalid_argument("semimat_base: parent is not a semilinear matrix model");
    return std::make_shared<NormalSubgroup>(std::move(parent), Kind::SemiMatBase,
                                            std::vector<GroupElement>{});
}

inline bigint NormalSubgroup::size() const {
    switch (kind_) {
        case Kind::Enumerated:
            return bigint(elems_.size());
        case Kind::WreathBase: {
            const auto& m = std::get<WreathModel>(parent_->model());
            bigint s = 1;
            for (std::uint32_t i = 0; i < m.k; ++i) s *= m.inner_order;
            return s;
        }
        case Kind::AffineTranslations:
            return bigint(std::get<Affine1Model>(parent_->model()).field->q());
        case Kind::SemiMatBase: {
            const std::uint64_t q = std::get<SemiMat2Model>(parent_->model()).field->q();
            return bigint(q) * (q - 1) * (q + 1);
        }
    }
    throw std::logic_error("unreachable");
}

inline bool NormalSubgroup::contains(const GroupElement& g) const {
    switch (kind_) {
        case Kind::Enumerated:
            return set_.count(g) != 0;
        case Kind::WreathBase:
            return std::get<WreathElt>(g.v).top == 0;
        case Kind::AffineTranslations: {
            const auto& x = std::get<Affine1Elt>(g.v);
            return x.mult == 0 && x.frob == 0;
        }
        case Kind::SemiMatBase:
            return std::get<SemiMat2Elt>(g.v).frob == 0;
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// factories

inline GroupPtr Group::cyclic(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclic: order must be >= 1");
    std::vector<GroupElement> gens;
    gens.push_back(CyclicElt{n > 1 ? 1u : 0u});
    return std::make_shared<Group>(CyclicModel{n}, std::move(gens),
                                   "cyclic:" + std::to_string(n), bigint(n));
}

inline GroupPtr Group::perm_group(std::uint32_t degree, std::vector<Perm> gens,
                                  std::string spec) {
    std::vector<GroupElement> gs;
    for (auto& p : gens) gs.push_back(PermElt{std::move(p)});
    return std::make_shared<Group>(PermModel{degree}, std::move(gs), std::move(spec));
}

inline GroupPtr Group::alternating5() {
    return perm_group(5, {Perm{1, 2, 3, 4, 0}, Perm{1, 0, 3, 2, 4}}, "perm:5:a5");
}

inline GroupPtr Group::sl2(std::uint64_t p, int f) {
    auto F = FqField::get(p, f);
    std::vector<GroupElement> gens;
    for (int i = 0; i < f; ++i) {
        // transvections over a GF(p)-basis generate all of SL(2, p^f)
        FqElement a = (i == 0) ? F->one() : F->gen(i);
        gens.push_back(Mat2Elt{{F->one(), a, F->zero(), F->one()}});
        gens.push_back(Mat2Elt{{F->one(), F->zero(), a, F->one()}});
    }
    const std::uint64_t q = F->q();
    std::string spec = "sl2:" + std::to_string(p) + (f > 1 ? "^" + std::to_string(f) : "");
    return std::make_shared<Group>(Mat2Model{F}, std::move(gens), std::move(spec),
                                   bigint(q) * (q - 1) * (q + 1));
}

inline GroupPtr Group::psl2(std::uint64_t p, int f) {
    GroupPtr G = sl2(p, f);
    if (p == 2) return G;  // trivial center
    const auto& F = std::get<Mat2Model>(G->model()).field;
    GroupElement minus_i =
        Mat2Elt{{F->from_int(-1), F->zero(), F->zero(), F->from_int(-1)}};
    auto Z = NormalSubgroup::enumerated(G, {G->identity(), minus_i}, false);
    return quotient_of(G, Z);
}

inline GroupPtr Group::dicyclic(std::uint32_t order_4m) {
    if (order_4m % 4 != 0 || order_4m < 8)
        throw std::invalid_argument("dicyclic: order must be 4m with m >= 2");
    const std::uint32_t m = order_4m / 4;
    std::vector<GroupElement> gens{DicyclicElt{1, 0}, DicyclicElt{0, 1}};
    return std::make_shared<Group>(DicyclicModel{m}, std::move(gens),
                                   "quaternion:" + std::to_string(order_4m), bigint(order_4m));
}

inline GroupPtr Group::agl1(std::uint64_t p, int d, std::uint64_t ell) {
    auto F = FqField::get(p, d);
    if ((F->q() - 1) % ell != 0)
        throw std::invalid_argument("agl1: ell must divide p^d - 1");
    FqElement h = F->primitive_root().pow((F->q() - 1) / ell);
    std::vector<GroupElement> gens;
    for (int i = 0; i < d; ++i)  // translations by a GF(p)-basis
        gens.push_back(Affine1Elt{i == 0 ? F->one() : F->gen(i), 0, 0});
    gens.push_back(Affine1Elt{F->zero(), ell > 1 ? 1u : 0u, 0});  // h
    std::string spec = "agl1:" + std::to_string(p) + "^" + std::to_string(d) + ":" +
                       std::to_string(ell);
    return std::make_shared<Group>(Affine1Model{F, ell, h}, std::move(gens), std::move(spec),
                                   bigint(F->q()) * ell);
}

inline GroupPtr Group::sigmal2(int r) {
    auto F = FqField::get(2, r);
    const std::uint64_t q = F->q();
    std::vector<GroupElement> gens;
    for (int i = 0; i < r; ++i) {
        FqElement a = (i == 0) ? F->one() : F->gen(i);
        gens.push_back(SemiMat2Elt{{F->one(), a, F->zero(), F->one()}, 0});
        gens.push_back(SemiMat2Elt{{F->one(), F->zero(), a, F->one()}, 0});
    }
    gens.push_back(SemiMat2Elt{{F->one(), F->zero(), F->zero(), F->one()}, 1});  // phi
    return std::make_shared<Group>(SemiMat2Model{F}, std::move(gens),
                                   "sigmal2:" + std::to_string(r),
                                   bigint(q) * (q - 1) * (q + 1) * r);
}

inline GroupPtr Group::wreath_a5(std::uint32_t k, std::vector<GroupElement> gens,
                                 std::optional<bigint> structural_order) {
    return std::make_shared<Group>(WreathModel{k, 5, 60}, std::move(gens),
                                   "wreath:a5:" + std::to_string(k),
                                   std::move(structural_order));
}

inline GroupPtr Group::product(std::vector<GroupPtr> factors) {
    if (factors.empty()) throw std::invalid_argument("product: needs at least one factor");
    std::optional<bigint> ord = bigint(1);
    std::string spec = "product(";
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (ord) {
            if (factors[i]->order_is_structural() || factors[i]->enumerable())
                *ord *= factors[i]->order();
            else
                ord.reset();
        }
        spec += (i ? "," : "") + factors[i]->spec_string();
        // generators: factor generators embedded with identities elsewhere
        for (const auto& g : factors[i]->generators()) {
            ProdElt e;
            for (std::size_t j = 0; j < factors.size(); ++j)
                e.comps.push_back(j == i ? g : factors[j]->identity());
            gens.push_back(std::move(e));
        }
    }
    spec += ")";
    return std::make_shared<Group>(ProdModel{std::move(factors)}, std::move(gens),
                                   std::move(spec), std::move(ord));
}

inline GroupPtr Group::quotient_of(GroupPtr parent, NormalSubgroupPtr sub) {
    if (sub->kind() != NormalSubgroup::Kind::Enumerated)
        throw std::invalid_argument("quotient_of: use structural quotient helpers instead");
    std::optional<bigint> ord;
    if (parent->order_is_structural() || parent->enumerable())
        ord = parent->order() / sub->size();
    // generators: canonical reps of the parent's generator cosets
    std::vector<GroupElement> gens;
    for (const auto& g : parent->generators()) gens.push_back(sub->coset_rep(g));
    std::string spec =
        parent->spec_string() + "/N" + sub->size().convert_to<std::string>();
    return std::make_shared<Group>(QuotientModel{parent, sub}, std::move(gens),
                                   std::move(spec), std::move(ord));
}

// ---------------------------------------------------------------------------
// formatting

inline std::string Group::format(const GroupElement& g) const {
    return std::visit(
        [&](const auto& m) -> std::string {
            using M = std::decay_t<decltype(m)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<M, CyclicModel>) {
                os << "h^" << std::get<CyclicElt>(g.v).r;
            } else if constexpr (std::is_same_v<M, PermModel>) {
                const auto& img = std::get<PermElt>(g.v).img;
                bool any = false;
                std::vector<bool> seen(img.size(), false);
                for (std::size_t i = 0; i < img.size(); ++i) {
                    if (seen[i] || img[i] == i) continue;
                    os << "(";
                    std::size_t j = i;
                    bool first = true;
                    do {
                        if (!first) os << " ";
                        os << j + 1;
                        seen[j] = true;
                        first = false;
                        j = img[j];
                    } while (j != i);
                    os << ")";
                    any = true;
                }
                if (!any) os << "()";
            } else if constexpr (std::is_same_v<M, Mat2Model>) {
                const auto& x = std::get<Mat2Elt>(g.v).m;
                os << "[[" << x[0].str() << "," << x[1].str() << "],[" << x[2].str() << ","
                   << x[3].str() << "]]";
            } else if constexpr (std::is_same_v<M, SemiMat2Model>) {
                const auto& x = std::get<SemiMat2Elt>(g.v);
                os << "[[" << x.m[0].str() << "," << x.m[1].str() << "],[" << x.m[2].str() << ","
                   << x.m[3].str() << "]]*phi^" << x.frob;
            } else if constexpr (std::is_same_v<M, Affine1Model>) {
                const auto& x = std::get<Affine1Elt>(g.v);
                os << "(t=" << x.trans.str() << ",h^" << x.mult;
                if (x.frob) os << ",phi^" << x.frob;
                os << ")";
            } else if constexpr (std::is_same_v<M, WreathModel>) {
                const auto& x = std::get<WreathElt>(g.v);
                os << "(";
                for (std::uint32_t i = 0; i < m.k; ++i) {
                    if (i) os << ",";
                    Group a5(PermModel{m.inner_degree}, {}, "");
                    os << a5.format(PermElt{x.base[i]});
                }
                os << ")g^" << x.top;
            } else if constexpr (std::is_same_v<M, DicyclicModel>) {
                const auto& x = std::get<DicyclicElt>(g.v);
                if (x.a == 0 && x.e == 0) return "1";
                if (x.a) os << "x^" << x.a;
                if (x.e) os << (x.a ? "*y" : "y");
            } else if constexpr (std::is_same_v<M, ProdModel>) {
                const auto& x = std::get<ProdElt>(g.v);
                os << "(";
                for (std::size_t i = 0; i < m.factors.size(); ++i) {
                    if (i) os << ",";
                    os << m.factors[i]->format(x.comps[i]);
                }
                os << ")";
            } else {
                static_assert(std::is_same_v<M, QuotientModel>);
                os << m.parent->format(g) << "N";
            }
            return os.str();
        },
        model_);
}

}  // namespace regdes

#endif  // REGDES_GROUP_HPP
