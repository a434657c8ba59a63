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

#ifndef REGDES_GF_HPP
#define REGDES_GF_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "regdes/intpoly.hpp"
#include "regdes/numtheory.hpp"

namespace regdes {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

/// Maximum extension degree supported by the inline element storage.
constexpr int kMaxExtDegree = 6;

/// Element of GF(p^f): coefficient vector of length f over GF(p),
/// constant term first, all residues in [0, p).
class FqElement {
  public:
    FqElement() = default;
    FqElement(const FqField* field, std::array<std::int64_t, kMaxExtDegree> v)
        : field_(field), v_(v) {}

    const FqField* field() const { return field_; }
    const std::array<std::int64_t, kMaxExtDegree>& coeffs() const { return v_; }
    std::int64_t coeff(int i) const { return v_[i]; }

    bool is_zero() const {
        for (auto c : v_)
            if (c) return false;
        return true;
    }

    friend bool operator==(const FqElement& a, const FqElement& b) {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FqElement& a, const FqElement& b) { return !(a == b); }
    friend bool operator<(const FqElement& a, const FqElement& b) {
        if (a.field_ != b.field_) return a.field_ < b.field_;
        for (int i = kMaxExtDegree - 1; i >= 0; --i)
            if (a.v_[i] != b.v_[i]) return a.v_[i] < b.v_[i];
        return false;
    }

    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator-() const;
    FqElement operator*(const FqElement& o) const;
    FqElement inverse() const;
    FqElement pow(std::uint64_t e) const;
    FqElement frobenius(unsigned k = 1) const;  // x -> x^(p^k)

    std::size_t hash() const {
        std::size_t h = std::hash<const void*>{}(field_);
        for (auto c : v_) h = h * 1000003u ^ std::hash<std::int64_t>{}(c);
        return h;
    }

    std::string str() const;

  private:
    const FqField* field_ = nullptr;
    std::array<std::int64_t, kMaxExtDegree> v_{};
};

IntPolynomial find_irreducible(std::uint64_t p, int f);

/// The field GF(p^f); instances are canonical singletons via FqField::get so
/// element field pointers compare directly. The modulus is the deterministic
/// lexicographically-first monic irreducible, making all element encodings
/// reproducible across runs.
class FqField {
  public:
    static FqFieldPtr get(std::uint64_t p, int f) {
        static std::mutex mu;
        static std::map<std::pair<std::uint64_t, int>, FqFieldPtr> registry;
        std::lock_guard<std::mutex> lk(mu);
        auto key = std::make_pair(p, f);
        auto it = registry.find(key);
        if (it != registry.end()) return it->second;
        auto field = FqFieldPtr(new FqField(p, f));
        registry[key] = field;
        return field;
    }

    std::uint64_t p() const { return p_; }
    int f() const { return f_; }
    std::uint64_t q() const { return q_; }
    const IntPolynomial& modulus() const { return modulus_; }

    FqElement zero() const { return FqElement(this, {}); }
    FqElement one() const { return from_int(1); }
    FqElement from_int(std::int64_t a) const {
        std::array<std::int64_t, kMaxExtDegree> v{};
        const auto m = static_cast<std::int64_t>(p_);
        v[0] = ((a % m) + m) % m;
        return FqElement(this, v);
    }
    FqElement from_coeffs(const std::vector<std::int64_t>& cs) const {
        if (static_cast<int>(cs.size()) > f_)
            throw std::invalid_argument("FqField::from_coeffs: too many coefficients");
        std::array<std::int64_t, kMaxExtDegree> v{};
        const auto m = static_cast<std::int64_t>(p_);
        for (std::size_t i = 0; i < cs.size(); ++i) v[i] = ((cs[i] % m) + m) % m;
        return FqElement(this, v);
    }
    /// The class of X^i in GF(p)[X]/(modulus).
    FqElement gen(int i = 1) const {
        if (i >= f_) throw std::invalid_argument("FqField::gen: exponent exceeds degree");
        std::array<std::int64_t, kMaxExtDegree> v{};
        v[i] = 1;
        return FqElement(this, v);
    }

    /// All q elements, ascending in the canonical total order.
    std::vector<FqElement> elements() const {
        std::vector<FqElement> out;
        out.reserve(q_);
        std::array<std::int64_t, kMaxExtDegree> v{};
        bool done = false;
        while (!done) {
            out.push_back(FqElement(this, v));
            done = true;
            for (int i = 0; i < f_; ++i) {
                if (++v[i] < static_cast<std::int64_t>(p_)) { done = false; break; }
                v[i] = 0;
            }
        }
        return out;
    }

    FqElement primitive_root() const;

  private:
    FqField(std::uint64_t p, int f) : p_(p), f_(f) {
        if (!is_prime(p)) throw std::invalid_argument("FqField: p must be prime");
        if (f < 1 || f > kMaxExtDegree) throw std::invalid_argument("FqField: bad degree");
        q_ = 1;
        for (int i = 0; i < f; ++i) q_ *= p;
        modulus_ = find_irreducible(p, f);
        for (int i = 0; i < f; ++i)
            mod_low_[i] = modulus_[i].convert_to<std::int64_t>() % static_cast<std::int64_t>(p_);
        for (int i = 0; i < f; ++i)
            if (mod_low_[i] < 0) mod_low_[i] += static_cast<std::int64_t>(p_);
    }

    friend class FqElement;
    std::uint64_t p_;
    int f_;
    std::uint64_t q_;
    IntPolynomial modulus_;
    std::array<std::int64_t, kMaxExtDegree> mod_low_{};
};

inline FqElement FqElement::operator+(const FqElement& o) const {
    if (field_ != o.field_) throw std::invalid_argument("FqElement: field mismatch");
    std::array<std::int64_t, kMaxExtDegree> v{};
    const auto p = static_cast<std::int64_t>(field_->p_);
    for (int i = 0; i < field_->f_; ++i) v[i] = (v_[i] + o.v_[i]) % p;
    return FqElement(field_, v);
}

inline FqElement FqElement::operator-(const FqElement& o) const {
    if (field_ != o.field_) throw std::invalid_argument("FqElement: field mismatch");
    std::array<std::int64_t, kMaxExtDegree> v{};
    const auto p = static_cast<std::int64_t>(field_->p_);
    for (int i = 0; i < field_->f_; ++i) v[i] = (v_[i] - o.v_[i] + p) % p;
    return FqElement(field_, v);
}

inline FqElement FqElement::operator-() const {
    std::array<std::int64_t, kMaxExtDegree> v{};
    const auto p = static_cast<std::int64_t>(field_->p_);
    for (int i = 0; i < field_->f_; ++i) v[i] = (p - v_[i]) % p;
    return FqElement(field_, v);
}

inline FqElement FqElement::operator*(const FqElement& o) const {
    if (field_ != o.field_) throw std::invalid_argument("FqElement: field mismatch");
    const int f = field_->f_;
    const auto p = static_cast<std::int64_t>(field_->p_);
    std::array<std::int64_t, 2 * kMaxExtDegree> prod{};
    for (int i = 0; i < f; ++i) {
        if (!v_[i]) continue;
        for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + v_[i] * o.v_[j]) % p;
    }
    // reduce modulo the monic modulus: X^f = -(mod_low)
    for (int k = 2 * f - 2; k >= f; --k) {
        const std::int64_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (int i = 0; i < f; ++i)
            prod[k - f + i] = (prod[k - f + i] - c * field_->mod_low_[i] % p + p * p) % p;
    }
    std::array<std::int64_t, kMaxExtDegree> v{};
    for (int i = 0; i < f; ++i) v[i] = prod[i];
    return FqElement(field_, v);
}

inline FqElement FqElement::pow(std::uint64_t e) const {
    FqElement r = field_->one();
    FqElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

inline FqElement FqElement::inverse() const {
    if (is_zero()) throw std::domain_error("FqElement::inverse: zero has no inverse");
    return pow(field_->q_ - 2);
}

inline FqElement FqElement::frobenius(unsigned k) const {
    FqElement r = *this;
    for (unsigned i = 0, t = k % static_cast<unsigned>(field_->f_); i < t; ++i)
        r = r.pow(field_->p_);
    return r;
}

inline std::string FqElement::str() const {
    if (!field_) return "<null>";
    if (field_->f_ == 1) return std::to_string(v_[0]);
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < field_->f_; ++i) {
        if (i) os << ",";
        os << v_[i];
    }
    os << "]";
    return os.str();
}

namespace detail {

/// Irreducibility over GF(p) by trial division against all monic polynomials
/// of degree <= f/2 (coefficients as residue vectors).
inline bool poly_divides_mod_p(const std::vector<std::int64_t>& d,
                               std::vector<std::int64_t> r, std::int64_t p) {
    // d monic of degree dd; r of degree rr >= dd
    const int dd = static_cast<int>(d.size()) - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        const std::int64_t c = r[k] % p;
        if (!c) continue;
        for (int i = 0; i <= dd; ++i)
            r[k - dd + i] = ((r[k - dd + i] - c * d[i]) % p + p * p) % p;
    }
    for (auto c : r)
        if (c % p) return false;
    return true;
}

inline bool is_irreducible_mod_p(const std::vector<std::int64_t>& poly, std::int64_t p) {
    const int f = static_cast<int>(poly.size()) - 1;
    if (f == 1) return true;
    // degree-1 check: no roots
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t acc = 0;
        for (int i = f; i >= 0; --i) acc = (acc * x + poly[i]) % p;
        if (acc == 0) return false;
    }
    // higher factors: any reducible poly of degree f has a monic irreducible
    // factor of degree <= f/2; degree-1 factors already excluded
    for (int d = 2; 2 * d <= f; ++d) {
        std::vector<std::int64_t> cand(d + 1, 0);
        cand[d] = 1;
        const std::uint64_t total = ipow(p, d);
        for (std::uint64_t n = 0; n < total; ++n) {
            std::uint64_t m = n;
            for (int i = 0; i < d; ++i) {
                cand[i] = m % p;
                m /= p;
            }
            if (poly_divides_mod_p(cand, poly, p)) return false;
        }
    }
    return true;
}

}  // namespace detail

inline IntPolynomial find_irreducible(std::uint64_t p, int f) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
    if (f < 1) throw std::invalid_argument("find_irreducible: f must be >= 1");
    if (f == 1) return IntPolynomial::x();
    const auto sp = static_cast<std::int64_t>(p);
    // lexicographic sweep, comparing from the X^{f-1} coefficient down
    std::vector<std::int64_t> c(f + 1, 0);
    c[f] = 1;
    const std::uint64_t total = ipow(p, f);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::uint64_t m = n;
        for (int i = f - 1; i >= 0; --i) {
            std::uint64_t place = ipow(p, i);
            c[i] = static_cast<std::int64_t>(m / place);
            m %= place;
        }
        if (detail::is_irreducible_mod_p(c, sp)) {
            std::vector<bigint> v(c.begin(), c.end());
            return IntPolynomial(std::move(v));
        }
    }
    throw std::logic_error("find_irreducible: none found");
}

/// Least k >= 1 with x^k = 1, via the factorization of q - 1 (divide-out).
inline std::uint64_t fq_mul_order(const FqElement& x) {
    if (x.is_zero()) throw std::domain_error("fq_mul_order: x must be nonzero");
    const FqField* F = x.field();
    std::uint64_t ord = F->q() - 1;
    for (const auto& [pr, e] : factorize(ord).factors) {
        for (int i = 0; i < e; ++i) {
            if (ord % pr == 0 && x.pow(ord / pr) == F->one())
                ord /= pr;
            else
                break;
        }
    }
    return ord;
}

inline FqElement FqField::primitive_root() const {
    for (const FqElement& x : elements()) {
        if (x.is_zero()) continue;
        if (fq_mul_order(x) == q_ - 1) return x;
    }
    throw std::logic_error("FqField::primitive_root: none found");
}

}  // namespace regdes

namespace std {
template <>
struct hash<regdes::FqElement> {
    std::size_t operator()(const regdes::FqElement& x) const { return x.hash(); }
};
}  // namespace std

#endif  // REGDES_GF_HPP
