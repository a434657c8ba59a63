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

#ifndef REGDES_INTPOLY_HPP
#define REGDES_INTPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "regdes/numtheory.hpp"

namespace regdes {

using bigint = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact integer coefficients, constant term first.
/// The zero polynomial is the empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<bigint> coeffs) : c_(coeffs) { prune(); }
    explicit IntPolynomial(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { prune(); }

    static IntPolynomial zero() { return {}; }
    static IntPolynomial constant(bigint a) { return IntPolynomial{std::move(a)}; }
    /// c * X^k
    static IntPolynomial monomial(bigint coeff, std::size_t k) {
        std::vector<bigint> v(k + 1);
        v[k] = std::move(coeff);
        return IntPolynomial(std::move(v));
    }
    static IntPolynomial x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<bigint>& coeffs() const { return c_; }
    const bigint& operator[](std::size_t i) const {
        static const bigint kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }
    const bigint& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<bigint> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
        return IntPolynomial(std::move(v));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<bigint> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
        return IntPolynomial(std::move(v));
    }
    friend IntPolynomial operator-(const IntPolynomial& a) { return IntPolynomial() - a; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<bigint> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(v));
    }

    /// Exact division; throws if the remainder is nonzero or divisor leading
    /// coefficient does not divide exactly along the way.
    friend IntPolynomial operator/(const IntPolynomial& a, const IntPolynomial& b) {
        if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
        std::vector<bigint> rem = a.c_;
        if (a.degree() < b.degree()) {
            if (!a.is_zero()) throw std::invalid_argument("inexact polynomial division");
            return {};
        }
        std::vector<bigint> q(a.c_.size() - b.c_.size() + 1);
        for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
            bigint re = rem[k + b.degree()];
            if (re == 0) { q[k] = 0; continue; }
            if (re % b.leading() != 0) throw std::invalid_argument("inexact polynomial division");
            q[k] = re / b.leading();
            for (std::size_t i = 0; i < b.c_.size(); ++i) rem[k + i] -= q[k] * b.c_[i];
        }
        for (const bigint& r : rem)
            if (r != 0) throw std::invalid_argument("inexact polynomial division");
        return IntPolynomial(std::move(q));
    }

    bigint eval(const bigint& x) const {
        bigint r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// Composition this(g(X)).
    IntPolynomial compose(const IntPolynomial& g) const {
        IntPolynomial r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * g + IntPolynomial::constant(*it);
        return r;
    }

    /// this(X + a)
    IntPolynomial shift(const bigint& a) const {
        return compose(IntPolynomial{a, 1});
    }

    std::string str(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const bigint& a = c_[i];
            if (a == 0) continue;
            bigint mag = a < 0 ? bigint(-a) : a;
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            if (mag != 1 || i == 0) os << mag.str();
            if (i >= 1) {
                if (mag != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    std::vector<bigint> c_;
    void prune() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// X^n - 1
inline IntPolynomial xn_minus_1(std::uint64_t n) {
    std::vector<bigint> v(n + 1);
    v[0] = -1;
    v[n] = 1;
    return IntPolynomial(std::move(v));
}

/// n-th cyclotomic polynomial via X^n - 1 = prod_{d|n} Phi_d with exact division.
inline IntPolynomial cyclotomic_poly(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
    static std::mutex mu;
    static std::map<std::uint64_t, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPolynomial num = xn_minus_1(n);
    for (std::uint64_t d : divisors(n))
        if (d < n) num = num / cyclotomic_poly(d);
    std::lock_guard<std::mutex> lk(mu);
    cache[n] = num;
    return num;
}

/// Minimal polynomial psi_n of 2cos(2kpi/n), recovered from Phi_n by writing
/// Phi_n(X) = psi_n(X + X^{-1}) X^{phi(n)/2} and peeling off (X + X^{-1})^k.
inline IntPolynomial psi_poly(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("psi_poly: n must be >= 3");
    const IntPolynomial phi = cyclotomic_poly(n);
    const std::size_t d = euler_phi(n) / 2;
    // Laurent-symmetric coefficient vector of Phi_n / X^d, indices -d..d.
    std::vector<bigint> lau(2 * d + 1);
    for (std::size_t i = 0; i < lau.size(); ++i) lau[i] = phi[i];
    std::vector<bigint> psi(d + 1);
    // (X + X^{-1})^k has binomial coefficients at exponents k, k-2, ..., -k.
    for (std::size_t k = d + 1; k-- > 0;) {
        const bigint u = lau[d + k];
        psi[k] = u;
        if (u == 0) continue;
        bigint binom = 1;
        for (std::size_t j = 0; j <= k; ++j) {
            // coefficient of X^{k-2j} in (X+X^{-1})^k is C(k, j)
            lau[d + k - 2 * j] -= u * binom;
            binom = binom * bigint(k - j) / bigint(j + 1);
        }
    }
    for (const bigint& r : lau)
        if (r != 0) throw std::logic_error("psi_poly: reduction left a nonzero remainder");
    return IntPolynomial(std::move(psi));
}

/// psi_n^*(X) = psi_n(X + 2): psi_n^*(i) = 0 (mod p) detects |bw^i| = n.
inline IntPolynomial psi_star_poly(std::uint64_t n) {
    return psi_poly(n).shift(2);
}

/// All residues i in [0, p) with f(i) = 0 (mod p), by direct sweep.
inline std::set<std::uint64_t> poly_roots_mod_p(const IntPolynomial& f, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("poly_roots_mod_p: p must be prime");
    std::set<std::uint64_t> roots;
    for (std::uint64_t i = 0; i < p; ++i)
        if (f.eval(i) % p == 0) roots.insert(i);
    return roots;
}

}  // namespace regdes

#endif  // REGDES_INTPOLY_HPP
