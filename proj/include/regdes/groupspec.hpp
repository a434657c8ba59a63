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

#ifndef REGDES_GROUPSPEC_HPP
#define REGDES_GROUPSPEC_HPP

#include <cctype>
#include <string>
#include <vector>

#include "regdes/group.hpp"

namespace regdes {

/// Parse failure with the byte offset of the offending position.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct GroupSpec {
    std::string raw;
    GroupPtr group;
};

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    std::uint64_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", pos);
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            ++pos;
        }
        return v;
    }
    std::int64_t signed_number() {
        bool neg = eat('-');
        std::uint64_t v = number();
        return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
    }
    std::string word() {
        std::size_t start = pos;
        while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) throw ParseError("expected a name", start);
        return s.substr(start, pos - start);
    }
};

/// cycles like "(1 2 3)(4 5)" on points 1..n
inline Perm parse_cycles(Cursor& c, std::uint32_t degree) {
    Perm p = pid(degree);
    bool any = false;
    while (c.peek() == '(') {
        c.expect('(');
        std::vector<std::uint64_t> cyc;
        for (;;) {
            while (c.peek() == ' ' || c.peek() == ',') ++c.pos;
            if (c.eat(')')) break;
            std::uint64_t v = c.number();
            if (v < 1 || v > degree) throw ParseError("cycle point out of range", c.pos);
            cyc.push_back(v - 1);
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (p[cyc[i]] != cyc[i]) throw ParseError("point repeated in cycles", c.pos);
        }
        for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
            p[cyc[i]] = static_cast<std::uint16_t>(cyc[i + 1]);
        if (!cyc.empty()) p[cyc.back()] = static_cast<std::uint16_t>(cyc.front());
        any = true;
    }
    if (!any) throw ParseError("expected at least one cycle", c.pos);
    return p;
}

}  // namespace detail

/// Grammar: cyclic:<n> | sl2:<p>[^<f>] | psl2:<p>[^<f>] | quaternion:<4m> |
/// agl1:<p>^<d>:<ell> | wreath:a5:<k> | sigmal2:<r> | perm:<n>:<cycles>;<cycles>
inline GroupSpec parse_group_spec(const std::string& s) {
    detail::Cursor c{s};
    std::string kind = c.word();
    auto finish = [&](GroupPtr g) {
        if (!c.done()) throw ParseError("trailing characters", c.pos);
        return GroupSpec{s, std::move(g)};
    };
    if (kind == "cyclic") {
        c.expect(':');
        return finish(Group::cyclic(c.number()));
    }
    if (kind == "sl2" || kind == "psl2") {
        c.expect(':');
        std::uint64_t p = c.number();
        int f = 1;
        if (c.eat('^')) f = static_cast<int>(c.number());
        if (!is_prime(p)) throw ParseError("p must be prime", c.pos);
        return finish(kind == "sl2" ? Group::sl2(p, f) : Group::psl2(p, f));
    }
    if (kind == "quaternion") {
        c.expect(':');
        return finish(Group::dicyclic(static_cast<std::uint32_t>(c.number())));
    }
    if (kind == "agl1") {
        c.expect(':');
        std::uint64_t p = c.number();
        c.expect('^');
        int d = static_cast<int>(c.number());
        c.expect(':');
        std::uint64_t ell = c.number();
        if (!is_prime(p)) throw ParseError("p must be prime", c.pos);
        return finish(Group::agl1(p, d, ell));
    }
    if (kind == "wreath") {
        c.expect(':');
        if (c.word() != "a5") throw ParseError("only wreath:a5:<k> is supported", c.pos);
        c.expect(':');
        std::uint32_t k = static_cast<std::uint32_t>(c.number());
        if (k < 1) throw ParseError("k must be >= 1", c.pos);
        // generators: A5 in the first coordinate plus the k-shift
        std::vector<Perm> base(k, pid(5));
        std::vector<GroupElement> gens;
        {
            auto b1 = base;
            b1[0] = Perm{1, 2, 3, 4, 0};
            gens.push_back(WreathElt{b1, 0});
            auto b2 = base;
            b2[0] = Perm{1, 0, 3, 2, 4};
            gens.push_back(WreathElt{b2, 0});
            gens.push_back(WreathElt{base, 1 % k});
        }
        bigint order = 1;
        for (std::uint32_t i = 0; i < k; ++i) order *= 60;
        return finish(Group::wreath_a5(k, std::move(gens), order * k));
    }
    if (kind == "sigmal2") {
        c.expect(':');
        return finish(Group::sigmal2(static_cast<int>(c.number())));
    }
    if (kind == "perm") {
        c.expect(':');
        std::uint32_t degree = static_cast<std::uint32_t>(c.number());
        if (degree < 1 || degree > 4096) throw ParseError("degree out of range", c.pos);
        std::vector<Perm> gens;
        while (c.eat(':') || c.eat(';')) gens.push_back(detail::parse_cycles(c, degree));
        if (gens.empty()) throw ParseError("expected generator cycles", c.pos);
        return finish(Group::perm_group(degree, std::move(gens), s));
    }
    throw ParseError("unknown group kind '" + kind + "'", 0);
}

/// Element literals: cyclic uses h^k; quaternion products of x^a y^b;
/// matrix models [[a,b],[c,d]]; permutation models cycle notation.
inline GroupElement parse_element(const GroupPtr& G, const std::string& s) {
    detail::Cursor c{s};
    if (std::holds_alternative<CyclicModel>(G->model())) {
        const std::uint64_t n = std::get<CyclicModel>(G->model()).n;
        if (c.eat('1')) {
            if (!c.done()) throw ParseError("trailing characters", c.pos);
            return CyclicElt{0};
        }
        c.expect('h');
        std::int64_t e = 1;
        if (c.eat('^')) e = c.signed_number();
        if (!c.done()) throw ParseError("trailing characters", c.pos);
        const auto ni = static_cast<std::int64_t>(n);
        return CyclicElt{static_cast<std::uint64_t>(((e % ni) + ni) % ni)};
    }
    if (std::holds_alternative<DicyclicModel>(G->model())) {
        GroupElement acc = G->identity();
        if (c.eat('1')) {
            if (!c.done()) throw ParseError("trailing characters", c.pos);
            return acc;
        }
        while (!c.done()) {
            if (c.eat('*') || c.eat(' ')) continue;
            char name = c.peek();
            if (name != 'x' && name != 'y') throw ParseError("expected x or y", c.pos);
            ++c.pos;
            std::int64_t e = 1;
            if (c.eat('^')) e = c.signed_number();
            GroupElement gen = name == 'x' ? GroupElement(DicyclicElt{1, 0})
                                           : GroupElement(DicyclicElt{0, 1});
            acc = G->mul(acc, G->pow(gen, e));
        }
        return acc;
    }
    if (std::holds_alternative<Mat2Model>(G->model()) ||
        std::holds_alternative<QuotientModel>(G->model())) {
        // matrix literal over the prime field: [[a,b],[c,d]]
        const Group* base = G.get();
        if (const auto* qm = std::get_if<QuotientModel>(&G->model())) base = qm->parent.get();
        const auto* mm = std::get_if<Mat2Model>(&base->model());
        if (!mm) throw ParseError("element literals unsupported for this model", 0);
        const auto& F = mm->field;
        c.expect('[');
        c.expect('[');
        std::int64_t a = c.signed_number();
        c.expect(',');
        std::int64_t b = c.signed_number();
        c.expect(']');
        c.expect(',');
        c.expect('[');
        std::int64_t d = c.signed_number();
        c.expect(',');
        std::int64_t e = c.signed_number();
        c.expect(']');
        c.expect(']');
        if (!c.done()) throw ParseError("trailing characters", c.pos);
        Mat2Elt m{{F->from_int(a), F->from_int(b), F->from_int(d), F->from_int(e)}};
        FqElement det = m.m[0] * m.m[3] - m.m[1] * m.m[2];
        if (det != F->one()) throw ParseError("matrix must have determinant 1", 0);
        if (const auto* qm = std::get_if<QuotientModel>(&G->model()))
            return qm->sub->coset_rep(m);
        return m;
    }
    if (std::holds_alternative<PermModel>(G->model())) {
        const auto degree = std::get<PermModel>(G->model()).degree;
        Perm p = detail::parse_cycles(c, degree);
        if (!c.done()) throw ParseError("trailing characters", c.pos);
        return PermElt{std::move(p)};
    }
    throw ParseError("element literals unsupported for this model", 0);
}

}  // namespace regdes

#endif  // REGDES_GROUPSPEC_HPP
