/*
   Copyright 2026 the monoquart authors

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

// internal polynomial arithmetic over F_p behind a field policy, so the
// same factorization code runs on uint64 words for small p and on mpz
// for large p. not installed.

#ifndef MONOQUART_FP_POLY_HPP
#define MONOQUART_FP_POLY_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monoquart/bigint.hpp"

namespace monoquart::fp {

// ---- field policies ----

// prime p < 2^32: products of reduced elements fit in uint64
struct FpSmall {
    using elem = std::uint64_t;
    std::uint64_t p;

    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(elem a) const { return a == 0; }
    elem add(elem a, elem b) const {
        elem s = a + b;
        return s >= p ? s - p : s;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + p - b; }
    elem neg(elem a) const { return a ? p - a : 0; }
    elem mul(elem a, elem b) const { return (a * b) % p; }
    elem inv(elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        std::int64_t t0 = 0, t1 = 1;
        std::int64_t r0 = static_cast<std::int64_t>(p),
                     r1 = static_cast<std::int64_t>(a);
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            t0 -= q * t1;
            std::swap(t0, t1);
            r0 -= q * r1;
            std::swap(r0, r1);
        }
        if (t0 < 0) t0 += static_cast<std::int64_t>(p);
        return static_cast<elem>(t0);
    }
    elem from_uint(unsigned long v) const { return v % p; }
    elem from_big(const BigInt& v) const {
        BigInt r = v % BigInt(static_cast<unsigned long>(p));
        if (r < 0) r += BigInt(static_cast<unsigned long>(p));
        return r.get_ui();
    }
    BigInt to_big(elem a) const { return BigInt(static_cast<unsigned long>(a)); }
    elem random(std::mt19937_64& rng) const { return rng() % p; }
};

struct FpBig {
    using elem = mpz_class;
    mpz_class p;

    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(const elem& a) const { return a == 0; }
    elem add(const elem& a, const elem& b) const {
        elem s = a + b;
        if (s >= p) s -= p;
        return s;
    }
    elem sub(const elem& a, const elem& b) const {
        elem s = a - b;
        if (s < 0) s += p;
        return s;
    }
    elem neg(const elem& a) const { return a == 0 ? elem(0) : elem(p - a); }
    elem mul(const elem& a, const elem& b) const { return elem((a * b) % p); }
    elem inv(const elem& a) const {
        elem r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("inverse of zero");
        return r;
    }
    elem from_uint(unsigned long v) const { return elem(BigInt(v) % p); }
    elem from_big(const BigInt& v) const {
        elem r = v % p;
        if (r < 0) r += p;
        return r;
    }
    BigInt to_big(const elem& a) const { return a; }
    elem random(std::mt19937_64& rng) const { return random_below(p, rng); }
};

// ---- polynomial layer: dense ascending coefficients, no trailing zeros ----

template <class F>
using Poly = std::vector<typename F::elem>;

template <class F>
void trim(const F& f, Poly<F>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class E>
long deg(const std::vector<E>& a) {
    return static_cast<long>(a.size()) - 1;
}

template <class F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), f.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    trim(f, r);
    return r;
}

template <class F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), f.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    trim(f, r);
    return r;
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, f.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(f, r);
    return r;
}

template <class F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::elem& c) {
    if (f.is_zero(c)) return {};
    Poly<F> r(a.size(), f.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
    trim(f, r);
    return r;
}

template <class F>
void make_monic(const F& f, Poly<F>& a) {
    if (a.empty()) return;
    auto ic = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, ic);
}

// euclidean division; b nonzero
template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const F& f, Poly<F> a, const Poly<F>& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    long db = deg(b);
    if (deg(a) < db) return {Poly<F>{}, std::move(a)};
    auto ilb = f.inv(b.back());
    Poly<F> q(static_cast<size_t>(deg(a) - db) + 1, f.zero());
    for (long i = deg(a); i >= db; --i) {
        auto& top = a[static_cast<size_t>(i)];
        if (f.is_zero(top)) continue;
        auto c = f.mul(top, ilb);
        q[static_cast<size_t>(i - db)] = c;
        for (long j = 0; j <= db; ++j) {
            auto& t = a[static_cast<size_t>(i - db + j)];
            t = f.sub(t, f.mul(c, b[static_cast<size_t>(j)]));
        }
    }
    trim(f, a);
    trim(f, q);
    return {std::move(q), std::move(a)};
}

template <class F>
Poly<F> mod(const F& f, Poly<F> a, const Poly<F>& b) {
    return divrem(f, std::move(a), b).second;
}

template <class F>
Poly<F> divexact(const F& f, Poly<F> a, const Poly<F>& b) {
    auto [q, r] = divrem(f, std::move(a), b);
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

// monic gcd; zero if both inputs are zero
template <class F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
    while (!b.empty()) {
        a = mod(f, std::move(a), b);
        std::swap(a, b);
    }
    make_monic(f, a);
    return a;
}

template <class F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b,
               const Poly<F>& m) {
    return mod(f, mul(f, a, b), m);
}

template <class F>
Poly<F> powmod(const F& f, Poly<F> base, BigInt e, const Poly<F>& m) {
    if (e < 0) throw std::domain_error("negative exponent");
    Poly<F> r{f.one()};
    base = mod(f, std::move(base), m);
    while (e != 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mulmod(f, r, base, m);
        e >>= 1;
        if (e != 0) base = mulmod(f, base, base, m);
    }
    return r;
}

template <class F>
Poly<F> deriv(const F& f, const Poly<F>& a) {
    if (a.size() <= 1) return {};
    Poly<F> r(a.size() - 1, f.zero());
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = f.mul(a[i], f.from_uint(static_cast<unsigned long>(i)));
    trim(f, r);
    return r;
}

// inverse of a modulo m via extended euclid; throws if not coprime
template <class F>
Poly<F> invmod(const F& f, const Poly<F>& a, const Poly<F>& m) {
    Poly<F> r0 = m, r1 = mod(f, a, m);
    Poly<F> t0{}, t1{f.one()};
    while (!r1.empty()) {
        auto [q, r] = divrem(f, std::move(r0), r1);
        Poly<F> t = sub(f, t0, mul(f, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (deg(r0) != 0)
        throw std::domain_error("polynomial not invertible modulo m");
    return mod(f, scale(f, t0, f.inv(r0[0])), m);
}

// ---- factorization ----

template <class F>
struct FactorRec {
    Poly<F> poly;
    int mult;
};

namespace detail {

// f = u(x^p) -> u (the base field is prime, so p-th roots of
// coefficients are the coefficients themselves)
template <class F>
Poly<F> pth_root_shape(const F& f, const Poly<F>& a, const BigInt& p) {
    unsigned long stride = p.fits_ulong_p() ? p.get_ui() : 0;
    if (stride == 0 || static_cast<unsigned long>(a.size()) <= 1)
        throw std::logic_error("unexpected p-th power shape");
    Poly<F> u;
    for (size_t i = 0; i < a.size(); i += stride) u.push_back(a[i]);
    trim(f, u);
    return u;
}

// squarefree decomposition of monic f in characteristic p
template <class F>
void squarefree_rec(const F& f, Poly<F> a, const BigInt& p, int outer,
                    std::vector<FactorRec<F>>& out) {
    Poly<F> g = deriv(f, a);
    if (g.empty()) {
        squarefree_rec(f, pth_root_shape(f, a, p), p,
                       outer * static_cast<int>(p.get_ui()), out);
        return;
    }
    Poly<F> c = gcd(f, a, g);
    Poly<F> w = divexact(f, std::move(a), c);
    int i = 1;
    while (deg(w) > 0) {
        Poly<F> y = gcd(f, w, c);
        Poly<F> z = divexact(f, std::move(w), y);
        if (deg(z) > 0) out.push_back({std::move(z), i * outer});
        c = divexact(f, std::move(c), y);
        w = std::move(y);
        ++i;
    }
    if (deg(c) > 0)
        squarefree_rec(f, pth_root_shape(f, c, p), p,
                       outer * static_cast<int>(p.get_ui()), out);
}

// distinct-degree: (product of irreducible factors of degree d, d)
template <class F>
std::vector<std::pair<Poly<F>, long>> ddf(const F& f, Poly<F> g,
                                          const BigInt& p) {
    std::vector<std::pair<Poly<F>, long>> res;
    Poly<F> x{f.zero(), f.one()};
    Poly<F> h = mod(f, x, g);
    long k = 0;
    while (deg(g) >= 2 * (k + 1)) {
        ++k;
        h = powmod(f, std::move(h), p, g);
        Poly<F> d = gcd(f, sub(f, h, x), g);
        if (deg(d) > 0) {
            res.emplace_back(d, k);
            g = divexact(f, std::move(g), d);
            h = mod(f, std::move(h), g);
        }
    }
    if (deg(g) > 0) res.emplace_back(std::move(g), deg(g));
    return res;
}

// equal-degree splitting (cantor-zassenhaus; trace map for p = 2)
template <class F>
void edf(const F& f, Poly<F> g, long d, const BigInt& p,
         std::mt19937_64& rng, std::vector<Poly<F>>& out) {
    std::vector<Poly<F>> stack{std::move(g)};
    BigInt q_half = 0;
    const bool odd = (p != 2);
    if (odd) {
        BigInt q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
        q_half = (q - 1) / 2;
    }
    while (!stack.empty()) {
        Poly<F> cur = std::move(stack.back());
        stack.pop_back();
        if (deg(cur) == d) {
            out.push_back(std::move(cur));
            continue;
        }
        for (;;) {
            Poly<F> a(static_cast<size_t>(deg(cur)), f.zero());
            for (auto& c : a) c = f.random(rng);
            trim(f, a);
            if (deg(a) < 1) continue;
            Poly<F> h = gcd(f, a, cur);
            if (deg(h) <= 0) {
                if (odd) {
                    Poly<F> b = powmod(f, a, q_half, cur);
                    h = gcd(f, sub(f, b, Poly<F>{f.one()}), cur);
                } else {
                    Poly<F> t = mod(f, a, cur), acc = t;
                    for (long i = 1; i < d; ++i) {
                        t = mulmod(f, t, t, cur);
                        acc = add(f, acc, t);
                    }
                    h = gcd(f, acc, cur);
                }
            }
            if (deg(h) > 0 && deg(h) < deg(cur)) {
                stack.push_back(divexact(f, std::move(cur), h));
                stack.push_back(std::move(h));
                break;
            }
        }
    }
}

}  // namespace detail

// full monic factorization of monic g over F_p (p prime)
template <class F>
std::vector<FactorRec<F>> factor(const F& f, Poly<F> g, const BigInt& p,
                                 std::mt19937_64& rng) {
    std::vector<FactorRec<F>> sf;
    detail::squarefree_rec(f, std::move(g), p, 1, sf);
    std::vector<FactorRec<F>> out;
    for (auto& part : sf) {
        for (auto& [prod, d] : detail::ddf(f, std::move(part.poly), p)) {
            std::vector<Poly<F>> irr;
            detail::edf(f, std::move(prod), d, p, rng, irr);
            for (auto& h : irr) out.push_back({std::move(h), part.mult});
        }
    }
    return out;
}

}  // namespace monoquart::fp

#endif
