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

#include "monoquart/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace monoquart {

namespace {
const BigInt big_zero = 0;
const Rational rat_zero = 0;
}  // namespace

/* ---------------- IntPoly ---------------- */

IntPoly::IntPoly(const BigInt& constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { normalize(); }

IntPoly IntPoly::monomial(const BigInt& c, size_t deg) {
    IntPoly r;
    if (c != 0) {
        r.c_.assign(deg + 1, big_zero);
        r.c_.back() = c;
    }
    return r;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::lc() const {
    if (c_.empty()) throw std::invalid_argument("lc: zero polynomial");
    return c_.back();
}

const BigInt& IntPoly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : big_zero;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), big_zero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), big_zero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, big_zero);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c_) x *= s;
    r.normalize();
    return r;
}

BigInt IntPoly::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return IntPoly();
    std::vector<BigInt> d(f.degree());
    for (long i = 1; i <= f.degree(); ++i) d[i - 1] = i * f.coeff(i);
    return IntPoly(std::move(d));
}

DivRem divrem_monic(const IntPoly& f, const IntPoly& g) {
    if (!g.is_monic()) throw std::invalid_argument("divrem_monic: divisor not monic");
    std::vector<BigInt> rem(f.coeffs());
    long dg = g.degree();
    long df = f.degree();
    if (df < dg) return {IntPoly(), f};
    std::vector<BigInt> quot(df - dg + 1, big_zero);
    for (long i = df; i >= dg; --i) {
        BigInt q = rem[i];
        if (q == 0) continue;
        quot[i - dg] = q;
        for (long j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g.coeff(j);
    }
    rem.resize(dg > 0 ? dg : 0);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly divexact(const IntPoly& f, const BigInt& s) {
    if (s == 0) throw std::invalid_argument("divexact: division by zero");
    std::vector<BigInt> c(f.coeffs());
    for (auto& x : c) {
        if (!mpz_divisible_p(x.get_mpz_t(), s.get_mpz_t()))
            throw std::invalid_argument("divexact: not divisible");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    }
    return IntPoly(std::move(c));
}

BigInt content(const IntPoly& f) {
    BigInt g = 0;
    for (const auto& x : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

long vp_poly(const IntPoly& g, const BigInt& p) {
    if (p < 2 || !is_probable_prime(p))
        throw std::invalid_argument("vp_poly: modulus is not a prime >= 2");
    if (g.is_zero()) return val_inf;
    long best = val_inf;
    BigInt rest;
    for (const auto& x : g.coeffs()) {
        if (x == 0) continue;
        long v = static_cast<long>(
            mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
        best = std::min(best, v);
        if (best == 0) break;
    }
    return best;
}

namespace {

/* pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R with deg R < deg B */
IntPoly prem(const IntPoly& A, const IntPoly& B) {
    long delta = A.degree() - B.degree();
    std::vector<BigInt> r(A.coeffs());
    const BigInt& lb = B.lc();
    long scale = delta + 1;
    long dr = A.degree();
    while (dr >= B.degree()) {
        while (dr >= 0 && r[dr] == 0) --dr;
        if (dr < B.degree()) break;
        BigInt lr = r[dr];
        for (long i = 0; i < dr; ++i) r[i] *= lb;
        for (long j = 0; j < B.degree(); ++j)
            r[dr - B.degree() + j] -= lr * B.coeff(j);
        r[dr] = 0;
        --scale;
        --dr;
    }
    r.resize(std::max<long>(B.degree(), 0));
    IntPoly R{std::move(r)};
    BigInt extra = 1;
    for (long i = 0; i < scale; ++i) extra *= lb;
    return extra * R;
}

BigInt power(const BigInt& b, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

BigInt divexact_int(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.degree() == 0 && g.degree() == 0) return 1;
    if (f.degree() == 0) return power(f.lc(), g.degree());
    if (g.degree() == 0) return power(g.lc(), f.degree());

    BigInt ca = content(f), cb = content(g);
    IntPoly A = divexact(f, ca), B = divexact(g, cb);
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    BigInt t = power(ca, g.degree()) * power(cb, f.degree());

    BigInt gg = 1, hh = 1;
    while (true) {
        long delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = prem(A, B);
        if (R.is_zero()) return 0;  // positive-degree common factor
        A = B;
        B = divexact(R, gg * power(hh, delta));
        gg = A.lc();
        if (delta > 0) hh = divexact_int(power(gg, delta), power(hh, delta - 1));
        if (B.degree() == 0) break;
    }
    long d = A.degree();
    BigInt res = divexact_int(power(B.lc(), d), power(hh, d - 1));
    return s * t * res;
}

BigInt discriminant(const IntPoly& h) {
    long n = h.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    BigInt r = resultant(h, derivative(h));
    BigInt d = divexact_int(r, h.lc());
    if (((n * (n - 1)) / 2) & 1) d = -d;
    return d;
}

std::vector<Rational> rational_roots(const IntPoly& h) {
    if (h.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    size_t k = 0;
    while (k < static_cast<size_t>(h.degree() + 1) && h.coeff(k) == 0) ++k;
    if (k > 0) roots.push_back(rat_zero);
    if (static_cast<long>(k) == h.degree()) {  // h = c * x^deg
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    std::vector<BigInt> shifted(h.coeffs().begin() + k, h.coeffs().end());
    IntPoly g{std::move(shifted)};

    std::vector<BigInt> us = divisors(factor_int(g.coeff(0)));
    std::vector<BigInt> ws = divisors(factor_int(g.lc()));
    long n = g.degree();
    for (const BigInt& u : us) {
        for (const BigInt& w : ws) {
            if (gcd(u, w) != 1) continue;
            /* evaluate sum c_i u^i w^(n-i) for both signs of u */
            BigInt pos = 0, neg = 0, upow = 1;
            std::vector<BigInt> wpow(n + 1);
            wpow[0] = 1;
            for (long i = 1; i <= n; ++i) wpow[i] = wpow[i - 1] * w;
            for (long i = 0; i <= n; ++i) {
                BigInt term = g.coeff(i) * upow * wpow[n - i];
                pos += term;
                if (i & 1) neg -= term; else neg += term;
                upow *= u;
            }
            if (pos == 0) roots.push_back(make_rational(u, w));
            if (neg == 0) roots.push_back(make_rational(-u, w));
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::string to_string(const IntPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        const BigInt& c = f.coeff(i);
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (sign_of(c) < 0) out << "-";
            first = false;
        } else {
            out << (sign_of(c) < 0 ? "-" : "+");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

/* ---------------- RatPoly ---------------- */

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const IntPoly& f) {
    c_.reserve(f.degree() + 1);
    for (const auto& x : f.coeffs()) c_.emplace_back(x);
    normalize();
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& RatPoly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : rat_zero;
}

bool RatPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatPoly shift(const RatPoly& f, const Rational& s) {
    /* synthetic division by (x - (-s)), repeated: classic Taylor shift */
    std::vector<Rational> c(f.coeffs());
    long n = f.degree();
    for (long i = 0; i < n; ++i)
        for (long j = n - 1; j >= i; --j) c[j] += s * c[j + 1];
    return RatPoly(std::move(c));
}

ClearedPoly clear_denominators(const RatPoly& f) {
    BigInt den = 1;
    for (const auto& q : f.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> c;
    c.reserve(f.degree() + 1);
    for (const auto& q : f.coeffs()) {
        Rational scaled = q * Rational(den);
        c.push_back(scaled.get_num());
    }
    return {IntPoly(std::move(c)), den};
}

std::string to_string(const RatPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        const Rational& q = f.coeff(i);
        if (q == 0) continue;
        Rational a = abs(q);
        if (first) {
            if (sgn(q) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(q) < 0 ? "-" : "+");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace monoquart
