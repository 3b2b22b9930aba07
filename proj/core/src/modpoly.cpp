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

#include "monoquart/modpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "fp_poly.hpp"

namespace monoquart {

namespace {

const BigInt zero_big = 0;

fp::FpBig field_of(const BigInt& p) {
    if (p < 2) throw std::invalid_argument("ModPoly used without a modulus");
    return fp::FpBig{p};
}

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("mixed moduli in ModPoly arithmetic");
}

}  // namespace

ModPoly make_modpoly_raw(BigInt p, std::vector<BigInt> reduced) {
    ModPoly r(std::move(p));
    r.c_ = std::move(reduced);
    return r;
}

void ModPoly::check_modulus() const {
    if (p_ < 2) throw std::invalid_argument("ModPoly modulus must be >= 2");
}

void ModPoly::normalize() {
    for (auto& c : c_) {
        c %= p_;
        if (c < 0) c += p_;
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly::ModPoly(BigInt p, std::vector<BigInt> coeffs)
    : p_(std::move(p)), c_(std::move(coeffs)) {
    check_modulus();
    normalize();
}

ModPoly ModPoly::from_int(const IntPoly& f, const BigInt& p) {
    std::vector<BigInt> c;
    c.reserve(static_cast<size_t>(f.degree() + 1));
    for (long i = 0; i <= f.degree(); ++i)
        c.push_back(f.coeff(static_cast<size_t>(i)));
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::monomial(const BigInt& p, size_t k, const BigInt& c) {
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[k] = c;
    return ModPoly(p, std::move(v));
}

const BigInt& ModPoly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : zero_big;
}

const BigInt& ModPoly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero");
    return c_.back();
}

ModPoly ModPoly::scaled(const BigInt& c) const {
    check_modulus();
    auto f = field_of(p_);
    return make_modpoly_raw(p_, fp::scale(f, c_, f.from_big(c)));
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    auto f = field_of(p_);
    auto v = c_;
    fp::make_monic(f, v);
    return make_modpoly_raw(p_, std::move(v));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    auto f = field_of(a.p_);
    return make_modpoly_raw(a.p_, fp::add(f, a.c_, b.c_));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    auto f = field_of(a.p_);
    return make_modpoly_raw(a.p_, fp::sub(f, a.c_, b.c_));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    auto f = field_of(a.p_);
    return make_modpoly_raw(a.p_, fp::mul(f, a.c_, b.c_));
}

bool modpoly_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (size_t i = ca.size(); i-- > 0;) {
        int c = cmp(ca[i], cb[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

ModDivRem divrem(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    if (b.is_zero()) throw std::domain_error("ModPoly division by zero");
    auto f = field_of(a.modulus());
    auto [q, r] = fp::divrem(f, a.coeffs(), b.coeffs());
    return {make_modpoly_raw(a.modulus(), std::move(q)),
            make_modpoly_raw(a.modulus(), std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) {
    return divrem(a, b).rem;
}

ModPoly gcd(ModPoly a, ModPoly b) {
    require_same_modulus(a, b);
    auto f = field_of(a.modulus());
    return make_modpoly_raw(a.modulus(), fp::gcd(f, a.coeffs(), b.coeffs()));
}

ModPoly derivative(const ModPoly& g) {
    auto f = field_of(g.modulus());
    return make_modpoly_raw(g.modulus(), fp::deriv(f, g.coeffs()));
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) {
    require_same_modulus(a, b);
    require_same_modulus(a, m);
    auto f = field_of(a.modulus());
    return make_modpoly_raw(a.modulus(),
                            fp::mulmod(f, a.coeffs(), b.coeffs(), m.coeffs()));
}

ModPoly powmod(ModPoly base, BigInt e, const ModPoly& m) {
    require_same_modulus(base, m);
    auto f = field_of(base.modulus());
    return make_modpoly_raw(
        base.modulus(),
        fp::powmod(f, base.coeffs(), std::move(e), m.coeffs()));
}

ModPoly invmod(const ModPoly& a, const ModPoly& m) {
    require_same_modulus(a, m);
    if (m.degree() < 1)
        throw std::domain_error("invmod requires deg m >= 1");
    auto f = field_of(a.modulus());
    return make_modpoly_raw(a.modulus(),
                            fp::invmod(f, a.coeffs(), m.coeffs()));
}

IntPoly lift(const ModPoly& f) { return IntPoly(f.coeffs()); }

bool is_separable(const ModPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return gcd(f, derivative(f)).degree() == 0;
}

namespace {

template <class F>
std::vector<ModFactor> run_factor(const F& fld, fp::Poly<F> g,
                                  const BigInt& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x6d6f6e6f71756172ULL);
    auto raw = fp::factor(fld, std::move(g), p, rng);
    std::vector<ModFactor> out;
    out.reserve(raw.size());
    for (auto& rec : raw) {
        std::vector<BigInt> c;
        c.reserve(rec.poly.size());
        for (auto& e : rec.poly) c.push_back(fld.to_big(e));
        out.push_back({make_modpoly_raw(p, std::move(c)), rec.mult});
    }
    std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
        return modpoly_less(a.factor, b.factor);
    });
    return out;
}

}  // namespace

std::vector<ModFactor> factor_modp(const IntPoly& f, const BigInt& p,
                                   std::uint64_t seed) {
    if (!is_probable_prime(p))
        throw std::invalid_argument("factor_modp: modulus is not prime");
    ModPoly fb = ModPoly::from_int(f, p);
    if (fb.is_zero())
        throw std::invalid_argument("factor_modp: polynomial vanishes mod p");
    if (fb.degree() == 0) return {};
    ModPoly g = fb.monic();
    if (p.fits_ulong_p() && p.get_ui() <= 0xFFFFFFFFul) {
        fp::FpSmall fld{p.get_ui()};
        fp::Poly<fp::FpSmall> v;
        v.reserve(g.coeffs().size());
        for (auto& c : g.coeffs()) v.push_back(fld.from_big(c));
        return run_factor(fld, std::move(v), p, seed);
    }
    fp::FpBig fld{p};
    return run_factor(fld, g.coeffs(), p, seed);
}

bool is_irreducible_modp(const IntPoly& f, const BigInt& p,
                         std::uint64_t seed) {
    auto fs = factor_modp(f, p, seed);
    return fs.size() == 1 && fs[0].multiplicity == 1 &&
           fs[0].factor.degree() == ModPoly::from_int(f, p).degree();
}

ModPoly reduce(const IntPoly& f, const BigInt& p) {
    return ModPoly::from_int(f, p);
}

// ---- residue field F_p[x]/(phibar) ----

ResidueElem::ResidueElem(ModPoly value, ModPoly phibar)
    : phibar_(std::move(phibar)) {
    if (phibar_.degree() < 1 || !phibar_.is_monic())
        throw std::invalid_argument(
            "ResidueElem modulus must be monic of degree >= 1");
    value_ = value % phibar_;
}

ResidueElem ResidueElem::inverse() const {
    return ResidueElem(invmod(value_, phibar_), phibar_);
}

namespace {

void require_same_field(const ResidueElem& a, const ResidueElem& b) {
    if (a.phibar() != b.phibar())
        throw std::invalid_argument("mixed residue fields");
}

}  // namespace

ResidueElem operator+(const ResidueElem& a, const ResidueElem& b) {
    require_same_field(a, b);
    return ResidueElem(a.value() + b.value(), a.phibar());
}

ResidueElem operator-(const ResidueElem& a, const ResidueElem& b) {
    require_same_field(a, b);
    return ResidueElem(a.value() - b.value(), a.phibar());
}

ResidueElem operator*(const ResidueElem& a, const ResidueElem& b) {
    require_same_field(a, b);
    return ResidueElem(mulmod(a.value(), b.value(), a.phibar()), a.phibar());
}

ResidualPoly::ResidualPoly(std::vector<ResidueElem> coeffs)
    : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const ResidueElem& ResidualPoly::coeff(size_t i) const {
    if (i >= c_.size())
        throw std::out_of_range("ResidualPoly coefficient index");
    return c_[i];
}

namespace {

using RVec = std::vector<ResidueElem>;

void rtrim(RVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

RVec rderiv(const RVec& a, const BigInt& p) {
    RVec r;
    for (size_t i = 1; i < a.size(); ++i) {
        ModPoly k(p, {BigInt(static_cast<unsigned long>(i))});
        r.push_back(ResidueElem(mulmod(a[i].value(), k, a[i].phibar()),
                                a[i].phibar()));
    }
    rtrim(r);
    return r;
}

// remainder of a by b over the residue field (b nonzero)
RVec rmod(RVec a, const RVec& b) {
    size_t db = b.size() - 1;
    ResidueElem ilb = b.back().inverse();
    while (a.size() > db) {
        ResidueElem c = a.back() * ilb;
        size_t shift = a.size() - 1 - db;
        for (size_t j = 0; j <= db; ++j) {
            ResidueElem t = a[shift + j] - c * b[j];
            a[shift + j] = t;
        }
        a.pop_back();
        rtrim(a);
        if (a.size() <= db) break;
    }
    rtrim(a);
    return a;
}

}  // namespace

bool residual_separable(const ResidualPoly& r) {
    if (r.is_zero()) return false;
    if (r.degree() == 0) return true;
    const BigInt& p = r.coeff(0).modulus();
    RVec a = r.coeffs();
    RVec b = rderiv(a, p);
    // euclidean gcd; separable iff the gcd is a nonzero constant
    while (!b.empty()) {
        a = rmod(std::move(a), b);
        std::swap(a, b);
    }
    return a.size() == 1;
}

std::string to_string(const ResidualPoly& r, const std::string& yvar) {
    if (r.is_zero()) return "0";
    std::string out;
    for (long i = r.degree(); i >= 0; --i) {
        const ResidueElem& c = r.coeff(static_cast<size_t>(i));
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        bool unit = c.value().degree() == 0 && c.value().coeff(0) == 1;
        if (i == 0 || !unit) {
            std::string cs = to_string(lift(c.value()));
            bool wrap = c.value().degree() > 0;
            out += wrap ? "(" + cs + ")" : cs;
            if (i > 0) out += "*";
        }
        if (i > 0) {
            out += yvar;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace monoquart
