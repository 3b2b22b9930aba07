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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "monoquart/intpoly.hpp"
#include "monoquart/modpoly.hpp"
#include "test_util.hpp"

using namespace monoquart;
using mqt::ip;

static std::mt19937_64 rng(0x5eed0004);

static ModPoly mp(long p, const std::vector<long>& c) {
    std::vector<BigInt> v;
    v.reserve(c.size());
    for (long x : c) v.emplace_back(x);
    return ModPoly(BigInt(p), std::move(v));
}

/* every monic polynomial of the given degree over F_p, by counting */
static std::vector<ModPoly> all_monic(long p, long deg) {
    std::vector<ModPoly> out;
    long count = 1;
    for (long i = 0; i < deg; ++i) count *= p;
    for (long n = 0; n < count; ++n) {
        std::vector<BigInt> c(static_cast<size_t>(deg) + 1);
        long t = n;
        for (long i = 0; i < deg; ++i) {
            c[static_cast<size_t>(i)] = t % p;
            t /= p;
        }
        c[static_cast<size_t>(deg)] = 1;
        out.emplace_back(BigInt(p), std::move(c));
    }
    return out;
}

/* oracle: exhaustive trial division by monic polynomials of ascending
   degree; every divisor found this way is automatically irreducible */
static std::vector<ModFactor> brute_factor(ModPoly f) {
    REQUIRE(f.is_monic());
    long p = static_cast<long>(f.modulus().get_si());
    std::vector<ModFactor> out;
    for (long d = 1; d <= f.degree(); ++d) {
        for (const ModPoly& g : all_monic(p, d)) {
            if (f.degree() < d) break;
            int mult = 0;
            for (;;) {
                ModDivRem qr = divrem(f, g);
                if (!qr.rem.is_zero()) break;
                f = qr.quot;
                ++mult;
            }
            if (mult > 0) out.push_back({g, mult});
        }
    }
    REQUIRE(f.degree() == 0);
    std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
        return modpoly_less(a.factor, b.factor);
    });
    return out;
}

static void check_against_oracle(const IntPoly& f, long p) {
    ModPoly fbar = reduce(f, BigInt(p));
    if (fbar.is_zero()) return;
    std::vector<ModFactor> got = factor_modp(f, BigInt(p));
    // reconstruction: lc * prod factor^mult == f mod p
    ModPoly prod = ModPoly::monomial(BigInt(p), 0, fbar.lc());
    long degsum = 0;
    for (const ModFactor& mf : got) {
        CHECK(mf.factor.is_monic());
        for (int i = 0; i < mf.multiplicity; ++i) prod = prod * mf.factor;
        degsum += mf.factor.degree() * mf.multiplicity;
    }
    CHECK(prod == fbar);
    CHECK(degsum == fbar.degree());
    for (size_t i = 1; i < got.size(); ++i)
        CHECK(modpoly_less(got[i - 1].factor, got[i].factor));

    std::vector<ModFactor> want = brute_factor(fbar.monic());
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].factor == want[i].factor);
        CHECK(got[i].multiplicity == want[i].multiplicity);
    }
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(ModPoly(BigInt(1)), std::invalid_argument);
    CHECK_THROWS_AS(ModPoly(BigInt(0), {BigInt(1)}), std::invalid_argument);
    CHECK_NOTHROW(ModPoly(BigInt(2)));
}

TEST_CASE("reduce and lift round trip") {
    for (int i = 0; i < 100; ++i) {
        IntPoly f = mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 6), 100, false);
        for (long p : {2L, 3L, 7L}) {
            ModPoly fbar = reduce(f, BigInt(p));
            IntPoly lifted = lift(fbar);
            for (size_t k = 0; k <= static_cast<size_t>(f.degree() < 0 ? 0 : f.degree()); ++k) {
                BigInt diff = f.coeff(k) - lifted.coeff(k);
                CHECK(diff % p == 0);
            }
            for (const BigInt& c : lifted.coeffs()) {
                CHECK(c >= 0);
                CHECK(c < p);
            }
        }
    }
}

TEST_CASE("arithmetic identities mod p") {
    for (int i = 0; i < 200; ++i) {
        long p = std::vector<long>{2, 3, 5, 13}[static_cast<size_t>(
            mqt::rnd_long(rng, 0, 3))];
        ModPoly a = reduce(mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 5), 50, false), BigInt(p));
        ModPoly b = reduce(mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 5), 50, false), BigInt(p));
        ModPoly c = reduce(mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 5), 50, false), BigInt(p));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) {
            ModDivRem qr = divrem(a, b);
            CHECK(qr.quot * b + qr.rem == a);
            CHECK(qr.rem.degree() < b.degree());
        }
    }
    CHECK_THROWS_AS(divrem(mp(3, {1, 1}), ModPoly(BigInt(3))),
                    std::domain_error);
}

TEST_CASE("gcd is a monic common divisor") {
    for (int i = 0; i < 150; ++i) {
        long p = std::vector<long>{2, 3, 5}[static_cast<size_t>(
            mqt::rnd_long(rng, 0, 2))];
        ModPoly a = reduce(mqt::rnd_poly(rng, mqt::rnd_long(rng, 1, 5), 50, false), BigInt(p));
        ModPoly b = reduce(mqt::rnd_poly(rng, mqt::rnd_long(rng, 1, 5), 50, false), BigInt(p));
        if (a.is_zero() || b.is_zero()) continue;
        ModPoly g = gcd(a, b);
        REQUIRE(!g.is_zero());
        CHECK(g.is_monic());
        CHECK(divrem(a, g).rem.is_zero());
        CHECK(divrem(b, g).rem.is_zero());
        // common factors are detected
        ModPoly f = reduce(ip({1, 1}), BigInt(p));
        ModPoly g2 = gcd(a * f, b * f);
        CHECK(divrem(g2, f.monic()).rem.is_zero());
    }
    CHECK(gcd(ModPoly(BigInt(5)), ModPoly(BigInt(5))).is_zero());
}

TEST_CASE("powmod satisfies Frobenius") {
    // x^(p^d) = x mod any irreducible m of degree d
    struct Case { long p; std::vector<long> m; };
    std::vector<Case> cases = {
        {2, {1, 1, 1}},        // x^2+x+1
        {3, {1, 2, 0, 1}},     // x^3+2x+1
        {5, {2, 0, 1}},        // x^2+2
        {7, {1, 1}},           // x+1
    };
    for (const Case& c : cases) {
        ModPoly m = mp(c.p, c.m);
        BigInt e(1);
        for (long i = 0; i < m.degree(); ++i) e *= c.p;
        ModPoly x = ModPoly::monomial(BigInt(c.p), 1);
        CHECK(powmod(x, e, m) == x % m);
    }
}

TEST_CASE("invmod") {
    ModPoly m = mp(5, {1, 0, 1});  // x^2+1 mod 5 = (x+2)(x+3)
    CHECK_THROWS_AS(invmod(mp(5, {2, 1}), m), std::exception);
    ModPoly mi = mp(3, {1, 0, 1});  // irreducible mod 3
    for (int i = 0; i < 30; ++i) {
        ModPoly a = reduce(mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 1), 10, false), BigInt(3));
        if (a.is_zero()) continue;
        ModPoly inv = invmod(a, mi);
        CHECK(mulmod(a, inv, mi) == ModPoly::monomial(BigInt(3), 0));
    }
}

TEST_CASE("factorization matches the exhaustive oracle") {
    // all monic polynomials of degree <= 4 over F_2
    for (long d = 1; d <= 4; ++d)
        for (const ModPoly& f : all_monic(2, d)) check_against_oracle(lift(f), 2);
    // all monic polynomials of degree <= 4 over F_3
    for (long d = 1; d <= 4; ++d)
        for (const ModPoly& f : all_monic(3, d)) check_against_oracle(lift(f), 3);
    // all monic quadratics and cubics over F_5
    for (long d = 1; d <= 3; ++d)
        for (const ModPoly& f : all_monic(5, d)) check_against_oracle(lift(f), 5);
    // random higher degrees, including non-monic lifts
    for (int i = 0; i < 200; ++i) {
        long p = std::vector<long>{2, 3, 5, 7, 13}[static_cast<size_t>(
            mqt::rnd_long(rng, 0, 4))];
        IntPoly f = mqt::rnd_poly(rng, mqt::rnd_long(rng, 1, 6), 50, false);
        if (reduce(f, BigInt(p)).is_zero()) continue;
        check_against_oracle(f, p);
    }
}

TEST_CASE("factorization is seed independent") {
    for (int i = 0; i < 50; ++i) {
        long p = std::vector<long>{2, 3, 7, 13}[static_cast<size_t>(
            mqt::rnd_long(rng, 0, 3))];
        IntPoly f = mqt::rnd_poly(rng, 6, 50, true);
        std::vector<ModFactor> a = factor_modp(f, BigInt(p), 1);
        std::vector<ModFactor> b = factor_modp(f, BigInt(p), 424242);
        REQUIRE(a.size() == b.size());
        for (size_t k = 0; k < a.size(); ++k) {
            CHECK(a[k].factor == b[k].factor);
            CHECK(a[k].multiplicity == b[k].multiplicity);
        }
    }
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible_modp(ip({1, 1, 1}), BigInt(2)));
    CHECK(is_irreducible_modp(ip({1, 0, 1}), BigInt(3)));
    CHECK(!is_irreducible_modp(ip({1, 0, 1}), BigInt(2)));  // (x+1)^2
    CHECK(is_irreducible_modp(ip({1, 2, 0, 1}), BigInt(3)));
    // x^4+1 is reducible mod every prime
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L})
        CHECK(!is_irreducible_modp(ip({1, 0, 0, 0, 1}), BigInt(p)));
    // count of monic irreducible quadratics over F_p is p(p-1)/2
    for (long p : {2L, 3L, 5L, 7L}) {
        long n = 0;
        for (const ModPoly& f : all_monic(p, 2))
            if (is_irreducible_modp(lift(f), BigInt(p))) ++n;
        CHECK(n == p * (p - 1) / 2);
    }
}

TEST_CASE("is_separable") {
    CHECK(is_separable(mp(2, {1, 1, 1})));
    CHECK(!is_separable(mp(2, {1, 0, 1})));  // (x+1)^2
    CHECK(is_separable(mp(3, {0, 1})));
    CHECK(!is_separable(mp(3, {0, 0, 0, 1})));  // x^3
    CHECK(is_separable(mp(5, {4})));            // constant
}

TEST_CASE("modpoly_less is a strict total order on small sets") {
    std::vector<ModPoly> polys = all_monic(3, 2);
    for (const ModPoly& a : polys) CHECK(!modpoly_less(a, a));
    for (const ModPoly& a : polys)
        for (const ModPoly& b : polys)
            if (!(a == b)) CHECK(modpoly_less(a, b) != modpoly_less(b, a));
    CHECK(modpoly_less(mp(2, {0, 1}), mp(2, {1, 0, 1})));  // degree first
}

TEST_CASE("residue field elements") {
    // F_4 = F_2[x]/(x^2+x+1): x * (x+1) = 1
    ModPoly phibar = mp(2, {1, 1, 1});
    ResidueElem x(mp(2, {0, 1}), phibar);
    ResidueElem x1(mp(2, {1, 1}), phibar);
    ResidueElem one(mp(2, {1}), phibar);
    CHECK(x * x1 == one);
    CHECK(x.inverse() == x1);
    CHECK(x + x == ResidueElem(ModPoly(BigInt(2)), phibar));  // char 2
    CHECK((x * x) == x + one);  // x^2 = x+1
    CHECK_THROWS_AS(ResidueElem(ModPoly(BigInt(2)), phibar).inverse(),
                    std::exception);
}

TEST_CASE("residual separability over residue fields") {
    ModPoly phibar = mp(2, {1, 1});  // residue field F_2
    auto elem = [&](long v) { return ResidueElem(mp(2, {v}), phibar); };
    // y^2+1 = (y+1)^2: inseparable
    ResidualPoly r1(std::vector<ResidueElem>{elem(1), elem(0), elem(1)});
    CHECK(!residual_separable(r1));
    // y^2+y+1: separable
    ResidualPoly r2(std::vector<ResidueElem>{elem(1), elem(1), elem(1)});
    CHECK(residual_separable(r2));
    // constants and linears are separable
    ResidualPoly r3(std::vector<ResidueElem>{elem(1), elem(1)});
    CHECK(residual_separable(r3));

    // over F_4: (y+x)^2 = y^2 + (x+1) is inseparable, y^2+y+1 splits
    ModPoly phi4 = mp(2, {1, 1, 1});
    auto e4 = [&](std::vector<long> v) {
        return ResidueElem(mp(2, v), phi4);
    };
    ResidualPoly r4(std::vector<ResidueElem>{e4({1, 1}), e4({0}), e4({1})});
    CHECK(!residual_separable(r4));
    ResidualPoly r5(std::vector<ResidueElem>{e4({1}), e4({1}), e4({1})});
    CHECK(residual_separable(r5));
    CHECK(to_string(r5) == "y^2+y+1");
}
