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

#include <random>
#include <stdexcept>
#include <vector>

#include "monoquart/bigint.hpp"
#include "monoquart/intpoly.hpp"
#include "test_util.hpp"

using namespace monoquart;
using mqt::ip;

static std::mt19937_64 rng(0x5eed0002);

/* independent resultant oracle: determinant of the Sylvester matrix by
   exact rational Gaussian elimination */
static BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    long m = f.degree(), n = g.degree();
    REQUIRE(m >= 0);
    REQUIRE(n >= 0);
    size_t N = static_cast<size_t>(m + n);
    if (N == 0) return BigInt(1);
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, Rational(0)));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k)
            M[static_cast<size_t>(r)][static_cast<size_t>(r + k)] =
                Rational(f.coeff(static_cast<size_t>(m - k)));
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k)
            M[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] =
                Rational(g.coeff(static_cast<size_t>(n - k)));
    Rational det(1);
    for (size_t col = 0; col < N; ++col) {
        size_t piv = col;
        while (piv < N && M[piv][col] == 0) ++piv;
        if (piv == N) return BigInt(0);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det *= M[col][col];
        for (size_t r = col + 1; r < N; ++r) {
            if (M[r][col] == 0) continue;
            Rational factor = M[r][col] / M[col][col];
            for (size_t c2 = col; c2 < N; ++c2) M[r][c2] -= factor * M[col][c2];
        }
    }
    det.canonicalize();
    REQUIRE(det.get_den() == 1);
    return det.get_num();
}

TEST_CASE("construction and normalization") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    IntPoly t = ip({1, 2, 0, 0});
    CHECK(t.degree() == 1);
    CHECK(IntPoly(BigInt(0)).is_zero());
    IntPoly m = IntPoly::monomial(BigInt(3), 4);
    CHECK(m.degree() == 4);
    CHECK(m.coeff(4) == 3);
    CHECK(m.coeff(0) == 0);
    CHECK(m.coeff(9) == 0);
    CHECK(ip({2, 2, 0, 0, 1}).is_monic());
    CHECK(!ip({2, 3}).is_monic());
}

TEST_CASE("ring identities on random polynomials") {
    for (int i = 0; i < 200; ++i) {
        IntPoly f = mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 5), 30, false);
        IntPoly g = mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 5), 30, false);
        IntPoly h = mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 5), 30, false);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK(f - f == IntPoly());
        BigInt x(mqt::rnd_long(rng, -50, 50));
        CHECK((f * g)(x) == f(x) * g(x));
        CHECK((f + g)(x) == f(x) + g(x));
        CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
    }
}

TEST_CASE("divrem_monic") {
    for (int i = 0; i < 200; ++i) {
        IntPoly f = mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 6), 40, false);
        IntPoly g = mqt::rnd_poly(rng, mqt::rnd_long(rng, 1, 4), 40, true);
        DivRem d = divrem_monic(f, g);
        CHECK(d.quot * g + d.rem == f);
        CHECK(d.rem.degree() < g.degree());
    }
    // exact division
    IntPoly q = ip({-2, 1});
    DivRem d = divrem_monic(q * q * q, q);
    CHECK(d.rem.is_zero());
    CHECK(d.quot == q * q);
}

TEST_CASE("content and divexact") {
    CHECK(content(ip({6, 9, 12})) == 3);
    CHECK(content(ip({-4, -8})) == 4);
    CHECK(content(IntPoly()) == 0);
    CHECK(divexact(ip({6, 9, 12}), BigInt(3)) == ip({2, 3, 4}));
}

TEST_CASE("vp_poly") {
    CHECK(vp_poly(ip({12, 8}), BigInt(2)) == 2);
    CHECK(vp_poly(ip({12, 8}), BigInt(3)) == 0);
    CHECK(vp_poly(ip({18, 27}), BigInt(3)) == 2);
    CHECK(vp_poly(IntPoly(), BigInt(2)) == val_inf);
}

TEST_CASE("resultant matches the Sylvester oracle") {
    // res(x-a, x-b) = a-b
    for (int i = 0; i < 50; ++i) {
        long a = mqt::rnd_long(rng, -100, 100);
        long b = mqt::rnd_long(rng, -100, 100);
        CHECK(resultant(ip({-a, 1}), ip({-b, 1})) == a - b);
    }
    CHECK(resultant(ip({1, 0, 1}), ip({-1, 0, 1})) == 4);
    CHECK(resultant(ip({0}), ip({1, 1})) == 0);

    for (int i = 0; i < 400; ++i) {
        IntPoly f = mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 4), 20, false);
        IntPoly g = mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 4), 20, false);
        BigInt r = resultant(f, g);
        CHECK(r == sylvester_resultant(f, g));
        long m = f.degree(), n = g.degree();
        BigInt flip = resultant(g, f);
        CHECK(r == ((m * n) % 2 == 0 ? flip : BigInt(-flip)));
    }
    // multiplicativity in the second argument
    for (int i = 0; i < 100; ++i) {
        IntPoly f = mqt::rnd_poly(rng, mqt::rnd_long(rng, 1, 3), 10, false);
        IntPoly g = mqt::rnd_poly(rng, mqt::rnd_long(rng, 1, 3), 10, false);
        IntPoly h = mqt::rnd_poly(rng, mqt::rnd_long(rng, 1, 3), 10, false);
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("discriminant closed forms") {
    for (int i = 0; i < 200; ++i) {
        BigInt b(mqt::rnd_long(rng, -50, 50));
        BigInt c(mqt::rnd_long(rng, -50, 50));
        CHECK(discriminant(IntPoly({c, b, BigInt(1)})) == b * b - 4 * c);
        // x^3 + px + q
        BigInt p(mqt::rnd_long(rng, -50, 50));
        BigInt q(mqt::rnd_long(rng, -50, 50));
        CHECK(discriminant(IntPoly({q, p, BigInt(0), BigInt(1)})) ==
              -4 * p * p * p - 27 * q * q);
        // x^4 + ax + b
        BigInt a(mqt::rnd_long(rng, -50, 50));
        BigInt b4(mqt::rnd_long(rng, -50, 50));
        CHECK(discriminant(IntPoly({b4, a, BigInt(0), BigInt(0), BigInt(1)})) ==
              256 * b4 * b4 * b4 - 27 * a * a * a * a);
        // x^4 + cx^3 + d
        BigInt cc(mqt::rnd_long(rng, -50, 50));
        BigInt d(mqt::rnd_long(rng, -50, 50));
        CHECK(discriminant(IntPoly({d, BigInt(0), BigInt(0), cc, BigInt(1)})) ==
              d * d * (256 * d - 27 * cc * cc * cc * cc));
    }
    CHECK(discriminant(ip({2, 2, 0, 0, 1})) == 1616);  // 2^4 * 101
}

TEST_CASE("rational_roots") {
    // (2x-1)(x+3)(x^2+1)
    IntPoly f = ip({-1, 2}) * ip({3, 1}) * ip({1, 0, 1});
    std::vector<Rational> r = rational_roots(f);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == -3);
    CHECK(r[1] == make_rational(BigInt(1), BigInt(2)));

    // repeated roots reported once, ascending
    IntPoly g = ip({-2, 1}) * ip({-2, 1}) * ip({5, 1});
    std::vector<Rational> rg = rational_roots(g);
    REQUIRE(rg.size() == 2);
    CHECK(rg[0] == -5);
    CHECK(rg[1] == 2);

    // zero constant coefficient means root 0
    std::vector<Rational> rx = rational_roots(ip({0, -1, 0, 1}));  // x^3 - x
    REQUIRE(rx.size() == 3);
    CHECK(rx[0] == -1);
    CHECK(rx[1] == 0);
    CHECK(rx[2] == 1);

    CHECK(rational_roots(ip({1, 0, 1})).empty());
    CHECK(rational_roots(ip({1, 1, 0, 0, 1})).empty());  // x^4+x+1

    // every reported root really vanishes (random products)
    for (int i = 0; i < 100; ++i) {
        IntPoly h = mqt::rnd_poly(rng, mqt::rnd_long(rng, 1, 4), 15, false);
        if (h.is_zero()) continue;
        for (const Rational& root : rational_roots(h)) {
            RatPoly hr(h);
            CHECK(hr(root) == 0);
        }
    }
}

TEST_CASE("to_string rendering") {
    CHECK(to_string(ip({2, 2, 0, 0, 1})) == "x^4+2x+2");
    CHECK(to_string(ip({-9, -12, 0, 1}), "y") == "y^3-12y-9");
    CHECK(to_string(IntPoly()) == "0");
    CHECK(to_string(ip({0, 1})) == "x");
    CHECK(to_string(ip({0, -1})) == "-x");
    CHECK(to_string(IntPoly(BigInt(42))) == "42");
    CHECK(to_string(ip({-1, 0, -1})) == "-x^2-1");
    CHECK(to_string(ip({0, 0, 7})) == "7x^2");
}

TEST_CASE("RatPoly shift and clear_denominators") {
    for (int i = 0; i < 100; ++i) {
        IntPoly f = mqt::rnd_poly(rng, mqt::rnd_long(rng, 0, 5), 20, false);
        Rational s = make_rational(BigInt(mqt::rnd_long(rng, -9, 9)),
                                   BigInt(mqt::rnd_long(rng, 1, 9)));
        RatPoly fs = shift(RatPoly(f), s);
        for (int j = 0; j < 5; ++j) {
            Rational x = make_rational(BigInt(mqt::rnd_long(rng, -9, 9)),
                                       BigInt(mqt::rnd_long(rng, 1, 9)));
            CHECK(fs(x) == RatPoly(f)(x + s));
        }
    }
    RatPoly q(std::vector<Rational>{make_rational(BigInt(0), BigInt(1)),
                                    make_rational(BigInt(1), BigInt(4)),
                                    make_rational(BigInt(1), BigInt(6))});
    ClearedPoly c = clear_denominators(q);
    CHECK(c.den == 12);
    CHECK(c.poly == ip({0, 3, 2}));
    RatPoly zero;
    CHECK(clear_denominators(zero).den == 1);
}
