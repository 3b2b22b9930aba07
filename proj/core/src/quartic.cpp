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

#include "monoquart/quartic.hpp"

#include <stdexcept>

namespace monoquart {

IntPoly quartic_poly(const QuarticShape& h) {
    return IntPoly({h.a0, h.a1, h.a2, h.a3, BigInt(1)});
}

IntPoly resolvent_cubic(const QuarticShape& h) {
    BigInt c2 = -h.a2;
    BigInt c1 = h.a3 * h.a1 - 4 * h.a0;
    BigInt c0 = -h.a3 * h.a3 * h.a0 - h.a1 * h.a1 + 4 * h.a2 * h.a0;
    return IntPoly({c0, c1, c2, BigInt(1)});
}

RatPoly depress(const QuarticShape& h) {
    Rational b2 = make_rational(-3 * h.a3 * h.a3, 8) + Rational(h.a2);
    Rational b1 = make_rational(h.a3 * h.a3 * h.a3, 8) -
                  make_rational(h.a3 * h.a2, 2) + Rational(h.a1);
    Rational b0 = make_rational(-3 * h.a3 * h.a3 * h.a3 * h.a3, 256) +
                  make_rational(h.a3 * h.a3 * h.a2, 16) -
                  make_rational(h.a3 * h.a1, 4) + Rational(h.a0);
    return RatPoly({b0, b1, b2, Rational(0), Rational(1)});
}

RatPoly resolvent_cubic_depressed(const RatPoly& hdep) {
    if (hdep.degree() != 4 || hdep.coeff(4) != 1 || hdep.coeff(3) != 0)
        throw std::invalid_argument(
            "resolvent_cubic_depressed requires a monic depressed quartic");
    const Rational& b2 = hdep.coeff(2);
    const Rational& b1 = hdep.coeff(1);
    const Rational& b0 = hdep.coeff(0);
    Rational c2 = 2 * b2;
    Rational c1 = b2 * b2 - 4 * b0;
    Rational c0 = -(b1 * b1);
    return RatPoly({c0, c1, c2, Rational(1)});
}

bool check_resolvent_shift(const QuarticShape& h) {
    RatPoly r(resolvent_cubic(h));
    Rational s = Rational(h.a2) - make_rational(h.a3 * h.a3, 4);
    return shift(r, s) == resolvent_cubic_depressed(depress(h));
}

namespace {

std::vector<Rational> depressed_resolvent_roots(const RatPoly& rdep) {
    ClearedPoly cp = clear_denominators(rdep);
    return rational_roots(cp.poly);
}

}  // namespace

bool splits_into_quadratics(const QuarticShape& h) {
    RatPoly hdep = depress(h);
    RatPoly rdep = resolvent_cubic_depressed(hdep);
    for (const Rational& r : depressed_resolvent_roots(rdep)) {
        if (r != 0 && is_rational_square(r)) return true;
    }
    const Rational& b2 = hdep.coeff(2);
    const Rational& b1 = hdep.coeff(1);
    const Rational& b0 = hdep.coeff(0);
    if (b1 == 0 && is_rational_square(b2 * b2 - 4 * b0)) return true;
    return false;
}

IrreducibilityReport quartic_irreducibility(const QuarticShape& h) {
    IrreducibilityReport rep;
    // fast path: an Eisenstein prime certifies irreducibility outright
    BigInt g = gcd(gcd(h.a3, h.a2), gcd(h.a1, h.a0));
    if (g < 0) g = -g;
    if (g > 1 && h.a0 != 0) {
        for (auto& [p, e] : factor_int(g).primes) {
            (void)e;
            if (h.a0 % (p * p) != 0) {
                rep.irreducible = true;
                rep.eisenstein_path = true;
                rep.eisenstein_prime = p;
                return rep;
            }
        }
    }
    rep.roots = rational_roots(quartic_poly(h));
    if (!rep.roots.empty()) return rep;
    rep.quadratic_split = splits_into_quadratics(h);
    rep.irreducible = !rep.quadratic_split;
    return rep;
}

bool is_irreducible_quartic(const QuarticShape& h) {
    return quartic_irreducibility(h).irreducible;
}

std::string to_string(GaloisGroup g) {
    switch (g) {
        case GaloisGroup::S4: return "S4";
        case GaloisGroup::A4: return "A4";
        case GaloisGroup::D8_or_C4: return "D8 or Z/4Z";
        case GaloisGroup::V4: return "V4";
        case GaloisGroup::NOT_IRREDUCIBLE: return "NOT_IRREDUCIBLE";
    }
    return "?";
}

GaloisReport galois_group(const QuarticShape& h) {
    GaloisReport rep;
    rep.resolvent = resolvent_cubic(h);
    rep.disc = discriminant(quartic_poly(h));
    rep.disc_is_square = is_perfect_square(rep.disc);
    rep.resolvent_irreducible = rational_roots(rep.resolvent).empty();
    rep.irreducible = is_irreducible_quartic(h);
    if (!rep.irreducible) {
        rep.group = GaloisGroup::NOT_IRREDUCIBLE;
    } else if (rep.resolvent_irreducible) {
        rep.group = rep.disc_is_square ? GaloisGroup::A4 : GaloisGroup::S4;
    } else {
        rep.group = rep.disc_is_square ? GaloisGroup::V4
                                       : GaloisGroup::D8_or_C4;
    }
    return rep;
}

}  // namespace monoquart
