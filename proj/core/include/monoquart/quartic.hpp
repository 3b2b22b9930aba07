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

#ifndef MONOQUART_QUARTIC_HPP
#define MONOQUART_QUARTIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "monoquart/bigint.hpp"
#include "monoquart/intpoly.hpp"

namespace monoquart {

// monic quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0
struct QuarticShape {
    BigInt a3, a2, a1, a0;
};

IntPoly quartic_poly(const QuarticShape& h);

// R(y) = y^3 - a2 y^2 + (a3 a1 - 4 a0) y - a3^2 a0 - a1^2 + 4 a2 a0;
// shares the discriminant of the quartic
IntPoly resolvent_cubic(const QuarticShape& h);

// substitute x = X - a3/4: monic quartic with no cubic term
RatPoly depress(const QuarticShape& h);

// R_dep(z) = z^3 + 2 b2 z^2 + (b2^2 - 4 b0) z - b1^2 for a depressed
// quartic X^4 + b2 X^2 + b1 X + b0
RatPoly resolvent_cubic_depressed(const RatPoly& hdep);

// substituting y = z - a3^2/4 + a2 into resolvent_cubic(h) must equal
// resolvent_cubic_depressed(depress(h)) identically
bool check_resolvent_shift(const QuarticShape& h);

/* true iff the quartic factors into two rational quadratics: the
   depressed resolvent has a nonzero root in Q^2, or b1 = 0 and
   b2^2 - 4 b0 is a rational square. callers should rule out rational
   roots first. */
bool splits_into_quadratics(const QuarticShape& h);

struct IrreducibilityReport {
    bool irreducible = false;
    bool eisenstein_path = false;  // certified by an Eisenstein prime
    std::optional<BigInt> eisenstein_prime;
    std::vector<Rational> roots;   // rational roots when the slow path ran
    bool quadratic_split = false;
};

IrreducibilityReport quartic_irreducibility(const QuarticShape& h);
bool is_irreducible_quartic(const QuarticShape& h);

enum class GaloisGroup { S4, A4, D8_or_C4, V4, NOT_IRREDUCIBLE };
std::string to_string(GaloisGroup g);

/* classification of irreducible quartics by discriminant squareness and
   resolvent-cubic irreducibility; D8 and C4 are deliberately merged */
struct GaloisReport {
    bool irreducible = false;
    BigInt disc;
    bool disc_is_square = false;
    IntPoly resolvent;
    bool resolvent_irreducible = false;
    GaloisGroup group = GaloisGroup::NOT_IRREDUCIBLE;
};

GaloisReport galois_group(const QuarticShape& h);

}  // namespace monoquart

#endif
